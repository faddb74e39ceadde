#pragma once

#include <string>

#include "toricinv/rational.hpp"

namespace toricinv {

// Closed interval with exact rational endpoints. Ring operations are exact
// (no rounding); width only enters through sqrt_interval, whose target width
// is an explicit argument.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(Rational point) : lo(point), hi(point) {}
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("interval endpoints out of order");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    RationalInterval operator+(const RationalInterval& o) const {
        return {lo + o.lo, hi + o.hi};
    }
    RationalInterval operator-(const RationalInterval& o) const {
        return {lo - o.hi, hi - o.lo};
    }
    RationalInterval operator*(const RationalInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rational mn = a, mx = a;
        for (const Rational& x : {b, c, d}) {
            if (x < mn) mn = x;
            if (x > mx) mx = x;
        }
        return {mn, mx};
    }
    RationalInterval operator/(const RationalInterval& o) const {
        if (o.lo <= 0 && o.hi >= 0) throw Error("interval division by interval containing zero");
        return *this * RationalInterval(Rational(1) / o.hi, Rational(1) / o.lo);
    }

    // Strict comparison certified by separation of the endpoints.
    bool certainly_greater(const Rational& x) const { return lo > x; }
    bool certainly_less(const Rational& x) const { return hi < x; }

    std::string str() const { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }
};

inline RationalInterval interval_square(const RationalInterval& x) { return x * x; }

// Interval of width <= eps containing sqrt(x), by bisection from an integer
// bracket. Endpoints are rational; x >= 0, eps > 0 required.
inline RationalInterval sqrt_interval(const Rational& x, const Rational& eps) {
    if (x < 0) throw Error("sqrt_interval of negative value");
    if (eps <= 0) throw Error("sqrt_interval needs positive width target");
    if (x == 0) return RationalInterval(Rational(0));
    // integer bracket: lo^2 <= x <= hi^2
    Rational lo = 0, hi = 1;
    while (hi * hi < x) hi *= 2;
    if (hi * hi == x) return RationalInterval(hi);
    if (hi > 1) lo = hi / 2;
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        Rational sq = mid * mid;
        if (sq == x) return RationalInterval(mid);
        (sq < x ? lo : hi) = mid;
    }
    return {lo, hi};
}

}  // namespace toricinv
