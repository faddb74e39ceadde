#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "toricinv/errors.hpp"

namespace toricinv {

// Arbitrary-precision integers and rationals (GMP-backed). mpq_rational keeps
// values in lowest terms with positive denominator, which is exactly the
// canonical form every exact invariant in this library relies on.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rational>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Floor division a/b for integers, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

inline Int rat_floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }
inline Int rat_ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= Int(n - i);
        b /= Int(i + 1);
    }
    return b;
}

inline Rational rat_pow(const Rational& x, unsigned e) {
    Rational r = 1;
    Rational base = x;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Int int_pow(const Int& x, unsigned e) {
    Int r = 1;
    Int base = x;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// Parses "p", "p/q", or a plain decimal like "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in rational literal: " + s);
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int num(digits);
        Int den = int_pow(Int(10), static_cast<unsigned>(s.size() - dot - 1));
        return Rational(num, den);
    }
    return Rational(Int(s));
}

// Reduced fraction "p/q" ("p" when q = 1).
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Correctly rounded (nearest, ties away from zero) decimal with `digits`
// places after the point.
inline std::string to_decimal(const Rational& q, unsigned digits) {
    Int scale = int_pow(Int(10), digits);
    bool neg = q < 0;
    Rational scaled = abs(q) * scale;
    // nearest integer to |q|*scale, ties rounded up (away from zero)
    Int mag = rat_floor(scaled + Rational(1, 2));
    Int ip = mag / scale;
    Int fp = mag % scale;
    std::string frac_digits = fp.str();
    if (frac_digits.size() < digits) frac_digits.insert(0, digits - frac_digits.size(), '0');
    std::string out = (neg && mag != 0 ? "-" : "") + ip.str();
    if (digits > 0) out += "." + frac_digits;
    return out;
}

}  // namespace toricinv
