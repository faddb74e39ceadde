#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricinv/interval.hpp"
#include "toricinv/rational.hpp"

namespace toricinv {

// v_{s,d}: volume of { x in [0,1]^d : sum x_i <= s }, the cube-corner slice.
// Inclusion-exclusion over the corners cut off by the simplex; clamped to
// [0,1] outside 0 <= s <= d.
inline Rational cube_corner_volume(const Rational& s, unsigned d) {
    if (d == 0) throw Error("cube_corner_volume needs d >= 1");
    if (s <= 0) return 0;
    if (s >= Rational(d)) return 1;
    Int fs = rat_floor(s);
    unsigned top = static_cast<unsigned>(fs.convert_to<long long>());
    Rational v = 0;
    for (unsigned n = 0; n <= top; ++n) {
        Rational term = rat_pow(s - n, d) / Rational(factorial(d - n) * factorial(n));
        v += (n % 2 == 0) ? term : -term;
    }
    return v;
}

// Monotone interval image of the cube-corner volume.
inline RationalInterval cube_corner_volume(const RationalInterval& s, unsigned d) {
    return {cube_corner_volume(s.lo, d), cube_corner_volume(s.hi, d)};
}

struct BoundContext {
    Rational e;        // multiplicity
    unsigned d = 0;    // dimension
    unsigned r = 0;    // generator count bound mu(I/J*)
    Rational s;        // cut parameter (point value)
    std::vector<Rational> t;  // valuations t_i; empty means all 1
};

// Volume lower bound e(I) (v_{s,d} - sum_i v_{s - t_i, d}); with no t list
// supplied every t_i defaults to 1.
inline Rational ae_bound(const BoundContext& ctx) {
    if (!ctx.t.empty() && ctx.t.size() != ctx.r) throw DimensionMismatch("t list length must equal r");
    Rational acc = cube_corner_volume(ctx.s, ctx.d);
    for (unsigned i = 0; i < ctx.r; ++i) {
        Rational ti = ctx.t.empty() ? Rational(1) : ctx.t[i];
        acc -= cube_corner_volume(ctx.s - ti, ctx.d);
    }
    return ctx.e * acc;
}

// Interval version for irrational cut parameters.
inline RationalInterval ae_bound_interval(const Rational& e, unsigned d, unsigned r,
                                          const RationalInterval& s,
                                          const std::vector<Rational>& t = {}) {
    if (!t.empty() && t.size() != r) throw DimensionMismatch("t list length must equal r");
    RationalInterval acc = cube_corner_volume(s, d);
    for (unsigned i = 0; i < r; ++i) {
        Rational ti = t.empty() ? Rational(1) : t[i];
        acc = acc - cube_corner_volume(RationalInterval(s.lo - ti, s.hi - ti), d);
    }
    return RationalInterval(e) * acc;
}

enum class BoundVerdict { Holds, HoldsWithinTolerance, Violated, NotApplicable };

inline std::string to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Holds: return "Holds";
        case BoundVerdict::HoldsWithinTolerance: return "HoldsWithinTolerance";
        case BoundVerdict::Violated: return "Violated";
        default: return "NotApplicable";
    }
}

// Exact verification of the strict lower-bound step behind the dimension >= 3
// colength inequality: at s = 1 + 1/e with r = e - 2,
//   d! e^d (v_s - r v_{s-1}) = (e+1)^d - d - e + 2 > e^{d-1} (e + d).
// Both the closed form and the inequality are checked in exact arithmetic.
inline BoundVerdict higher_check(unsigned e, unsigned d) {
    if (e < 2 || d < 3) return BoundVerdict::NotApplicable;
    Rational s = 1 + Rational(1, e);
    Rational lhs = Rational(factorial(d)) * rat_pow(Rational(e), d) *
                   (cube_corner_volume(s, d) - Rational(e - 2) * cube_corner_volume(s - 1, d));
    Rational closed = rat_pow(Rational(e) + 1, d) - Rational(d) - Rational(e) + 2;
    if (lhs != closed) return BoundVerdict::Violated;
    Rational rhs = rat_pow(Rational(e), d - 1) * (Rational(e) + Rational(d));
    return lhs > rhs ? BoundVerdict::Holds : BoundVerdict::Violated;
}

// Eulerian numbers by the standard recurrence
// A(n,m) = (n-m) A(n-1,m-1) + (m+1) A(n-1,m).
class EulerianTable {
  public:
    explicit EulerianTable(unsigned d_max) : rows_(d_max + 1) {
        rows_[0] = {};
        if (d_max >= 1) rows_[1] = {Int(1)};
        for (unsigned n = 2; n <= d_max; ++n) {
            rows_[n].assign(n, Int(0));
            for (unsigned m = 0; m < n; ++m) {
                Int left = (m >= 1) ? Int(n - m) * rows_[n - 1][m - 1] : Int(0);
                Int right = (m < n - 1) ? Int(m + 1) * rows_[n - 1][m] : Int(0);
                rows_[n][m] = left + right;
            }
        }
    }
    Int at(unsigned d, unsigned k) const {
        if (d == 0 || d >= rows_.size() || k >= d) throw Error("Eulerian index out of range");
        return rows_[d][k];
    }

  private:
    std::vector<std::vector<Int>> rows_;
};

inline Int eulerian(unsigned d, unsigned k) {
    if (d == 0 || k >= d) throw Error("Eulerian index out of range");
    return EulerianTable(d).at(d, k);
}

// Volume of { x in [0,1]^d : k <= sum x_i <= k+1 }, as A(d,k)/d!.
inline Rational slice_volume(unsigned d, unsigned k) {
    return Rational(eulerian(d, k), factorial(d));
}

// All (d, k) with A(d,k)/d! > 1/2 for d up to d_max.
inline std::vector<std::pair<unsigned, unsigned>> euler_lemma_scan(unsigned d_max) {
    std::vector<std::pair<unsigned, unsigned>> hits;
    EulerianTable tab(d_max);
    Rational half(1, 2);
    for (unsigned d = 1; d <= d_max; ++d)
        for (unsigned k = 0; k < d; ++k)
            if (Rational(tab.at(d, k), factorial(d)) > half) hits.emplace_back(d, k);
    return hits;
}

// Coefficients c_d of sec x + tan x = 1 + sum c_d x^d, via the boustrophedon
// recurrence for the zigzag numbers E_d (c_d = E_d / d!).
inline QVec zigzag_constants(unsigned d_max) {
    std::vector<std::vector<Int>> t(d_max + 1);
    t[0] = {Int(1)};
    for (unsigned n = 1; n <= d_max; ++n) {
        t[n].assign(n + 1, Int(0));
        for (unsigned k = 1; k <= n; ++k) t[n][k] = t[n][k - 1] + t[n - 1][n - k];
    }
    QVec c(d_max + 1);
    c[0] = 0;
    for (unsigned n = 1; n <= d_max; ++n) c[n] = Rational(t[n][n], factorial(n));
    return c;
}

struct ConjectureRow {
    unsigned d = 0;
    Rational gessel_monsky;  // 1 + c_d
    Rational rhs;            // 2^m/(2^m - 1) for d = 2m-1, (2^m + 1)/2^m for d = 2m
};

// Comparison table of the two conjectured Hilbert-Kunz lower bounds.
inline std::vector<ConjectureRow> conjecture_table(unsigned d_max) {
    QVec c = zigzag_constants(d_max);
    std::vector<ConjectureRow> rows;
    for (unsigned d = 1; d <= d_max; ++d) {
        ConjectureRow row;
        row.d = d;
        row.gessel_monsky = 1 + c[d];
        unsigned m = (d + 1) / 2;
        Int p2 = int_pow(Int(2), m);
        row.rhs = (d % 2 == 1) ? Rational(p2, p2 - 1) : Rational(p2 + 1, p2);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Conjectural closed forms at p = 2, printed alongside the table but never
// asserted anywhere.
inline std::string conjecture_table_footnote() {
    return "p=2: even d=2m has ell(A/m^[2^e]) = (2^m+1)/2^m * 2^(de); "
           "odd d=2m-1 conjecturally ell(A/m^[2^e]) = 2^m/(2^m-1) * 2^(de) - 2^((m-1)e)/(2^m-1); "
           "d=4 known value depends on p: (29p^2+15)/(24p^2+12)";
}

// Optimized three-dimensional bound at the critical cut s+ = (e+2+sqrt(e+2))/(e+1):
// (e/6) s+^2, as an enclosing interval.
inline RationalInterval optimal_bound_crit(const Rational& e, const Rational& eps = Rational(1, 1000000000)) {
    RationalInterval root = sqrt_interval(e + 2, eps);
    RationalInterval splus = (RationalInterval(e + 2) + root) / RationalInterval(e + 1);
    return RationalInterval(e / 6) * interval_square(splus);
}

// Non-minimal-multiplicity refinement: (1/6)(e + 3 + 2/e + (2 + 2/e) sqrt(e+1)).
inline RationalInterval optimal_bound_refined(const Rational& e, const Rational& eps = Rational(1, 1000000000)) {
    RationalInterval root = sqrt_interval(e + 1, eps);
    RationalInterval val = RationalInterval(e + 3 + Rational(2) / e) +
                           RationalInterval(2 + Rational(2) / e) * root;
    return val / RationalInterval(6);
}

// Certifies bound > target by interval separation, narrowing the sqrt width
// until the verdict is clear or the precision cap is reached.
template <typename BoundFn>
inline BoundVerdict separated_above(BoundFn&& bound, const Rational& target,
                                    unsigned max_refinements = 12) {
    Rational eps(1, 1000000000);
    for (unsigned i = 0; i < max_refinements; ++i) {
        RationalInterval b = bound(eps);
        if (b.certainly_greater(target)) return BoundVerdict::Holds;
        if (b.certainly_less(target)) return BoundVerdict::Violated;
        eps /= 1000;
    }
    return BoundVerdict::HoldsWithinTolerance;
}

}  // namespace toricinv
