#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricinv/int_matrix.hpp"

namespace toricinv {

using QMatrix = std::vector<QVec>;

// Unique solution of a square rational system, or nullopt when singular.
inline std::optional<QVec> solve_square(QMatrix a, QVec b) {
    std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    QVec x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

namespace detail {

// One Fourier-Motzkin elimination step on a system of constraints
// sum_j c_j t_j + c0 >= 0, removing variable `var`.
inline std::vector<QVec> fm_eliminate(const std::vector<QVec>& cons, std::size_t var) {
    std::vector<QVec> pos, neg, out;
    for (const auto& c : cons) {
        if (c[var] > 0)
            pos.push_back(c);
        else if (c[var] < 0)
            neg.push_back(c);
        else
            out.push_back(c);
    }
    for (const auto& p : pos)
        for (const auto& q : neg) {
            QVec r(p.size(), Rational(0));
            // p[var] * q - q[var] * p has zero coefficient at var and keeps
            // the inequality direction (p[var] > 0 > q[var]).
            for (std::size_t j = 0; j < p.size(); ++j) r[j] = p[var] * q[j] - q[var] * p[j];
            out.push_back(std::move(r));
        }
    // drop duplicates after normalizing by the leading positive coefficient
    for (auto& c : out) {
        Rational scale = 0;
        for (const auto& x : c)
            if (x != 0) {
                scale = abs(x);
                break;
            }
        if (scale != 0)
            for (auto& x : c) x /= scale;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// Exact membership test w in cone(gens) over Q: does a nonnegative rational
// combination of the generators equal w? Decided by Fourier-Motzkin
// elimination on the multiplier variables, so it is correct for degenerate
// and lower-dimensional cones alike.
inline bool in_cone(const IVec& w, const std::vector<IVec>& gens) {
    if (gens.empty()) {
        for (const Int& x : w)
            if (x != 0) return false;
        return true;
    }
    std::size_t d = w.size(), k = gens.size();
    // constraints over multipliers t_1..t_k, layout [t_1..t_k | const]
    std::vector<QVec> cons;
    for (std::size_t c = 0; c < d; ++c) {
        QVec eq_le(k + 1, Rational(0)), eq_ge(k + 1, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            eq_ge[j] = Rational(gens[j][c]);
            eq_le[j] = -Rational(gens[j][c]);
        }
        eq_ge[k] = -Rational(w[c]);  // sum t_j g_jc - w_c >= 0
        eq_le[k] = Rational(w[c]);   // w_c - sum t_j g_jc >= 0
        cons.push_back(std::move(eq_ge));
        cons.push_back(std::move(eq_le));
    }
    for (std::size_t j = 0; j < k; ++j) {
        QVec nn(k + 1, Rational(0));
        nn[j] = 1;
        cons.push_back(std::move(nn));
    }
    for (std::size_t j = 0; j < k; ++j) cons = detail::fm_eliminate(cons, j);
    for (const auto& c : cons)
        if (c[k] < 0) return false;  // constant constraint violated
    return true;
}

}  // namespace toricinv
