#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "toricinv/int_matrix.hpp"

namespace toricinv {

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix v;  // cols x cols, unimodular
};

namespace detail {

// Locate the nonzero entry of smallest absolute value in the trailing block
// starting at (t, t); ties broken by (row, col) order so transforms are
// reproducible.
inline bool smallest_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

// Smith normal form with transforms: u * a * v = d. Pivoting always reduces by
// the smallest-absolute-value nonzero entry of the working block.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw DimensionMismatch("smith_normal_form of empty matrix");
    std::size_t n = a.rows(), m = a.cols();
    SmithForm f{IntMatrix::identity(n), a, IntMatrix::identity(m)};
    IntMatrix& d = f.d;
    std::size_t steps = std::min(n, m);

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!detail::smallest_pivot(d, t, pi, pj)) break;  // trailing block is zero
        d.swap_rows(t, pi);
        f.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        f.v.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            // Reduce column t below the pivot.
            for (std::size_t i = t + 1; i < n; ++i) {
                if (d(i, t) == 0) continue;
                Int q = floor_div(d(i, t), d(t, t));
                if (q != 0) {
                    for (std::size_t j = 0; j < m; ++j) d(i, j) -= q * d(t, j);
                    for (std::size_t j = 0; j < n; ++j) f.u(i, j) -= q * f.u(t, j);
                }
                if (d(i, t) != 0) {
                    // remainder is a smaller pivot; promote it
                    d.swap_rows(t, i);
                    f.u.swap_rows(t, i);
                    clean = false;
                }
            }
            // Reduce row t to the right of the pivot.
            for (std::size_t j = t + 1; j < m; ++j) {
                if (d(t, j) == 0) continue;
                Int q = floor_div(d(t, j), d(t, t));
                if (q != 0) {
                    for (std::size_t i = 0; i < n; ++i) d(i, j) -= q * d(i, t);
                    for (std::size_t i = 0; i < m; ++i) f.v(i, j) -= q * f.v(i, t);
                }
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    f.v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide the whole trailing block; if not, fold the
            // offending row in and restart the reduction.
            for (std::size_t i = t + 1; i < n && clean; ++i)
                for (std::size_t j = t + 1; j < m && clean; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        for (std::size_t jj = 0; jj < m; ++jj) d(t, jj) += d(i, jj);
                        for (std::size_t jj = 0; jj < n; ++jj) f.u(t, jj) += f.u(i, jj);
                        clean = false;
                    }
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < m; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < n; ++j) f.u(t, j) = -f.u(t, j);
        }
    }
    return f;
}

inline IVec smith_diagonal(const SmithForm& f) {
    std::size_t k = std::min(f.d.rows(), f.d.cols());
    IVec diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = f.d(i, i);
    return diag;
}

// Integer solution of a * x = b, decided through the Smith form: with
// u a v = d, the system is d y = u b with x = v y. Returns a witness or
// nullopt when no integer solution exists.
inline std::optional<IVec> solve_integer(const IntMatrix& a, const IVec& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve_integer shape mismatch");
    SmithForm f = smith_normal_form(a);
    IVec ub = f.u.apply(b);
    std::size_t k = std::min(a.rows(), a.cols());
    IVec y(a.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int di = i < k ? f.d(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    return f.v.apply(y);
}

}  // namespace toricinv
