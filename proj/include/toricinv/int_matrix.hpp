#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "toricinv/errors.hpp"
#include "toricinv/rational.hpp"

namespace toricinv {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
            for (long long x : r) data_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    IVec apply(const IVec& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        IVec y(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    IVec row(std::size_t i) const {
        IVec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const {
        IntMatrix s(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                s(i, j) = (*this)(row_idx[i], col_idx[j]);
        return s;
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j)
                out += (j ? "," : "") + (*this)(i, j).str();
        }
        return out + "]";
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Exact determinant by Bareiss fraction-free elimination. All intermediate
// divisions are exact, so entries stay integral (no rational blow-up).
inline Int det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("det of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Rank over Q via fraction-free elimination.
inline std::size_t rank(const IntMatrix& a) {
    IntMatrix m = a;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i)
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
        for (std::size_t i = r + 1; i < rows; ++i) m(i, c) = 0;
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Inverse of a unimodular matrix (|det| = 1); integral by the adjugate formula.
inline IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = u.rows();
    Int d = det(u);
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    IntMatrix inv(n, n);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> ri, ci;
            for (std::size_t k : all) {
                if (k != j) ri.push_back(k);
            }
            for (std::size_t k : all) {
                if (k != i) ci.push_back(k);
            }
            Int cof = det(u.submatrix(ri, ci));
            inv(i, j) = (((i + j) % 2 == 0) ? cof : -cof) / d;
        }
    return inv;
}

inline Int gcd_vec(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

}  // namespace toricinv
