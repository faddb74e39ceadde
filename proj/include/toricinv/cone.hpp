#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricinv/int_matrix.hpp"
#include "toricinv/linear.hpp"

namespace toricinv {

// A pointed full-dimensional rational cone, given by the rows v_1..v_n of its
// generator matrix. The dual monoid sigma_dual cap M (M = Z^d) is the toric
// ring's exponent monoid; lambda_i(x) = <x, v_i> are the facet valuations.
//
// Instances are immutable after validation; every operation downstream is a
// pure function of the spec.
class ConeSpec {
  public:
    std::size_t dim() const { return d_; }
    std::size_t num_generators() const { return gens_.rows(); }
    const IntMatrix& generators() const { return gens_; }
    IVec generator(std::size_t i) const { return gens_.row(i); }

    // lambda(x) = (lambda_1(x), ..., lambda_n(x))
    IVec lambda(const IVec& x) const { return gens_.apply(x); }
    Int lambda_i(std::size_t i, const IVec& x) const {
        Int s = 0;
        for (std::size_t j = 0; j < d_; ++j) s += gens_(i, j) * x[j];
        return s;
    }
    bool in_monoid(const IVec& x) const {
        for (std::size_t i = 0; i < gens_.rows(); ++i)
            if (lambda_i(i, x) < 0) return false;
        return true;
    }

    friend ConeSpec validate_cone(const IntMatrix& gens);

  private:
    ConeSpec(std::size_t d, IntMatrix gens) : d_(d), gens_(std::move(gens)) {}
    std::size_t d_;
    IntMatrix gens_;
};

// Validates the generator matrix and returns the cone, or throws InvalidCone
// with a message listing every violated invariant:
//   - each row primitive (gcd of entries 1),
//   - rows of full rank d,
//   - generating set minimal (no row inside the cone of the others),
//   - cone pointed (-v_j never inside the cone of the remaining rows).
inline ConeSpec validate_cone(const IntMatrix& gens) {
    std::vector<std::string> violations;
    std::size_t n = gens.rows(), d = gens.cols();
    if (n == 0 || d == 0) throw InvalidCone("cone validation failed: empty generator matrix");

    for (std::size_t i = 0; i < n; ++i) {
        IVec row = gens.row(i);
        Int g = gcd_vec(row);
        if (g != 1) violations.push_back("NonPrimitiveRow(" + std::to_string(i) + ")");
    }
    bool full_rank = rank(gens) == d;
    if (!full_rank) violations.push_back("RankDeficient");

    std::vector<IVec> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = gens.row(i);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<IVec> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(rows[j]);
        if (in_cone(rows[i], others)) violations.push_back("RedundantGenerator(" + std::to_string(i) + ")");
    }
    // pointed: no -v_j in the cone of all generators (equivalently, no
    // nontrivial nonnegative combination of the rows sums to zero)
    bool pointed = true;
    for (std::size_t i = 0; i < n && pointed; ++i) {
        IVec neg(d);
        for (std::size_t j = 0; j < d; ++j) neg[j] = -rows[i][j];
        std::vector<IVec> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(rows[j]);
        if (in_cone(neg, others)) pointed = false;
    }
    if (!pointed) violations.push_back("NotPointed");

    if (!violations.empty()) {
        std::string msg = "cone validation failed:";
        for (const auto& v : violations) msg += " " + v;
        throw InvalidCone(msg);
    }
    return ConeSpec(d, gens);
}

}  // namespace toricinv
