#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricinv/cone.hpp"
#include "toricinv/smith.hpp"

namespace toricinv {

// Canonical representative of a divisor class: torsion components reduced into
// [0, factor), then the free components verbatim.
using ClassElement = IVec;

// Cl(A) = Z^n / image of the lattice-to-divisor map x -> (lambda_1(x), ...,
// lambda_n(x)), presented through the Smith form of the generator matrix.
class ClassGroup {
  public:
    explicit ClassGroup(const ConeSpec& c) {
        const IntMatrix& g = c.generators();
        n_ = g.rows();
        SmithForm f = smith_normal_form(g);
        u_ = f.u;
        std::size_t k = std::min(g.rows(), g.cols());
        for (std::size_t i = 0; i < n_; ++i) {
            Int di = i < k ? f.d(i, i) : Int(0);
            if (di == 0)
                free_rows_.push_back(i);
            else if (di > 1) {
                torsion_rows_.push_back(i);
                torsion_.push_back(di);
            }
        }
    }

    std::size_t free_rank() const { return free_rows_.size(); }
    const IVec& torsion() const { return torsion_; }
    bool trivial() const { return free_rows_.empty() && torsion_.empty(); }

    // project(a) == project(b) iff a - b lies in the image of the lambda map.
    ClassElement project(const IVec& a) const {
        if (a.size() != n_) throw DimensionMismatch("divisor vector has wrong length");
        IVec y = u_.apply(a);
        ClassElement rep;
        rep.reserve(torsion_rows_.size() + free_rows_.size());
        for (std::size_t t = 0; t < torsion_rows_.size(); ++t) {
            Int r = y[torsion_rows_[t]] % torsion_[t];
            if (r < 0) r += torsion_[t];
            rep.push_back(r);
        }
        for (std::size_t fr : free_rows_) rep.push_back(y[fr]);
        return rep;
    }

    ClassElement identity() const {
        return ClassElement(torsion_rows_.size() + free_rows_.size(), Int(0));
    }

    // Group addition on canonical representatives.
    ClassElement add(const ClassElement& a, const ClassElement& b) const {
        ClassElement r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] + b[i];
            if (i < torsion_.size()) {
                r[i] %= torsion_[i];
                if (r[i] < 0) r[i] += torsion_[i];
            }
        }
        return r;
    }

    bool is_identity(const ClassElement& e) const {
        for (const Int& x : e)
            if (x != 0) return false;
        return true;
    }

    std::string describe() const {
        if (trivial()) return "0";
        std::string s;
        if (free_rows_.size() == 1)
            s = "Z";
        else if (!free_rows_.empty())
            s = "Z^" + std::to_string(free_rows_.size());
        for (const Int& t : torsion_) s += (s.empty() ? "" : " x ") + ("Z/" + t.str());
        return s;
    }

  private:
    std::size_t n_ = 0;
    IntMatrix u_;
    std::vector<std::size_t> torsion_rows_;
    std::vector<std::size_t> free_rows_;
    IVec torsion_;
};

inline ClassGroup class_group(const ConeSpec& c) { return ClassGroup(c); }

// True iff a = lambda(m) for some m in M; the witness m is returned.
inline std::optional<IVec> principal_witness(const ConeSpec& c, const IVec& a) {
    if (a.size() != c.num_generators()) throw DimensionMismatch("divisor vector has wrong length");
    return solve_integer(c.generators(), a);
}

inline bool is_principal(const ConeSpec& c, const IVec& a) {
    return principal_witness(c, a).has_value();
}

struct GorensteinData {
    bool is_gorenstein = false;
    std::optional<unsigned> q_index;  // least r >= 1 with r*(1,...,1) principal
    ClassElement canonical_class;
};

// Canonical divisor data: omega = D(1,...,1). The index search runs r up to
// the product of the torsion invariant factors (the group exponent divides
// it) or the cap when the class group has a free part.
inline GorensteinData gorenstein_data(const ConeSpec& c, const ClassGroup& cl, unsigned cap = 64) {
    GorensteinData g;
    IVec ones(c.num_generators(), Int(1));
    g.canonical_class = cl.project(ones);
    g.is_gorenstein = cl.is_identity(g.canonical_class);
    if (g.is_gorenstein) {
        g.q_index = 1;
        return g;
    }
    Int r_max;
    if (cl.free_rank() > 0) {
        // nonzero free component means no multiple can be principal
        std::size_t nt = cl.torsion().size();
        for (std::size_t i = nt; i < g.canonical_class.size(); ++i)
            if (g.canonical_class[i] != 0) return g;  // q_index absent
        r_max = cap;
    } else {
        r_max = 1;
        for (const Int& t : cl.torsion()) r_max *= t;
        if (r_max > cap) r_max = cap;
    }
    for (Int r = 2; r <= r_max; ++r) {
        IVec ra(c.num_generators(), Int(r));
        if (cl.is_identity(cl.project(ra))) {
            g.q_index = static_cast<unsigned>(r);
            return g;
        }
    }
    throw IndexNotFound("Q-Gorenstein index exceeds cap " + std::to_string(cap));
}

inline GorensteinData gorenstein_data(const ConeSpec& c, unsigned cap = 64) {
    ClassGroup cl(c);
    return gorenstein_data(c, cl, cap);
}

}  // namespace toricinv
