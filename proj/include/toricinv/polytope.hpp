#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "toricinv/cone.hpp"
#include "toricinv/linear.hpp"
#include "toricinv/rational.hpp"

namespace toricinv {

// Slab constraint lower <= <normal, x> <= upper with integer normal and exact
// rational bounds.
struct Halfspace {
    IVec normal;
    Rational lower;
    Rational upper;
};

// Bounded rational polytope in H-representation, with lazily computed exact
// V-representation. Bounded means the normals span R^d (both bounds of every
// slab are finite by construction), so the recession cone is trivial.
class Polytope {
  public:
    Polytope(std::size_t dim, std::vector<Halfspace> halfspaces)
        : dim_(dim), halfspaces_(std::move(halfspaces)) {}

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

    bool contains(const QVec& x) const {
        for (const auto& h : halfspaces_) {
            Rational s = 0;
            for (std::size_t j = 0; j < dim_; ++j) s += Rational(h.normal[j]) * x[j];
            if (s < h.lower || s > h.upper) return false;
        }
        return true;
    }

    // All vertices, lexicographically sorted. Each vertex is the unique
    // solution of dim() active constraint planes, filtered for feasibility
    // and deduplicated.
    const std::vector<QVec>& vertices() const {
        if (!vertices_) enumerate_vertices();
        return *vertices_;
    }

    friend struct VolumeComputer;

  private:
    struct Plane {
        IVec normal;
        Rational offset;  // <normal, x> = offset
    };

    std::vector<Plane> planes() const {
        std::vector<Plane> ps;
        for (const auto& h : halfspaces_) {
            ps.push_back({h.normal, h.lower});
            if (h.upper != h.lower) ps.push_back({h.normal, h.upper});
        }
        return ps;
    }

    void check_bounded() const {
        IntMatrix normals(halfspaces_.size(), dim_);
        for (std::size_t i = 0; i < halfspaces_.size(); ++i)
            for (std::size_t j = 0; j < dim_; ++j) normals(i, j) = halfspaces_[i].normal[j];
        if (rank(normals) != dim_)
            throw UnboundedPolytope("halfspace normals do not span the ambient space");
    }

    void enumerate_vertices() const {
        check_bounded();
        std::vector<Plane> ps = planes();
        std::size_t m = ps.size(), d = dim_;
        std::set<QVec> found;
        std::vector<std::size_t> idx(d);
        // iterate d-subsets of the planes
        std::vector<std::size_t> c(d);
        for (std::size_t i = 0; i < d; ++i) c[i] = i;
        if (m >= d) {
            while (true) {
                QMatrix a(d, QVec(d, Rational(0)));
                QVec b(d, Rational(0));
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t j = 0; j < d; ++j) a[i][j] = Rational(ps[c[i]].normal[j]);
                    b[i] = ps[c[i]].offset;
                }
                if (auto x = solve_square(a, b); x && contains(*x)) found.insert(*x);
                // next combination
                std::size_t k = d;
                while (k > 0 && c[k - 1] == m - d + (k - 1)) --k;
                if (k == 0) break;
                ++c[k - 1];
                for (std::size_t i = k; i < d; ++i) c[i] = c[i - 1] + 1;
            }
        }
        vertices_ = std::vector<QVec>(found.begin(), found.end());
    }

    std::size_t dim_;
    std::vector<Halfspace> halfspaces_;
    mutable std::optional<std::vector<QVec>> vertices_;
};

struct VolumeResult {
    Rational volume;
    std::size_t vertex_count = 0;
    std::size_t triangulation_size = 0;
};

// Exact Euclidean volume by recursion over the face lattice: cone over the
// lexicographically smallest vertex of every facet that misses it, with the
// base case a segment. Facets of a face are always cut out by one of the
// defining planes, so the recursion only ever consults the global plane list.
struct VolumeComputer {
    const Polytope& p;
    std::vector<Polytope::Plane> planes;
    std::vector<QVec> verts;

    explicit VolumeComputer(const Polytope& poly) : p(poly) {
        planes = p.planes();
        verts = p.vertices();
    }

    using Face = std::vector<std::size_t>;  // sorted vertex indices
    // simplices are (k+1)-tuples of vertex indices; the memo key includes the
    // consulted level: the same vertex set can be inspected both as a
    // candidate (k-1)-face of one parent and at its true lower dimension
    std::map<std::pair<std::size_t, Face>, std::vector<Face>> memo;

    bool on_plane(std::size_t vi, const Polytope::Plane& pl) const {
        Rational s = 0;
        for (std::size_t j = 0; j < p.dim(); ++j) s += Rational(pl.normal[j]) * verts[vi][j];
        return s == pl.offset;
    }

    std::size_t lex_min(const Face& f) const {
        std::size_t best = f[0];
        for (std::size_t vi : f)
            if (verts[vi] < verts[best]) best = vi;
        return best;
    }

    const std::vector<Face>& triangulate(const Face& face, std::size_t k) {
        auto key = std::make_pair(k, face);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Face> simplices;
        if (k == 1) {
            std::size_t lo = face.front(), hi = face.front();
            for (std::size_t vi : face) {
                if (verts[vi] < verts[lo]) lo = vi;
                if (verts[hi] < verts[vi]) hi = vi;
            }
            if (lo != hi) simplices.push_back({lo, hi});
        } else if (face.size() > k) {
            std::size_t w = lex_min(face);
            std::set<Face> seen;
            for (const auto& pl : planes) {
                Face sub;
                bool w_on = false;
                for (std::size_t vi : face) {
                    if (on_plane(vi, pl)) {
                        if (vi == w) w_on = true;
                        sub.push_back(vi);
                    }
                }
                if (w_on || sub.empty() || sub.size() == face.size()) continue;
                if (!seen.insert(sub).second) continue;
                for (const auto& s : triangulate(sub, k - 1)) {
                    Face cone;
                    cone.reserve(s.size() + 1);
                    cone.push_back(w);
                    cone.insert(cone.end(), s.begin(), s.end());
                    simplices.push_back(std::move(cone));
                }
            }
        }
        return memo.emplace(std::move(key), std::move(simplices)).first->second;
    }

    VolumeResult run() {
        VolumeResult r;
        r.vertex_count = verts.size();
        r.volume = 0;
        std::size_t d = p.dim();
        if (verts.size() < d + 1) return r;
        Face all(verts.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        Int dfact = factorial(static_cast<unsigned>(d));
        for (const auto& s : triangulate(all, d)) {
            // |det| of the edge matrix, over d! -- exact simplex volume
            QMatrix edges(d, QVec(d));
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                for (std::size_t j = 0; j < d; ++j)
                    edges[i][j] = verts[s[i + 1]][j] - verts[s[0]][j];
            Rational det = rational_det(edges);
            if (det != 0) {
                r.volume += abs(det) / dfact;
                ++r.triangulation_size;
            }
        }
        return r;
    }

    static Rational rational_det(QMatrix a) {
        std::size_t n = a.size();
        Rational det = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != k) {
                std::swap(a[piv], a[k]);
                det = -det;
            }
            det *= a[k][k];
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k] == 0) continue;
                Rational f = a[i][k] / a[k][k];
                for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            }
        }
        return det;
    }
};

// Exact rational volume. Degenerate (lower-dimensional) polytopes report 0.
inline VolumeResult volume(const Polytope& p) {
    VolumeComputer vc(p);
    return vc.run();
}

// P<v_1,...,v_n> = { x : 0 <= lambda_i(x) <= 1 }. Defined for any finite
// vector set given as rows; no minimality of the set is required.
inline Polytope dual_zonotope(const IntMatrix& rows) {
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < rows.rows(); ++i)
        hs.push_back({rows.row(i), Rational(0), Rational(1)});
    return Polytope(rows.cols(), std::move(hs));
}

inline Polytope dual_zonotope(const ConeSpec& c) { return dual_zonotope(c.generators()); }

// F-signature: the volume of the dual zonotope of the cone.
inline Rational fsignature(const ConeSpec& c) {
    return volume(dual_zonotope(c)).volume;
}

}  // namespace toricinv
