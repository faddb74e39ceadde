#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "toricinv/bounds.hpp"
#include "toricinv/cone.hpp"
#include "toricinv/polytope.hpp"

namespace toricinv {

struct MinorWitness {
    bool all_unimodular = false;
    std::vector<std::size_t> offending;  // generator subset with |det| != 1
    Int offending_det;
};

// Checks |det| = 1 for every d x d minor of the generator matrix. A failing
// subset J caps the F-signature at 1/|det| <= 1/2 via the slab volume of
// P<v_J>, so the witness is returned for reporting.
inline MinorWitness minors_unimodular(const ConeSpec& c) {
    std::size_t n = c.num_generators(), d = c.dim();
    MinorWitness w;
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    std::vector<std::size_t> all_cols(d);
    for (std::size_t j = 0; j < d; ++j) all_cols[j] = j;
    while (true) {
        Int m = det(c.generators().submatrix(comb, all_cols));
        if (m != 1 && m != -1) {
            w.all_unimodular = false;
            w.offending = comb;
            w.offending_det = m;
            return w;
        }
        std::size_t k = d;
        while (k > 0 && comb[k - 1] == n - d + (k - 1)) --k;
        if (k == 0) break;
        ++comb[k - 1];
        for (std::size_t i = k; i < d; ++i) comb[i] = comb[i - 1] + 1;
    }
    w.all_unimodular = true;
    return w;
}

struct SearchSpace {
    unsigned d = 3;
    unsigned n = 4;
    unsigned entry_bound = 1;  // max |entry| of the non-identity generators
};

struct ClassifiedCone {
    IntMatrix generators;  // canonical [I_d | B] form, rows
    Rational fsig;
    std::size_t vertex_count = 0;
    std::size_t facet_count = 0;
};

namespace detail {

// Canonical form of an [I_d | B] generator set: permuting the coordinates
// permutes the identity rows among themselves (a relabeling) and acts on the
// entries of the extra rows, so minimize the sorted extra-row block
// lexicographically over all coordinate permutations. Full GL_d(Z)-orbit
// canonicalization is out of scope; the (fsig, vertex count, facet count)
// fingerprint guards the leftover ambiguity.
inline std::vector<std::vector<std::int64_t>> canonical_extra_rows(
    std::vector<std::vector<std::int64_t>> extras, unsigned d) {
    std::vector<unsigned> perm(d);
    for (unsigned i = 0; i < d; ++i) perm[i] = i;
    std::optional<std::vector<std::vector<std::int64_t>>> best;
    do {
        std::vector<std::vector<std::int64_t>> image(extras.size(),
                                                     std::vector<std::int64_t>(d));
        for (std::size_t r = 0; r < extras.size(); ++r)
            for (unsigned j = 0; j < d; ++j) image[r][j] = extras[r][perm[j]];
        std::sort(image.begin(), image.end());
        if (!best || image < *best) best = std::move(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

// A candidate [I_d | B] splits as a product of lower-dimensional cones
// exactly when the coordinate set partitions so that every extra row's
// support stays inside one block (coordinates missed by every extra row are
// polynomial factors). Such cones are products of lower-dimensional classes
// and are redundant for classification, so the search skips them.
inline bool splits_off_factor(const std::vector<std::vector<std::int64_t>>& extras, unsigned d) {
    if (extras.empty()) return d > 1;
    std::vector<unsigned> parent(d);
    for (unsigned i = 0; i < d; ++i) parent[i] = i;
    std::function<unsigned(unsigned)> find = [&](unsigned x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<bool> covered(d, false);
    for (const auto& row : extras) {
        int first = -1;
        for (unsigned j = 0; j < d; ++j) {
            if (row[j] == 0) continue;
            covered[j] = true;
            if (first < 0)
                first = static_cast<int>(j);
            else
                parent[find(static_cast<unsigned>(first))] = find(j);
        }
    }
    for (unsigned j = 0; j < d; ++j)
        if (!covered[j]) return true;
    for (unsigned j = 1; j < d; ++j)
        if (find(j) != find(0)) return true;
    return false;
}

inline std::size_t count_facets(const Polytope& p) {
    const auto& verts = p.vertices();
    std::size_t d = p.dim();
    std::set<std::vector<std::size_t>> facets;
    auto consider = [&](const IVec& normal, const Rational& offset) {
        std::vector<std::size_t> on;
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            Rational s = 0;
            for (std::size_t j = 0; j < d; ++j) s += Rational(normal[j]) * verts[vi][j];
            if (s == offset) on.push_back(vi);
        }
        if (on.size() < d) return;
        // affine rank d-1 makes it a genuine facet
        QMatrix diffs(on.size() - 1, QVec(d));
        for (std::size_t r = 1; r < on.size(); ++r)
            for (std::size_t j = 0; j < d; ++j)
                diffs[r - 1][j] = verts[on[r]][j] - verts[on[0]][j];
        std::size_t rk = 0;
        for (std::size_t col = 0; col < d && rk < diffs.size(); ++col) {
            std::size_t piv = rk;
            while (piv < diffs.size() && diffs[piv][col] == 0) ++piv;
            if (piv == diffs.size()) continue;
            std::swap(diffs[piv], diffs[rk]);
            for (std::size_t rr = rk + 1; rr < diffs.size(); ++rr) {
                if (diffs[rr][col] == 0) continue;
                Rational f = diffs[rr][col] / diffs[rk][col];
                for (std::size_t j = col; j < d; ++j) diffs[rr][j] -= f * diffs[rk][j];
            }
            ++rk;
        }
        if (rk == d - 1) facets.insert(on);
    };
    for (const auto& h : p.halfspaces()) {
        consider(h.normal, h.lower);
        consider(h.normal, h.upper);
    }
    return facets.size();
}

}  // namespace detail

// Exhaustive scan of the normalized search space [I_d | B], |B entries| <=
// entry_bound: every lattice-isomorphism class in the slice with F-signature
// strictly above the threshold, with its exact value. Deduplication is by
// canonical form, then by the exact (fsig, vertex count, facet count)
// fingerprint.
inline std::vector<ClassifiedCone> enumerate_high_fsig(const SearchSpace& space,
                                                       const Rational& threshold,
                                                       std::uint64_t budget = 1000000) {
    unsigned d = space.d, n = space.n;
    if (n < d) throw Error("search space needs n >= d");
    unsigned extra = n - d;
    std::int64_t b = space.entry_bound;
    std::uint64_t radix = static_cast<std::uint64_t>(2 * b + 1);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < extra * d; ++i) {
        if (count > budget / radix + 1) throw BudgetExceeded("classification search budget exceeded");
        count *= radix;
    }

    std::set<std::vector<std::vector<std::int64_t>>> seen;
    std::vector<ClassifiedCone> out;
    std::set<std::tuple<Rational, std::size_t, std::size_t>> fingerprints;

    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::vector<std::int64_t>> extras(extra, std::vector<std::int64_t>(d));
        std::uint64_t rem = code;
        for (unsigned r = 0; r < extra; ++r)
            for (unsigned j = 0; j < d; ++j) {
                extras[r][j] = static_cast<std::int64_t>(rem % radix) - b;
                rem /= radix;
            }
        if (detail::splits_off_factor(extras, d)) continue;
        auto canon = detail::canonical_extra_rows(extras, d);
        if (!seen.insert(canon).second) continue;

        IntMatrix gens(n, d);
        for (unsigned i = 0; i < d; ++i) gens(i, i) = 1;
        for (unsigned r = 0; r < extra; ++r)
            for (unsigned j = 0; j < d; ++j) gens(d + r, j) = canon[r][j];
        try {
            ConeSpec cone = validate_cone(gens);
            Polytope z = dual_zonotope(cone);
            VolumeResult vr = volume(z);
            if (vr.volume <= threshold) continue;
            std::size_t fc = detail::count_facets(z);
            if (!fingerprints.insert({vr.volume, vr.vertex_count, fc}).second) continue;
            out.push_back({gens, vr.volume, vr.vertex_count, fc});
        } catch (const InvalidCone&) {
            continue;
        }
    }
    std::sort(out.begin(), out.end(), [](const ClassifiedCone& a, const ClassifiedCone& b2) {
        if (a.fsig != b2.fsig) return a.fsig > b2.fsig;
        return a.generators.str() < b2.generators.str();
    });
    return out;
}

// Cube cut by the signed slab 0 <= x_1 + ... + x_{d-k} - x_{d-k+1} - ... -
// x_d <= 1, evaluated two independent ways: the exact polytope volume, and
// A(d,k)/d! through the reflection x_j -> 1 - x_j on the negative block.
// Disagreement is a build-failing internal error.
inline Rational sign_pattern_volume(unsigned d, unsigned k) {
    if (k > d) throw Error("sign pattern needs 0 <= k <= d");
    std::vector<Halfspace> hs;
    for (unsigned j = 0; j < d; ++j) {
        IVec e(d, Int(0));
        e[j] = 1;
        hs.push_back({e, Rational(0), Rational(1)});
    }
    IVec slab(d);
    for (unsigned j = 0; j < d; ++j) slab[j] = (j < d - k) ? 1 : -1;
    hs.push_back({slab, Rational(0), Rational(1)});
    Rational direct = volume(Polytope(d, std::move(hs))).volume;

    Rational via_eulerian;
    if (k == d) {
        // slab 0 <= -sum x <= 1 meets the cube in a measure-zero face
        via_eulerian = 0;
    } else {
        via_eulerian = slice_volume(d, k);
    }
    if (direct != via_eulerian)
        throw InternalMismatch("sign pattern volume disagrees with Eulerian slice: d=" +
                               std::to_string(d) + " k=" + std::to_string(k) + " " +
                               to_string(direct) + " vs " + to_string(via_eulerian));
    return direct;
}

}  // namespace toricinv
