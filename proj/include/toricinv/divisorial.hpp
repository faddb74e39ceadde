#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "toricinv/hilbert.hpp"
#include "toricinv/lattice.hpp"

namespace toricinv {

namespace detail {

// Lattice points m with a <= lambda(m) <= a + cap componentwise, via vertex
// enumeration of the rational slab polytope for the bounding box.
inline std::vector<MonoidPoint> divisor_box_points(const ConeSpec& c, const MonoidScan& scan,
                                                   const std::vector<std::int64_t>& a,
                                                   std::int64_t cap, std::uint64_t budget) {
    std::size_t d = c.dim(), n = c.num_generators();
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < n; ++i)
        hs.push_back({c.generator(i), Rational(a[i]), Rational(a[i] + cap)});
    Polytope p(d, std::move(hs));
    std::vector<std::int64_t> lo(d, 0), hi(d, 0);
    const auto& verts = p.vertices();
    if (verts.empty()) return {};
    for (std::size_t j = 0; j < d; ++j) {
        Int fl = rat_floor(verts[0][j]), ce = rat_ceil(verts[0][j]);
        lo[j] = fl.convert_to<long long>();
        hi[j] = ce.convert_to<long long>();
    }
    for (const QVec& v : verts)
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min<std::int64_t>(lo[j], rat_floor(v[j]).convert_to<long long>());
            hi[j] = std::max<std::int64_t>(hi[j], rat_ceil(v[j]).convert_to<long long>());
        }
    std::uint64_t cells = 1;
    for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t w = static_cast<std::uint64_t>(hi[j] - lo[j] + 1);
        if (cells > budget / w + 1) throw BudgetExceeded("divisor box budget exceeded");
        cells *= w;
    }
    std::vector<MonoidPoint> pts;
    std::vector<std::int64_t> x = lo;
    while (true) {
        std::vector<std::int64_t> lam = scan.lambda(x);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (lam[i] < a[i] || lam[i] > a[i] + cap) {
                ok = false;
                break;
            }
        if (ok) pts.push_back({x, lam});
        std::size_t j = d;
        bool done = true;
        while (j > 0) {
            --j;
            if (x[j] < hi[j]) {
                ++x[j];
                done = false;
                break;
            }
            x[j] = lo[j];
        }
        if (done) break;
    }
    return pts;
}

inline std::vector<MonoidPoint> minimal_in_box(const ConeSpec& c, const MonoidScan& scan,
                                               const std::vector<std::vector<std::int64_t>>& hb_lam,
                                               const std::vector<std::int64_t>& a, std::int64_t cap,
                                               std::uint64_t budget) {
    std::vector<MonoidPoint> minimal;
    for (const MonoidPoint& p : divisor_box_points(c, scan, a, cap, budget)) {
        bool dominated = false;
        for (const auto& hl : hb_lam) {
            bool ge = true;
            for (std::size_t i = 0; i < hl.size(); ++i)
                if (p.lam[i] - hl[i] < a[i]) {
                    ge = false;
                    break;
                }
            if (ge) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const MonoidPoint& l, const MonoidPoint& r) { return l.x < r.x; });
    return minimal;
}

}  // namespace detail

// Minimal elements of V(a) = { m in M : lambda(m) >= a } under the monoid
// divisibility order (m <= m' iff m' - m lies in the dual monoid). Their
// count is mu_A(D(a)); for a = (1,...,1) it is type(A). A point is minimal
// iff no Hilbert basis element can be peeled off while staying inside V(a),
// so the enumeration window is certified by cap doubling exactly like the
// Hilbert basis computation.
inline std::vector<IVec> minimal_generators(const ConeSpec& c, const IVec& a,
                                            std::int64_t cap = 8, std::int64_t cap_max = 128,
                                            std::uint64_t budget = 10000000) {
    if (a.size() != c.num_generators()) throw DimensionMismatch("divisor vector has wrong length");
    MonoidScan scan(c);
    std::vector<std::int64_t> ai(a.size());
    std::int64_t spread = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ai[i] = a[i].convert_to<long long>();
        spread = std::max(spread, std::abs(ai[i]));
    }
    std::vector<std::vector<std::int64_t>> hb_lam;
    for (const IVec& h : hilbert_basis(c)) {
        std::vector<std::int64_t> hx(h.size());
        for (std::size_t j = 0; j < h.size(); ++j) hx[j] = h[j].convert_to<long long>();
        hb_lam.push_back(scan.lambda(hx));
    }
    std::int64_t base = std::max<std::int64_t>(cap, 2 * spread + 2);
    auto key = [](const std::vector<MonoidPoint>& v) {
        std::vector<std::vector<std::int64_t>> k;
        for (const auto& p : v) k.push_back(p.x);
        return k;
    };
    std::vector<MonoidPoint> cur = detail::minimal_in_box(c, scan, hb_lam, ai, base, budget);
    while (base <= cap_max) {
        std::vector<MonoidPoint> next = detail::minimal_in_box(c, scan, hb_lam, ai, 2 * base, budget);
        if (key(cur) == key(next)) {
            std::vector<IVec> out;
            for (const auto& p : cur) {
                IVec v(p.x.size());
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = p.x[j];
                out.push_back(std::move(v));
            }
            return out;
        }
        base *= 2;
        cur = std::move(next);
    }
    throw CapTooSmall("minimal generator set did not stabilize below cap " +
                      std::to_string(cap_max));
}

// mu_A(D(a)) = number of minimal generators of the divisorial ideal D(a).
inline std::size_t module_mu(const ConeSpec& c, const IVec& a) {
    return minimal_generators(c, a).size();
}

// type(A) = mu of the canonical module D(1,...,1).
inline std::size_t cm_type(const ConeSpec& c) {
    return module_mu(c, IVec(c.num_generators(), Int(1)));
}

}  // namespace toricinv
