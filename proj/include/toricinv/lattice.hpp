#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "toricinv/cone.hpp"
#include "toricinv/polytope.hpp"

namespace toricinv {

// Machine-integer view of a cone's lambda map for enumeration loops. Catalog
// cones have single-digit entries; the constructor guards the conversion so a
// silent overflow is impossible.
struct MonoidScan {
    std::size_t d, n;
    std::vector<std::vector<std::int64_t>> gen;  // n rows of length d
    std::vector<std::int64_t> box_lo, box_hi;    // bounding box of the dual zonotope, per unit level

    explicit MonoidScan(const ConeSpec& c) : d(c.dim()), n(c.num_generators()) {
        gen.assign(n, std::vector<std::int64_t>(d));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Int& e = c.generators()(i, j);
                if (abs(e) > 1000000) throw BudgetExceeded("generator entries too large for lattice scan");
                gen[i][j] = static_cast<std::int64_t>(e.convert_to<long long>());
            }
        Polytope p = dual_zonotope(c);
        box_lo.assign(d, 0);
        box_hi.assign(d, 0);
        for (const QVec& v : p.vertices())
            for (std::size_t j = 0; j < d; ++j) {
                Int fl = rat_floor(v[j]), ce = rat_ceil(v[j]);
                box_lo[j] = std::min(box_lo[j], static_cast<std::int64_t>(fl.convert_to<long long>()));
                box_hi[j] = std::max(box_hi[j], static_cast<std::int64_t>(ce.convert_to<long long>()));
            }
    }

    std::vector<std::int64_t> lambda(const std::vector<std::int64_t>& x) const {
        std::vector<std::int64_t> l(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j) l[i] += gen[i][j] * x[j];
        return l;
    }

    // Visit every lattice point with 0 <= lambda_i <= level for all i,
    // optionally restricted to a slab of first coordinates (the unit of
    // parallel work). Deterministic row-major order over the scaled box.
    template <typename Fn>
    void for_each_point(std::int64_t level, Fn&& fn, std::uint64_t budget = 10000000) const {
        auto [lo0, hi0] = first_coordinate_range(level);
        for_each_point_slab(level, lo0, hi0, fn, budget);
    }

    std::pair<std::int64_t, std::int64_t> first_coordinate_range(std::int64_t level) const {
        return {box_lo[0] * level, box_hi[0] * level};
    }

    // Total cell count of the scaled bounding box, guarded against overflow.
    std::uint64_t box_cells(std::int64_t level, std::uint64_t cap) const {
        std::uint64_t cells = 1;
        for (std::size_t j = 0; j < d; ++j) {
            std::uint64_t w = static_cast<std::uint64_t>((box_hi[j] - box_lo[j]) * level + 1);
            if (cells > cap / w + 1) return cap + 1;
            cells *= w;
        }
        return cells;
    }

    template <typename Fn>
    void for_each_point_slab(std::int64_t level, std::int64_t first_lo, std::int64_t first_hi,
                             Fn&& fn, std::uint64_t budget = 10000000) const {
        std::vector<std::int64_t> lo(d), hi(d);
        std::uint64_t cells = 1;
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = j == 0 ? first_lo : box_lo[j] * level;
            hi[j] = j == 0 ? first_hi : box_hi[j] * level;
            if (hi[j] < lo[j]) return;
            std::uint64_t w = static_cast<std::uint64_t>(hi[j] - lo[j] + 1);
            if (cells > budget / w + 1) throw BudgetExceeded("lattice enumeration budget exceeded");
            cells *= w;
        }
        if (cells > budget) throw BudgetExceeded("lattice enumeration budget exceeded");
        std::vector<std::int64_t> x = lo;
        std::vector<std::int64_t> lam(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j) lam[i] += gen[i][j] * x[j];
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i)
                if (lam[i] < 0 || lam[i] > level) {
                    ok = false;
                    break;
                }
            if (ok) fn(x, lam);
            // odometer increment with incremental lambda update
            std::size_t j = d;
            bool done = true;
            while (j > 0) {
                --j;
                if (x[j] < hi[j]) {
                    ++x[j];
                    for (std::size_t i = 0; i < n; ++i) lam[i] += gen[i][j];
                    done = false;
                    break;
                }
                for (std::size_t i = 0; i < n; ++i) lam[i] -= gen[i][j] * (x[j] - lo[j]);
                x[j] = lo[j];
            }
            if (done) break;
        }
    }
};

struct MonoidPoint {
    std::vector<std::int64_t> x;
    std::vector<std::int64_t> lam;
};

// All monoid points with max_i lambda_i <= level, sorted by (sum of lambda,
// coordinates). The sort order makes "peel one irreducible" arguments valid:
// any proper summand of a point appears strictly earlier.
inline std::vector<MonoidPoint> monoid_points_up_to(const MonoidScan& scan, std::int64_t level,
                                                    std::uint64_t budget = 10000000) {
    std::vector<MonoidPoint> pts;
    scan.for_each_point(
        level,
        [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& lam) {
            pts.push_back({x, lam});
        },
        budget);
    std::sort(pts.begin(), pts.end(), [](const MonoidPoint& a, const MonoidPoint& b) {
        std::int64_t sa = 0, sb = 0;
        for (auto v : a.lam) sa += v;
        for (auto v : b.lam) sb += v;
        if (sa != sb) return sa < sb;
        return a.x < b.x;
    });
    return pts;
}

inline bool lam_dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

}  // namespace toricinv
