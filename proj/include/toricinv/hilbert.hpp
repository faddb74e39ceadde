#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "toricinv/lattice.hpp"

namespace toricinv {

namespace detail {

// Irreducible monoid points within max-lambda level `cap`. Points are
// processed in increasing sum-of-lambda order, so every proper summand of a
// reducible point has already been classified; one subtraction test against
// the irreducibles found so far decides reducibility.
inline std::vector<MonoidPoint> irreducibles_up_to(const MonoidScan& scan, std::int64_t cap,
                                                   std::uint64_t budget) {
    std::vector<MonoidPoint> irr;
    for (const MonoidPoint& p : monoid_points_up_to(scan, cap, budget)) {
        bool zero = true;
        for (auto v : p.lam)
            if (v != 0) zero = false;
        if (zero) continue;
        bool reducible = false;
        for (const MonoidPoint& h : irr) {
            if (p.x == h.x) continue;
            if (lam_dominates(p.lam, h.lam)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irr.push_back(p);
    }
    return irr;
}

}  // namespace detail

// Hilbert basis of the dual monoid: the irreducible elements (nonzero points
// that are not a sum of two nonzero monoid points). Enumerates up to
// search_cap and certifies completeness by doubling: the basis is accepted
// once the irreducible set is unchanged at twice the cap (every enumerated
// point then decomposes into returned irreducibles by construction).
// Caps double automatically up to cap_max before giving up.
inline std::vector<IVec> hilbert_basis(const ConeSpec& c, std::int64_t search_cap = 8,
                                       std::int64_t cap_max = 64,
                                       std::uint64_t budget = 10000000) {
    MonoidScan scan(c);
    std::int64_t cap = search_cap;
    std::vector<MonoidPoint> irr = detail::irreducibles_up_to(scan, cap, budget);
    while (cap <= cap_max) {
        std::vector<MonoidPoint> irr2 = detail::irreducibles_up_to(scan, 2 * cap, budget);
        auto key = [](const std::vector<MonoidPoint>& v) {
            std::vector<std::vector<std::int64_t>> k;
            for (const auto& p : v) k.push_back(p.x);
            std::sort(k.begin(), k.end());
            return k;
        };
        // a pointed full-dimensional cone always has nonzero monoid points,
        // so an empty window is never a complete basis
        if (!irr2.empty() && key(irr) == key(irr2)) {
            std::vector<IVec> out;
            for (const auto& p : irr) {
                IVec v(p.x.size());
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = p.x[j];
                out.push_back(std::move(v));
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        cap *= 2;
        irr = std::move(irr2);
    }
    throw CapTooSmall("hilbert basis did not stabilize below cap " + std::to_string(cap_max));
}

}  // namespace toricinv
