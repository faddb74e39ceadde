#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toricinv/hilbert.hpp"
#include "toricinv/lattice.hpp"
#include "toricinv/parallel.hpp"

namespace toricinv {

namespace detail {

struct HbLambda {
    std::vector<std::vector<std::int64_t>> lam;  // lambda of each Hilbert basis element
    std::int64_t shell = 1;                      // max_{j,i} lambda_i(h_j)

    HbLambda(const ConeSpec& c, const MonoidScan& scan) {
        for (const IVec& h : hilbert_basis(c)) {
            std::vector<std::int64_t> hx(h.size());
            for (std::size_t j = 0; j < h.size(); ++j) hx[j] = h[j].convert_to<long long>();
            lam.push_back(scan.lambda(hx));
        }
        for (const auto& hl : lam)
            for (auto v : hl) shell = std::max(shell, v);
    }
};

inline std::int64_t max_of(const std::vector<std::int64_t>& v) {
    std::int64_t m = v.empty() ? 0 : v[0];
    for (auto x : v) m = std::max(m, x);
    return m;
}

}  // namespace detail

// ell(A / m^[q]): monoid points not in the ideal generated by the q-th powers
// of the Hilbert basis monomials. The covered set is an up-set under monoid
// addition, so enumeration up to max-lambda level L is complete once the
// outer shell of thickness max_{j,i} lambda_i(h_j) is fully covered: any
// point beyond has a partial sum inside the covered shell. L doubles until
// the certificate holds.
inline std::uint64_t frobenius_colength(const ConeSpec& c, unsigned q,
                                        std::uint64_t budget = 10000000,
                                        std::int64_t level_hint = 0, unsigned threads = 1) {
    if (q < 2) throw Error("Frobenius level q must be at least 2");
    MonoidScan scan(c);
    detail::HbLambda hb(c, scan);
    std::int64_t t = hb.shell;
    std::int64_t level = std::max(level_hint, static_cast<std::int64_t>(q) * (t + 1));
    auto covered = [&](const std::vector<std::int64_t>& lam) {
        for (const auto& hl : hb.lam) {
            bool ge = true;
            for (std::size_t i = 0; i < hl.size(); ++i)
                if (lam[i] < static_cast<std::int64_t>(q) * hl[i]) {
                    ge = false;
                    break;
                }
            if (ge) return true;
        }
        return false;
    };
    // parallel over slabs of the first coordinate; counts and the shell flag
    // merge associatively, so the result is thread-count independent
    struct SlabResult {
        std::uint64_t uncovered = 0;
        bool shell_ok = true;
    };
    while (true) {
        if (scan.box_cells(level, budget) > budget)
            throw BudgetExceeded("lattice enumeration budget exceeded");
        auto [lo0, hi0] = scan.first_coordinate_range(level);
        std::size_t width = static_cast<std::size_t>(hi0 - lo0 + 1);
        SlabResult total = parallel_chunks<SlabResult>(
            width, threads, std::max<std::size_t>(1, width / 64),
            [&](std::size_t begin, std::size_t end) {
                SlabResult r;
                scan.for_each_point_slab(
                    level, lo0 + static_cast<std::int64_t>(begin),
                    lo0 + static_cast<std::int64_t>(end) - 1,
                    [&](const std::vector<std::int64_t>&, const std::vector<std::int64_t>& lam) {
                        if (covered(lam)) return;
                        ++r.uncovered;
                        if (detail::max_of(lam) > level - t) r.shell_ok = false;
                    },
                    budget);
                return r;
            },
            [](SlabResult& acc, const SlabResult& part) {
                acc.uncovered += part.uncovered;
                acc.shell_ok = acc.shell_ok && part.shell_ok;
            });
        if (total.shell_ok) return total.uncovered;
        level *= 2;
    }
}

// ell(A / m^{n+1}): monoid points of order at most n, where ord(m) is the
// maximal number of Hilbert basis summands. Computed by dynamic programming
// in increasing sum-of-lambda order; the shell certificate mirrors
// frobenius_colength (orders only grow along the monoid partial order).
inline std::uint64_t power_colength(const ConeSpec& c, unsigned n,
                                    std::uint64_t budget = 10000000,
                                    std::int64_t level_hint = 0) {
    MonoidScan scan(c);
    detail::HbLambda hb(c, scan);
    std::int64_t t = hb.shell;
    std::int64_t level = std::max(level_hint, static_cast<std::int64_t>(n + 1) * t);
    while (true) {
        std::vector<MonoidPoint> pts = monoid_points_up_to(scan, level, budget);
        std::map<std::vector<std::int64_t>, std::uint64_t> ord;
        std::uint64_t count = 0;
        bool shell_ok = true;
        for (const MonoidPoint& p : pts) {
            std::uint64_t best = 0;
            bool zero = true;
            for (auto v : p.lam)
                if (v != 0) zero = false;
            if (!zero) {
                for (const auto& hl : hb.lam) {
                    std::vector<std::int64_t> rest(p.lam.size());
                    bool ok = true;
                    for (std::size_t i = 0; i < p.lam.size(); ++i) {
                        rest[i] = p.lam[i] - hl[i];
                        if (rest[i] < 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    auto it = ord.find(rest);
                    if (it != ord.end()) best = std::max(best, it->second + 1);
                }
            }
            ord.emplace(p.lam, best);
            if (best <= n) {
                ++count;
                if (detail::max_of(p.lam) > level - t) shell_ok = false;
            }
        }
        if (shell_ok) return count;
        level *= 2;
    }
}

struct ColengthSample {
    unsigned parameter = 0;  // q or n
    std::uint64_t colength = 0;
    Rational normalized;  // colength/q^d resp. d! colength/n^d
};

struct EstimateReport {
    std::vector<ColengthSample> samples;
    Rational extrapolated;
    Rational claimed_tolerance;
    bool has_extrapolation = false;
};

namespace detail {

// Two-point first-order elimination: with f(x) ~ L + C/x, the last two
// samples give L = (x2 f2 - x1 f1)/(x2 - x1); for doubled parameters this is
// the Richardson step 2 f(2x) - f(x).
inline void extrapolate(EstimateReport& r) {
    if (r.samples.size() < 2) return;
    const auto& s1 = r.samples[r.samples.size() - 2];
    const auto& s2 = r.samples[r.samples.size() - 1];
    Rational x1(s1.parameter), x2(s2.parameter);
    r.extrapolated = (x2 * s2.normalized - x1 * s1.normalized) / (x2 - x1);
    r.claimed_tolerance = abs(r.extrapolated - s2.normalized);
    r.has_extrapolation = true;
}

}  // namespace detail

// Hilbert-Kunz estimator: samples of ell(A/m^[q])/q^d plus the first-order
// extrapolation from the last two samples.
inline EstimateReport ehk_estimate(const ConeSpec& c, const std::vector<unsigned>& q_list,
                                   std::uint64_t budget = 10000000, unsigned threads = 1) {
    EstimateReport r;
    unsigned d = static_cast<unsigned>(c.dim());
    for (unsigned q : q_list) {
        ColengthSample s;
        s.parameter = q;
        s.colength = frobenius_colength(c, q, budget, 0, threads);
        s.normalized = Rational(Int(s.colength), int_pow(Int(q), d));
        r.samples.push_back(std::move(s));
    }
    detail::extrapolate(r);
    return r;
}

// Hilbert-Samuel estimator: samples of d! ell(A/m^{n+1})/n^d plus the
// first-order extrapolation.
inline EstimateReport multiplicity_estimate(const ConeSpec& c, const std::vector<unsigned>& n_list,
                                            std::uint64_t budget = 10000000) {
    EstimateReport r;
    unsigned d = static_cast<unsigned>(c.dim());
    for (unsigned n : n_list) {
        ColengthSample s;
        s.parameter = n;
        s.colength = power_colength(c, n, budget);
        s.normalized = Rational(factorial(d) * Int(s.colength), int_pow(Int(n), d));
        r.samples.push_back(std::move(s));
    }
    detail::extrapolate(r);
    return r;
}

}  // namespace toricinv
