#pragma once

#include <chrono>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "toricinv/catalog.hpp"

namespace toricinv {

struct VerifyOptions {
    unsigned threads = 1;
    bool run_estimates = true;
    bool run_census = true;
    bool run_decompose = true;
};

namespace detail {

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline BoundVerdict expect_eq(const std::string& got, const std::string& want) {
    return got == want ? BoundVerdict::Holds : BoundVerdict::Violated;
}

}  // namespace detail

// Runs every configured check of one catalog entry. Violated anywhere means
// the build is broken; estimator comparisons use the entry's pinned
// tolerances so the verdicts are reproducible.
inline RingReport verify_entry(const CatalogEntry& entry, const VerifyOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    RingReport rep;
    rep.ring = entry.name;
    auto push = [&](const std::string& name, const std::string& detail, BoundVerdict v) {
        rep.checks.push_back({name, detail, v});
    };

    ConeSpec cone = validate_cone(entry.generators);
    ClassGroup cl(cone);
    unsigned d = static_cast<unsigned>(cone.dim());

    Rational fsig = fsignature(cone);
    if (auto it = entry.expected.find("fsig"); it != entry.expected.end())
        push("fsig", to_string(fsig) + " expected " + it->second.value + " (" +
                         it->second.provenance + ")",
             detail::expect_eq(to_string(fsig), it->second.value));

    if (auto it = entry.expected.find("classgroup"); it != entry.expected.end())
        push("classgroup", cl.describe() + " expected " + it->second.value,
             detail::expect_eq(cl.describe(), it->second.value));

    GorensteinData gor = gorenstein_data(cone, cl);
    if (auto it = entry.expected.find("gorenstein"); it != entry.expected.end())
        push("gorenstein", detail::bool_str(gor.is_gorenstein) + " expected " + it->second.value,
             detail::expect_eq(detail::bool_str(gor.is_gorenstein), it->second.value));
    if (auto it = entry.expected.find("index"); it != entry.expected.end()) {
        std::string got = gor.q_index ? std::to_string(*gor.q_index) : "none";
        push("index", got + " expected " + it->second.value,
             detail::expect_eq(got, it->second.value));
    }

    std::optional<unsigned> type_val;
    if (auto it = entry.expected.find("type"); it != entry.expected.end()) {
        type_val = static_cast<unsigned>(cm_type(cone));
        push("type", std::to_string(*type_val) + " expected " + it->second.value,
             detail::expect_eq(std::to_string(*type_val), it->second.value));
    }

    std::optional<ConicCensus> census;
    if (opt.run_census && !entry.census_denoms.empty()) {
        census = conic_census(cone, entry.census_denoms, opt.threads);
        if (auto it = entry.expected.find("census"); it != entry.expected.end()) {
            std::string got = std::to_string(census->classes.size());
            BoundVerdict v = detail::expect_eq(got, it->second.value);
            if (!census->stable) v = BoundVerdict::Violated;
            push("census", got + " classes, stable=" + detail::bool_str(census->stable) +
                               " expected " + it->second.value,
                 v);
        }
    }

    if (opt.run_decompose) {
        for (unsigned q : entry.decompose_q) {
            FrobeniusDecomposition dec = decompose(cone, q, opt.threads);
            std::uint64_t sum = 0;
            for (const auto& [cls, cnt] : dec.class_counts) sum += cnt;
            BoundVerdict v = sum == dec.total ? BoundVerdict::Holds : BoundVerdict::Violated;
            push("decompose q=" + std::to_string(q) + " total",
                 std::to_string(sum) + " of " + std::to_string(dec.total), v);

            Rational est(Int(dec.free_count), Int(dec.total));
            Rational gap = abs(est - fsig);
            BoundVerdict v2 = gap <= Rational(3, q) ? BoundVerdict::Holds : BoundVerdict::Violated;
            push("decompose q=" + std::to_string(q) + " free-rate",
                 "a_e/q^d = " + to_string(est) + ", |gap to fsig| = " + to_string(gap) +
                     " <= 3/q",
                 v2);

            if (gor.is_gorenstein) {
                BoundVerdict v3 = dec.free_count == dec.canonical_count ? BoundVerdict::Holds
                                                                        : BoundVerdict::Violated;
                push("decompose q=" + std::to_string(q) + " a_e=b_e (Gorenstein)",
                     std::to_string(dec.free_count) + " vs " + std::to_string(dec.canonical_count),
                     v3);
            }
            if (census) {
                bool subset = true;
                for (const auto& [cls, cnt] : dec.class_counts)
                    if (!census->classes.count(cls)) subset = false;
                push("decompose q=" + std::to_string(q) + " classes conic",
                     std::to_string(dec.class_counts.size()) + " classes within census",
                     subset ? BoundVerdict::Holds : BoundVerdict::Violated);
            }
        }
        for (unsigned q : entry.mu_identity_q) {
            // generator-count identity: mu_A(F^e_* A) = ell(A/m^[q]), summed
            // residue by residue with one mu evaluation per distinct divisor
            std::map<IVec, std::uint64_t> mu_cache;
            std::uint64_t total_mu = 0;
            std::uint64_t boxes = 1;
            for (unsigned j = 0; j < d; ++j) boxes *= q;
            for (std::uint64_t idx = 0; idx < boxes; ++idx) {
                std::uint64_t rem = idx;
                IVec uu(d);
                for (std::size_t j = d; j-- > 0;) {
                    uu[j] = Int(static_cast<long long>(rem % q));
                    rem /= q;
                }
                IVec dv = summand_divisor(cone, uu, q);
                auto it = mu_cache.find(dv);
                if (it == mu_cache.end()) it = mu_cache.emplace(dv, module_mu(cone, dv)).first;
                total_mu += it->second;
            }
            std::uint64_t colen = frobenius_colength(cone, q, 10000000, 0, opt.threads);
            push("sum mu = colength q=" + std::to_string(q),
                 std::to_string(total_mu) + " vs " + std::to_string(colen),
                 total_mu == colen ? BoundVerdict::Holds : BoundVerdict::Violated);
        }
    }

    std::optional<RationalInterval> e_int, ehk_int;
    if (opt.run_estimates && entry.ehk) {
        EstimateReport er = ehk_estimate(cone, entry.ehk->params, 10000000, opt.threads);
        Rational gap = abs(er.extrapolated - entry.ehk->target);
        Rational tol = entry.ehk->rel_tol * entry.ehk->target;
        push("ehk estimate",
             to_string(er.extrapolated) + " target " + to_string(entry.ehk->target) +
                 " rel.tol " + to_string(entry.ehk->rel_tol) + " (" + entry.ehk->provenance + ")",
             gap <= tol ? BoundVerdict::Holds : BoundVerdict::Violated);
        Rational w = er.claimed_tolerance;
        ehk_int = RationalInterval(er.extrapolated - w, er.extrapolated + w);
    }
    if (opt.run_estimates && entry.mult) {
        EstimateReport mr = multiplicity_estimate(cone, entry.mult->params);
        Rational gap = abs(mr.extrapolated - entry.mult->target);
        Rational tol = entry.mult->rel_tol * entry.mult->target;
        push("mult estimate",
             to_string(mr.extrapolated) + " target " + to_string(entry.mult->target) +
                 " rel.tol " + to_string(entry.mult->rel_tol) + " (" + entry.mult->provenance + ")",
             gap <= tol ? BoundVerdict::Holds : BoundVerdict::Violated);
        Rational w = mr.claimed_tolerance;
        e_int = RationalInterval(mr.extrapolated - w, mr.extrapolated + w);
    }

    InvariantData inv;
    inv.d = d;
    inv.fsig = fsig;
    inv.gorenstein = gor.is_gorenstein;
    inv.type = type_val;
    inv.e = e_int;
    inv.ehk = ehk_int;
    for (auto& c : inequality_report(inv)) rep.checks.push_back(std::move(c));

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct CatalogVerification {
    std::vector<RingReport> reports;
    bool ok() const {
        for (const auto& r : reports)
            if (!r.ok()) return false;
        return true;
    }
    std::string render() const {
        std::ostringstream out;
        for (const auto& r : reports) out << r.render();
        std::size_t violated = 0, checks = 0;
        for (const auto& r : reports)
            for (const auto& c : r.checks) {
                ++checks;
                if (c.verdict == BoundVerdict::Violated) ++violated;
            }
        out << "catalog verify: " << (violated == 0 ? "PASS" : "FAIL") << " (" << reports.size()
            << " rings, " << checks << " checks, " << violated << " violated)\n";
        return out.str();
    }
};

inline CatalogVerification verify_catalog(const VerifyOptions& opt = {}) {
    CatalogVerification v;
    for (const auto& entry : catalog()) v.reports.push_back(verify_entry(entry, opt));
    return v;
}

}  // namespace toricinv
