#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "toricinv/bounds.hpp"
#include "toricinv/interval.hpp"

namespace toricinv {

struct CheckResult {
    std::string name;
    std::string detail;
    BoundVerdict verdict = BoundVerdict::Holds;
};

struct RingReport {
    std::string ring;
    std::vector<CheckResult> checks;
    double seconds = 0;  // not part of the rendered report (kept deterministic)

    bool ok() const {
        for (const auto& c : checks)
            if (c.verdict == BoundVerdict::Violated) return false;
        return true;
    }

    std::string render() const {
        std::ostringstream out;
        out << "== ring " << ring << " ==\n";
        for (const auto& c : checks)
            out << "  " << c.name << ": " << c.detail << " -> " << to_string(c.verdict) << "\n";
        return out.str();
    }
};

// Interval semantics for inequality verdicts: Holds and Violated are only
// reported when the intervals separate (so they are proofs); overlapping
// intervals downgrade to HoldsWithinTolerance.
inline BoundVerdict le_verdict(const RationalInterval& lhs, const RationalInterval& rhs) {
    if (lhs.hi <= rhs.lo) return BoundVerdict::Holds;
    if (lhs.lo > rhs.hi) return BoundVerdict::Violated;
    return BoundVerdict::HoldsWithinTolerance;
}

inline BoundVerdict lt_verdict(const RationalInterval& lhs, const RationalInterval& rhs) {
    if (lhs.hi < rhs.lo) return BoundVerdict::Holds;
    if (lhs.lo >= rhs.hi) return BoundVerdict::Violated;
    return BoundVerdict::HoldsWithinTolerance;
}

inline BoundVerdict eq_verdict(const RationalInterval& lhs, const RationalInterval& rhs) {
    if (lhs.lo == lhs.hi && rhs.lo == rhs.hi)
        return lhs.lo == rhs.lo ? BoundVerdict::Holds : BoundVerdict::Violated;
    if (lhs.hi < rhs.lo || rhs.hi < lhs.lo) return BoundVerdict::Violated;
    return BoundVerdict::HoldsWithinTolerance;
}

// Structured inputs for the identity/inequality suite of a single ring.
struct InvariantData {
    unsigned d = 0;
    Rational fsig;               // exact
    bool gorenstein = false;
    std::optional<unsigned> type;  // exact when present
    std::optional<RationalInterval> e;    // estimator interval
    std::optional<RationalInterval> ehk;  // estimator interval
};

// Evaluates every applicable bound from the identity/inequality calculus with
// exact F-signature and interval-valued multiplicities. A Violated verdict on
// a catalog ring is a build-failing event.
inline std::vector<CheckResult> inequality_report(const InvariantData& v) {
    std::vector<CheckResult> out;
    RationalInterval fsig(v.fsig);
    auto push = [&](const std::string& name, const std::string& detail, BoundVerdict verdict) {
        out.push_back({name, detail, verdict});
    };

    if (!v.gorenstein) {
        BoundVerdict ver = v.fsig <= Rational(1, 2) ? BoundVerdict::Holds : BoundVerdict::Violated;
        push("fsig<=1/2 (non-Gorenstein)", "fsig = " + to_string(v.fsig), ver);
    }

    if (v.e && v.ehk) {
        Int dfact = factorial(v.d);
        RationalInterval e_over = *v.e / RationalInterval(Rational(dfact));
        push("e/d! <= ehk <= e",
             "e/d! in " + e_over.str() + ", ehk in " + v.ehk->str() + ", e in " + v.e->str(),
             std::max(le_verdict(e_over, *v.ehk), le_verdict(*v.ehk, *v.e)));
        if (v.d >= 3) {
            RationalInterval rhs = (*v.e + RationalInterval(Rational(v.d))) /
                                   RationalInterval(Rational(dfact));
            push("ehk > (e+d)/d!", "rhs in " + rhs.str(), lt_verdict(rhs, *v.ehk));
        }
        if (v.d == 3 && v.fsig != 1) {  // dimension-3 bound for non-regular rings
            RationalInterval rhs = *v.e / RationalInterval(Rational(6)) + RationalInterval(Rational(1));
            push("ehk >= e/6 + 1", "rhs in " + rhs.str() + ", ehk in " + v.ehk->str(),
                 le_verdict(rhs, *v.ehk));
        }
        if (!v.gorenstein && v.type) {
            RationalInterval bound =
                fsig * RationalInterval(Rational(*v.type + 1)) +
                RationalInterval(Rational(2)) * *v.e * (RationalInterval(Rational(1, 2)) - fsig);
            push("ehk <= fsig(type+1) + 2e(1/2 - fsig)", "rhs in " + bound.str(),
                 le_verdict(*v.ehk, bound));
        }
        if (v.gorenstein && v.d >= 2) {
            RationalInterval bound = fsig + (RationalInterval(Rational(1)) - fsig) * *v.e;
            push("ehk <= fsig + (1-fsig)e", "rhs in " + bound.str(), le_verdict(*v.ehk, bound));
        }
        if (v.gorenstein && v.d == 3 && v.e->lo >= 3) {
            RationalInterval bound = *v.e / RationalInterval(Rational(24));
            push("fsig <= e/24 (Gorenstein, d=3, e>=3)", "rhs in " + bound.str(),
                 le_verdict(fsig, bound));
        }
    }
    if (!v.gorenstein && v.fsig == Rational(1, 2) && v.type && v.ehk) {
        RationalInterval target(Rational(*v.type + 1, 2));
        push("fsig=1/2 => ehk = (type+1)/2", "target " + target.str() + ", ehk in " + v.ehk->str(),
             eq_verdict(*v.ehk, target));
    }
    return out;
}

}  // namespace toricinv
