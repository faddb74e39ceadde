#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "toricinv/class_group.hpp"
#include "toricinv/divisorial.hpp"
#include "toricinv/lattice.hpp"
#include "toricinv/parallel.hpp"

namespace toricinv {

// Divisor exponent vector of the M-graded summand of F^e_* A indexed by the
// residue u + qM: a_i = -floor(lambda_i(u) / q). Replacing u by u + q*m
// shifts a by -lambda(m), so the divisor class is well defined.
inline IVec summand_divisor(const ConeSpec& c, const IVec& u, unsigned q) {
    if (q < 2) throw Error("Frobenius level q must be at least 2");
    IVec lam = c.lambda(u);
    IVec a(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) a[i] = -floor_div(lam[i], Int(q));
    return a;
}

inline ClassElement summand_class(const ConeSpec& c, const ClassGroup& cl, const IVec& u, unsigned q) {
    return cl.project(summand_divisor(c, u, q));
}

struct FrobeniusDecomposition {
    unsigned q = 0;
    std::map<ClassElement, std::uint64_t> class_counts;
    std::map<ClassElement, IVec> witnesses;  // one divisor vector per class
    std::uint64_t free_count = 0;            // a_e
    std::uint64_t canonical_count = 0;       // b_e
    std::uint64_t total = 0;                 // q^d
};

namespace detail {

inline std::int64_t i64_floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t i64_ceil_div(std::int64_t a, std::int64_t b) { return -i64_floor_div(-a, b); }

// Mixed-radix layout of the (small) range of divisor vectors a produced by a
// residue sweep, so counting runs on a flat array of machine integers.
struct DivisorRange {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> stride;
    std::size_t cells = 0;

    DivisorRange(const MonoidScan& scan, unsigned q, bool use_ceil) {
        std::size_t n = scan.n, d = scan.d;
        lo.assign(n, 0);
        stride.assign(n, 1);
        std::size_t c = 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t pos = 0, neg = 0;
            for (std::size_t j = 0; j < d; ++j) {
                std::int64_t e = scan.gen[i][j] * static_cast<std::int64_t>(q - 1);
                (e > 0 ? pos : neg) += e;
            }
            std::int64_t a_min, a_max;
            if (use_ceil) {  // a = ceil(lam/q)
                a_min = i64_ceil_div(neg, q);
                a_max = i64_ceil_div(pos, q);
            } else {  // a = -floor(lam/q)
                a_min = -i64_floor_div(pos, q);
                a_max = -i64_floor_div(neg, q);
            }
            lo[i] = a_min;
            stride[i] = static_cast<std::int64_t>(c);
            c *= static_cast<std::size_t>(a_max - a_min + 1);
            if (c > (std::size_t{1} << 24)) throw BudgetExceeded("divisor range too large to tabulate");
        }
        cells = c;
    }

    std::vector<std::int64_t> decode(std::size_t idx) const {
        std::vector<std::int64_t> a(lo.size());
        std::size_t rem = idx;
        for (std::size_t i = lo.size(); i-- > 0;) {
            std::size_t s = static_cast<std::size_t>(stride[i]);
            a[i] = lo[i] + static_cast<std::int64_t>(rem / s);
            rem %= s;
        }
        return a;
    }
};

// Sweep u over {0,...,q-1}^d accumulating per-cell tallies of a(lambda(u)).
// Deterministic: fixed chunking, commutative integer merges.
template <typename AOfLam>
std::vector<std::uint64_t> residue_tally(const MonoidScan& scan, unsigned q,
                                         const DivisorRange& range, AOfLam&& a_of_lam,
                                         unsigned threads, std::uint64_t total) {
    std::size_t d = scan.d, n = scan.n;
    using Counts = std::vector<std::uint64_t>;
    std::size_t chunk = std::max<std::size_t>(std::size_t{1} << 16,
                                              static_cast<std::size_t>(total / 256 + 1));
    return parallel_chunks<Counts>(
        static_cast<std::size_t>(total), threads, chunk,
        [&](std::size_t begin, std::size_t end) {
            Counts local(range.cells, 0);
            std::vector<std::int64_t> u(d, 0);
            std::size_t rem = begin;
            for (std::size_t j = d; j-- > 0;) {
                u[j] = static_cast<std::int64_t>(rem % q);
                rem /= q;
            }
            std::vector<std::int64_t> lam(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < d; ++j) lam[i] += scan.gen[i][j] * u[j];
            for (std::size_t idx = begin; idx < end; ++idx) {
                std::int64_t cell = 0;
                for (std::size_t i = 0; i < n; ++i)
                    cell += (a_of_lam(lam[i]) - range.lo[i]) * range.stride[i];
                ++local[static_cast<std::size_t>(cell)];
                for (std::size_t j = d; j-- > 0;) {
                    if (u[j] + 1 < static_cast<std::int64_t>(q)) {
                        ++u[j];
                        for (std::size_t i = 0; i < n; ++i) lam[i] += scan.gen[i][j];
                        break;
                    }
                    for (std::size_t i = 0; i < n; ++i) lam[i] -= scan.gen[i][j] * u[j];
                    u[j] = 0;
                }
            }
            return local;
        },
        [&](Counts& acc, const Counts& part) {
            if (acc.empty()) acc.assign(range.cells, 0);
            for (std::size_t i = 0; i < part.size(); ++i) acc[i] += part[i];
        });
}

}  // namespace detail

// Decomposition of F^e_* A at level q: iterate residues u over {0,...,q-1}^d
// and accumulate summand classes. q need not be a prime power; the lattice
// decomposition makes sense for any integer q >= 2.
inline FrobeniusDecomposition decompose(const ConeSpec& c, unsigned q, unsigned threads = 1,
                                        std::uint64_t budget = (1u << 24)) {
    if (q < 2) throw Error("Frobenius level q must be at least 2");
    std::size_t d = c.dim(), n = c.num_generators();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < d; ++j) {
        if (total > budget / q + 1) throw BudgetExceeded("decompose residue budget exceeded");
        total *= q;
    }
    if (total > budget) throw BudgetExceeded("decompose residue budget exceeded");

    MonoidScan scan(c);
    ClassGroup cl(c);
    detail::DivisorRange range(scan, q, /*use_ceil=*/false);
    std::int64_t iq = q;
    auto counts = detail::residue_tally(
        scan, q, range, [iq](std::int64_t lam) { return -detail::i64_floor_div(lam, iq); },
        threads, total);

    FrobeniusDecomposition dec;
    dec.q = q;
    dec.total = total;
    for (std::size_t cell = 0; cell < counts.size(); ++cell) {
        if (counts[cell] == 0) continue;
        std::vector<std::int64_t> a = range.decode(cell);
        IVec av(n);
        for (std::size_t i = 0; i < n; ++i) av[i] = a[i];
        ClassElement ce = cl.project(av);
        dec.class_counts[ce] += counts[cell];
        dec.witnesses.emplace(ce, av);
    }
    ClassElement can_class = cl.project(IVec(n, Int(1)));
    if (auto it = dec.class_counts.find(cl.identity()); it != dec.class_counts.end())
        dec.free_count = it->second;
    if (auto it = dec.class_counts.find(can_class); it != dec.class_counts.end())
        dec.canonical_count = it->second;
    return dec;
}

// a_e / q^d, the finite-level F-signature estimate.
inline Rational fsig_estimate(const ConeSpec& c, unsigned q, unsigned threads = 1) {
    FrobeniusDecomposition dec = decompose(c, q, threads);
    return Rational(Int(dec.free_count), Int(dec.total));
}

struct ConicCensus {
    std::map<ClassElement, IVec> classes;  // class -> witness divisor vector
    bool stable = false;
    std::vector<unsigned> denominators;
};

// Classes of the conic divisorial ideals D(ceil(lambda(u/Q))), sampled over
// the residue grids of the given denominators and their doubles. stable means
// every sampled grid produced the same class set; the census is a
// semi-decision cross-validated elsewhere against decompose outputs, not a
// proof of exhaustiveness.
inline ConicCensus conic_census(const ConeSpec& c, std::vector<unsigned> denominators = {16, 27},
                                unsigned threads = 1) {
    if (denominators.size() < 2) throw Error("conic census needs at least two denominators");
    bool coprime_pair = false;
    for (std::size_t i = 0; i < denominators.size() && !coprime_pair; ++i)
        for (std::size_t j = i + 1; j < denominators.size(); ++j)
            if (std::gcd(denominators[i], denominators[j]) == 1) {
                coprime_pair = true;
                break;
            }
    if (!coprime_pair) throw Error("conic census needs a coprime pair of denominators");
    std::size_t d = c.dim(), n = c.num_generators();
    MonoidScan scan(c);
    ClassGroup cl(c);

    std::vector<unsigned> all_q = denominators;
    for (unsigned q : denominators) all_q.push_back(2 * q);

    ConicCensus census;
    census.denominators = denominators;
    std::vector<std::set<ClassElement>> class_sets;
    for (unsigned q : all_q) {
        std::uint64_t total = 1;
        for (std::size_t j = 0; j < d; ++j) total *= q;
        detail::DivisorRange range(scan, q, /*use_ceil=*/true);
        std::int64_t iq = q;
        auto counts = detail::residue_tally(
            scan, q, range, [iq](std::int64_t lam) { return detail::i64_ceil_div(lam, iq); },
            threads, total);
        std::set<ClassElement> cs;
        for (std::size_t cell = 0; cell < counts.size(); ++cell) {
            if (counts[cell] == 0) continue;
            std::vector<std::int64_t> a = range.decode(cell);
            IVec av(n);
            for (std::size_t i = 0; i < n; ++i) av[i] = a[i];
            ClassElement ce = cl.project(av);
            cs.insert(ce);
            census.classes.emplace(ce, av);
        }
        class_sets.push_back(std::move(cs));
    }
    census.stable = true;
    for (std::size_t i = 1; i < class_sets.size(); ++i)
        if (class_sets[i] != class_sets[0]) census.stable = false;
    return census;
}

enum class UlrichVerdict { Ulrich, NotUlrich, Inconclusive };

inline std::string to_string(UlrichVerdict v) {
    switch (v) {
        case UlrichVerdict::Ulrich: return "Ulrich";
        case UlrichVerdict::NotUlrich: return "NotUlrich";
        default: return "Inconclusive";
    }
}

// Compares mu_A(D(a)) with a supplied multiplicity estimate (rank one, so
// e(D(a)) = e(A)). mu == e characterizes Ulrich modules among MCM modules.
inline UlrichVerdict ulrich_test(const ConeSpec& c, const IVec& a, const Rational& mult_estimate,
                                 const Rational& tolerance = Rational(0)) {
    Rational mu(Int(module_mu(c, a)));
    if (abs(mu - mult_estimate) <= tolerance) return UlrichVerdict::Ulrich;
    if (mu < mult_estimate - tolerance) return UlrichVerdict::NotUlrich;
    return UlrichVerdict::Inconclusive;
}

}  // namespace toricinv
