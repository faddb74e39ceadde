#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricinv/class_group.hpp"
#include "toricinv/colength.hpp"
#include "toricinv/divisorial.hpp"
#include "toricinv/frobenius.hpp"
#include "toricinv/polytope.hpp"
#include "toricinv/report.hpp"

namespace toricinv {

// Expected value with its provenance: an author-year literature citation for
// published values, or "oracle" for values frozen from this library's own
// independent enumeration routes.
struct Expected {
    std::string value;
    std::string provenance;
};

struct EstimateTarget {
    std::vector<unsigned> params;  // q list or n list
    Rational target;
    Rational rel_tol;  // relative tolerance
    std::string provenance;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    IntMatrix generators;
    std::map<std::string, Expected> expected;  // fsig, classgroup, gorenstein, index, type, census
    std::optional<EstimateTarget> ehk;
    std::optional<EstimateTarget> mult;
    std::vector<unsigned> decompose_q;      // levels for decomposition checks
    std::vector<unsigned> mu_identity_q;    // levels for sum-of-mu = colength
    std::vector<unsigned> census_denoms;    // empty = skip census
};

// The ring catalog. Generator matrices for subring constructions are written
// in an explicit basis of the exponent sublattice:
//  * 2nd Veronese of k[x_1..x_d]: even-coordinate-sum sublattice. For d = 2
//    the basis is {(0,1),(2,-1)}-dual; for d = 3 the basis {x+y, x+z, y+z};
//    for d >= 4 the basis {e_1+e_d, ..., e_{d-1}+e_d, 2 e_d}, giving facet
//    normals e_1, ..., e_{d-1}, (1,...,1,2).
//  * 3rd Veronese of k[x,y]: basis {(1,2),(0,3)}-dual, normals (0,1),(3,-1).
//  * Segre product P_n of n copies of k[x,y]: coordinates (degree,
//    x-exponents a_1..a_n); facet normals (0,e_i) and (1,-e_i).
//  * Z/3 invariant rings (diag(xi..xi, xi^2..xi^2), d = 2m, xi^3 = 1):
//    m = 1 basis {(1,1),(0,3)} gives normals (1,0),(1,3); m = 2 basis
//    {e_1+e_3, e_2+e_3, 3 e_3, 2 e_3+e_4} gives normals e_1, e_2,
//    (1,1,3,2), e_4.
//  * ex_second: 2nd Veronese of the quadric cone k[x,y,z,w]/(xw-yz).
inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> cat;
    auto fsig_wy = std::string("Watanabe-Yoshida 2004 Thm 5.1 volume formula");
    auto oracle = std::string("oracle: exact enumeration, frozen");

    auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

    for (unsigned d = 1; d <= 5; ++d) {
        CatalogEntry e;
        e.name = "poly_" + std::to_string(d);
        e.description = "polynomial ring in " + std::to_string(d) + " variables";
        e.generators = IntMatrix::identity(d);
        e.expected = {{"fsig", {"1", "regular ring: free Frobenius pushforward (Kunz 1969)"}},
                      {"classgroup", {"0", "UFD"}},
                      {"gorenstein", {"true", "regular"}},
                      {"index", {"1", "regular"}},
                      {"type", {"1", "regular"}}};
        if (d <= 4) e.expected["census"] = {"1", "only free summands"};
        if (d <= 3) {
            e.ehk = EstimateTarget{{8, 16}, Rational(1), Rational(1, 100), "Kunz 1969: ehk = 1"};
            e.mult = EstimateTarget{{32, 64}, Rational(1), Rational(5, 100), "regular: e = 1"};
            e.decompose_q = {4, 8, 16};
            e.mu_identity_q = {4, 8};
        } else {
            e.decompose_q = {4, 8};
        }
        if (d <= 4) e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "quadric";
        e.description = "Segre P1 x P1: k[x,y,z,w]/(xw-yz)";
        e.generators = IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
        e.expected = {
            {"fsig", {"2/3", "e = 2 hypersurface: fsig = 2 - ehk = 2/3; " + fsig_wy}},
            {"classgroup", {"Z", "Picard group of the quadric cone"}},
            {"gorenstein", {"true", "canonical class (1,1,1,1) = lambda(1,1,1)"}},
            {"index", {"1", "Gorenstein"}},
            {"type", {"1", "Gorenstein"}},
            {"census", {"3", "Gorenstein FFRT system of three modules {A, M1, M2}"}}};
        e.ehk = EstimateTarget{{8, 16, 32}, Rational(4, 3), Rational(2, 100),
                               "Watanabe-Yoshida 2005: sharp dimension-3 value 4/3"};
        e.mult = EstimateTarget{{16, 32}, Rational(2), Rational(5, 100), "quadric hypersurface: e = 2"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "p2p2";
        e.description = "Segre P2 x P2 coordinate ring (d = 5)";
        e.generators = IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 1, 1, -1, -1}};
        e.expected = {{"fsig", {"11/20", "Eulerian slice A(5,2)/5! of the 5-cube"}},
                      {"classgroup", {"Z", "oracle"}},
                      {"gorenstein", {"true", "Segre product of polynomial rings"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"5", oracle}}};
        e.decompose_q = {4, 8};
        e.census_denoms = {8, 9};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "veronese2_2";
        e.description = "2nd Veronese of k[x,y] (A_1 singularity)";
        e.generators = IntMatrix{{0, 1}, {2, -1}};
        e.expected = {{"fsig", {"1/2", "Smith-Van den Bergh 1997 / " + fsig_wy}},
                      {"classgroup", {"Z/2", "index-2 sublattice"}},
                      {"gorenstein", {"true", "even Veronese degree"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"2", "FFRT system {A, M}"}}};
        e.ehk = EstimateTarget{{16, 32}, Rational(3, 2), Rational(2, 100),
                               "Watanabe-Yoshida 2001: dimension-2 minimal value 3/2"};
        e.mult = EstimateTarget{{16, 32}, Rational(2), Rational(5, 100), "quadric cone: e = 2"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "veronese2_3";
        e.description = "2nd Veronese of k[x,y,z]";
        e.generators = IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        e.expected = {{"fsig", {"1/2", "Smith-Van den Bergh 1997 / " + fsig_wy}},
                      {"classgroup", {"Z/2", "index-2 sublattice"}},
                      {"gorenstein", {"false", "odd Veronese degree"}},
                      {"index", {"2", "canonical class has order 2"}},
                      {"type", {"3", "ehk = (type+1)/2 with ehk = 2"}},
                      {"census", {"2", "non-Gorenstein FFRT system {A, omega}"}}};
        e.ehk = EstimateTarget{{8, 16}, Rational(2), Rational(3, 100),
                               "minimal multiplicity: ehk = e/2 = 2"};
        e.mult = EstimateTarget{{16, 32}, Rational(4), Rational(5, 100), "2nd Veronese: e = 2^(d-1) = 4"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "veronese2_4";
        e.description = "2nd Veronese of k[x1..x4]";
        e.generators = IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 2}};
        e.expected = {{"fsig", {"1/2", "Smith-Van den Bergh 1997 / " + fsig_wy}},
                      {"classgroup", {"Z/2", "index-2 sublattice"}},
                      {"gorenstein", {"true", "even Veronese degree"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"2", "FFRT system {A, M}"}}};
        e.decompose_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "veronese2_5";
        e.description = "2nd Veronese of k[x1..x5]";
        e.generators = IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0}, {1, 1, 1, 1, 2}};
        e.expected = {{"fsig", {"1/2", "Smith-Van den Bergh 1997 / " + fsig_wy}},
                      {"classgroup", {"Z/2", "index-2 sublattice"}},
                      {"gorenstein", {"false", "odd Veronese degree"}},
                      {"index", {"2", "canonical class has order 2"}},
                      {"type", {"5", oracle}},
                      {"census", {"2", "non-Gorenstein FFRT system {A, omega}"}}};
        e.decompose_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "kxy3";
        e.description = "3rd Veronese of k[x,y]";
        e.generators = IntMatrix{{0, 1}, {3, -1}};
        e.expected = {{"fsig", {"1/3", "Watanabe-Yoshida 2004: quotient singularity 1/|G|"}},
                      {"classgroup", {"Z/3", "index-3 sublattice"}},
                      {"gorenstein", {"false", "1/3(1,1) is not in SL_2"}},
                      {"index", {"3", "canonical class has order 3"}},
                      {"type", {"2", "omega generated by two monomials"}},
                      {"census", {"3", oracle}}};
        e.ehk = EstimateTarget{{16, 32}, Rational(2), Rational(5, 100),
                               "Ulrich decomposition identity: ehk = 2"};
        e.mult = EstimateTarget{{16, 32}, Rational(3), Rational(5, 100), "3rd Veronese of a plane: e = 3"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "segre_p2";
        e.description = "Segre product of 2 copies of k[x,y] (P_2, same ring as quadric)";
        e.generators = IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}};
        e.expected = {{"fsig", {"2/3", "Higashitani-Nakajima: fsig(P_n) = 2/(n+1)"}},
                      {"classgroup", {"Z", "Picard group of the quadric cone"}},
                      {"gorenstein", {"true", "Segre product of polynomial rings"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"3", "lattice-isomorphic to the quadric"}}};
        e.ehk = EstimateTarget{{8, 16, 32}, Rational(4, 3), Rational(2, 100),
                               "isomorphic to the quadric: ehk = 4/3"};
        e.mult = EstimateTarget{{16, 32}, Rational(2), Rational(5, 100), "quadric hypersurface: e = 2"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "segre_p3";
        e.description = "Segre product of 3 copies of k[x,y] (P_3, d = 4)";
        e.generators = IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                 {1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}};
        e.expected = {{"fsig", {"1/2", "Higashitani-Nakajima: fsig(P_n) = 2/(n+1)"}},
                      {"classgroup", {"Z^2", "rank n-1 Segre class lattice"}},
                      {"gorenstein", {"true", "Segre product of polynomial rings"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"7", "Higashitani-Nakajima, conic classes of Hibi rings: 7 classes"}}};
        e.decompose_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "segre_p4";
        e.description = "Segre product of 4 copies of k[x,y] (P_4, d = 5)";
        e.generators = IntMatrix{{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 1}, {1, -1, 0, 0, 0}, {1, 0, -1, 0, 0},
                                 {1, 0, 0, -1, 0}, {1, 0, 0, 0, -1}};
        e.expected = {{"fsig", {"2/5", "Higashitani-Nakajima: fsig(P_n) = 2/(n+1)"}},
                      {"classgroup", {"Z^3", "rank n-1 Segre class lattice"}},
                      {"gorenstein", {"true", "Segre product of polynomial rings"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"15", oracle}}};
        e.decompose_q = {4, 8};
        e.census_denoms = {8, 9};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "ex_second";
        e.description = "2nd Veronese of the quadric k[x,y,z,w]/(xw-yz)";
        e.generators = IntMatrix{{1, 1, 0}, {1, -1, 0}, {0, 0, 1}, {2, 0, -1}};
        e.expected = {{"fsig", {"1/3", "halving under the degree-2 cover: fsig = (2/3)/2 = e/24"}},
                      {"classgroup", {"Z x Z/2", oracle}},
                      {"gorenstein", {"true", "Veronese transfer of the Gorenstein quadric"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"6", oracle}}};
        e.ehk = EstimateTarget{{8, 16}, Rational(3), Rational(5, 100),
                               "Watanabe-Yoshida 2001 colength formula for m^2: ehk = 6/2 = 3"};
        e.mult = EstimateTarget{{8, 16}, Rational(8), Rational(8, 100),
                                "maximal embedding dimension: e = 8"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "cyclic3_d2";
        e.description = "Z/3 invariant ring diag(xi, xi^2) on k[x,y] (A_2 singularity)";
        e.generators = IntMatrix{{1, 0}, {1, 3}};
        e.expected = {{"fsig", {"1/3", "Watanabe-Yoshida 2004: fsig = 1/|G|"}},
                      {"classgroup", {"Z/3", "index-3 sublattice"}},
                      {"gorenstein", {"true", "subgroup of SL_2"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"3", "Gorenstein FFRT system of three modules {A, M1, M2}"}}};
        e.ehk = EstimateTarget{{16, 32}, Rational(5, 3), Rational(5, 100),
                               "e = 2 hypersurface: ehk = 2 - fsig = 5/3"};
        e.mult = EstimateTarget{{16, 32}, Rational(2), Rational(5, 100), "A_2 hypersurface: e = 2"};
        e.decompose_q = {4, 8, 16};
        e.mu_identity_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "cyclic3_d4";
        e.description = "Z/3 invariant ring diag(xi, xi, xi^2, xi^2) on k[x1..x4]";
        e.generators = IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 3, 2}, {0, 0, 0, 1}};
        e.expected = {{"fsig", {"1/3", "Watanabe-Yoshida 2004: fsig = 1/|G|"}},
                      {"classgroup", {"Z/3", "index-3 sublattice"}},
                      {"gorenstein", {"true", "equal weight multiplicities put G in SL_4"}},
                      {"index", {"1", "Gorenstein"}},
                      {"type", {"1", "Gorenstein"}},
                      {"census", {"3", "Gorenstein FFRT system of three modules {A, M1, M2}"}}};
        e.decompose_q = {4, 8};
        e.census_denoms = {16, 27};
        add(std::move(e));
    }
    return cat;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    static const std::vector<CatalogEntry> cat = catalog();
    for (const auto& e : cat)
        if (e.name == name) return e;
    throw Error("unknown catalog ring: " + name +
                " (run `catalog list` for available names)");
}

}  // namespace toricinv
