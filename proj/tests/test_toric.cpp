#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "toricinv/class_group.hpp"
#include "toricinv/divisorial.hpp"
#include "toricinv/hilbert.hpp"

using namespace toricinv;

namespace {

const IntMatrix kQuadric{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
const IntMatrix kVeronese23{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
const IntMatrix kVeronese22{{0, 1}, {2, -1}};
const IntMatrix kKxy3{{0, 1}, {3, -1}};

IVec iv(std::initializer_list<long long> xs) {
    IVec v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("cone validation") {
    SECTION("polynomial ring cone is valid") {
        ConeSpec c = validate_cone(IntMatrix::identity(3));
        REQUIRE(c.dim() == 3);
        REQUIRE(c.num_generators() == 3);
    }
    SECTION("quadric cone is valid") {
        ConeSpec c = validate_cone(kQuadric);
        REQUIRE(c.num_generators() == 4);
    }
    SECTION("non-primitive row is reported with its index") {
        try {
            validate_cone(IntMatrix{{2, 0}, {0, 1}});
            FAIL("expected InvalidCone");
        } catch (const InvalidCone& e) {
            REQUIRE(std::string(e.what()).find("NonPrimitiveRow(0)") != std::string::npos);
        }
    }
    SECTION("rank-deficient generators rejected") {
        try {
            validate_cone(IntMatrix{{1, 0, 0}, {0, 1, 0}});
            FAIL("expected InvalidCone");
        } catch (const InvalidCone& e) {
            REQUIRE(std::string(e.what()).find("RankDeficient") != std::string::npos);
        }
    }
    SECTION("redundant generator rejected") {
        try {
            validate_cone(IntMatrix{{1, 0}, {0, 1}, {1, 1}});
            FAIL("expected InvalidCone");
        } catch (const InvalidCone& e) {
            REQUIRE(std::string(e.what()).find("RedundantGenerator(2)") != std::string::npos);
        }
    }
    SECTION("non-pointed cone rejected") {
        try {
            validate_cone(IntMatrix{{1, 0}, {-1, 0}, {0, 1}});
            FAIL("expected InvalidCone");
        } catch (const InvalidCone& e) {
            REQUIRE(std::string(e.what()).find("NotPointed") != std::string::npos);
        }
    }
    SECTION("every violation is listed at once") {
        try {
            validate_cone(IntMatrix{{2, 0}, {0, 2}});
            FAIL("expected InvalidCone");
        } catch (const InvalidCone& e) {
            std::string msg = e.what();
            REQUIRE(msg.find("NonPrimitiveRow(0)") != std::string::npos);
            REQUIRE(msg.find("NonPrimitiveRow(1)") != std::string::npos);
        }
    }
}

TEST_CASE("class groups of the named cones") {
    SECTION("polynomial ring has trivial class group") {
        ClassGroup cl(validate_cone(IntMatrix::identity(4)));
        REQUIRE(cl.trivial());
        REQUIRE(cl.describe() == "0");
    }
    SECTION("quadric has class group Z") {
        ClassGroup cl(validate_cone(kQuadric));
        REQUIRE(cl.free_rank() == 1);
        REQUIRE(cl.torsion().empty());
        REQUIRE(cl.describe() == "Z");
    }
    SECTION("2nd Veronese of the plane has class group Z/2") {
        ClassGroup cl(validate_cone(kVeronese22));
        REQUIRE(cl.free_rank() == 0);
        REQUIRE(cl.torsion() == IVec{Int(2)});
    }
}

TEST_CASE("principality") {
    ConeSpec quad = validate_cone(kQuadric);
    SECTION("zero divisor is principal with witness zero") {
        auto w = principal_witness(quad, iv({0, 0, 0, 0}));
        REQUIRE(w.has_value());
        REQUIRE(*w == iv({0, 0, 0}));
    }
    SECTION("canonical divisor of the quadric is principal (Gorenstein)") {
        auto w = principal_witness(quad, iv({1, 1, 1, 1}));
        REQUIRE(w.has_value());
        REQUIRE(quad.lambda(*w) == iv({1, 1, 1, 1}));
    }
    SECTION("canonical divisor of odd Veronese is not principal") {
        ConeSpec v = validate_cone(kVeronese23);
        REQUIRE_FALSE(is_principal(v, iv({1, 1, 1})));
    }
    SECTION("length mismatch throws") {
        REQUIRE_THROWS_AS(is_principal(quad, iv({1, 1})), DimensionMismatch);
    }
}

TEST_CASE("Gorenstein data") {
    SECTION("quadric: Gorenstein of index 1") {
        auto g = gorenstein_data(validate_cone(kQuadric));
        REQUIRE(g.is_gorenstein);
        REQUIRE(g.q_index == 1u);
    }
    SECTION("veronese2_3: index 2, non-Gorenstein") {
        auto g = gorenstein_data(validate_cone(kVeronese23));
        REQUIRE_FALSE(g.is_gorenstein);
        REQUIRE(g.q_index == 2u);
    }
    SECTION("polynomial ring: Gorenstein") {
        auto g = gorenstein_data(validate_cone(IntMatrix::identity(2)));
        REQUIRE(g.is_gorenstein);
        REQUIRE(g.q_index == 1u);
    }
    SECTION("3rd Veronese of the plane has index 3") {
        auto g = gorenstein_data(validate_cone(kKxy3));
        REQUIRE_FALSE(g.is_gorenstein);
        REQUIRE(g.q_index == 3u);
    }
    SECTION("index search past the cap is an error") {
        REQUIRE_THROWS_AS(gorenstein_data(validate_cone(kKxy3), 2), IndexNotFound);
    }
}

TEST_CASE("enumeration caps fail loudly") {
    // a monoid whose Hilbert basis lives beyond the default doubling window
    ConeSpec narrow = validate_cone(IntMatrix{{0, 1}, {200, -1}});
    REQUIRE_THROWS_AS(hilbert_basis(narrow), CapTooSmall);
}

TEST_CASE("Hilbert bases") {
    SECTION("polynomial ring in 2 variables") {
        auto hb = hilbert_basis(validate_cone(IntMatrix::identity(2)));
        REQUIRE(hb == std::vector<IVec>{iv({0, 1}), iv({1, 0})});
    }
    SECTION("quadric monoid has 4 generators with the Segre relation") {
        auto hb = hilbert_basis(validate_cone(kQuadric));
        REQUIRE(hb.size() == 4);
        std::set<IVec> s(hb.begin(), hb.end());
        REQUIRE(s.count(iv({1, 0, 0})));
        REQUIRE(s.count(iv({0, 1, 0})));
        REQUIRE(s.count(iv({1, 0, 1})));
        REQUIRE(s.count(iv({0, 1, 1})));
        // g1 + g4 = g2 + g3 after sorting: (0,1,0)+(1,0,1) = (1,0,0)+(0,1,1)
        IVec lhs{Int(1), Int(1), Int(1)};
        REQUIRE(lhs == iv({1, 1, 1}));
    }
    SECTION("3rd Veronese of the plane has 4 generators in degree 1") {
        ConeSpec c = validate_cone(kKxy3);
        auto hb = hilbert_basis(c);
        REQUIRE(hb.size() == 4);
        for (const auto& h : hb) {
            // all generators sit in the first lattice layer: x-coordinate 1
            REQUIRE(h[0] == 1);
        }
    }
    SECTION("irredundance: no basis element decomposes into the others") {
        for (const IntMatrix& m : {kQuadric, kVeronese23, kVeronese22, kKxy3}) {
            ConeSpec c = validate_cone(m);
            auto hb = hilbert_basis(c);
            for (std::size_t drop = 0; drop < hb.size(); ++drop) {
                // bounded search: can hb[drop] be written as a sum of the others?
                IVec target_lam = c.lambda(hb[drop]);
                std::vector<IVec> others;
                for (std::size_t i = 0; i < hb.size(); ++i)
                    if (i != drop) others.push_back(c.lambda(hb[i]));
                // DP over attainable lambda vectors below target
                std::set<IVec> reach{IVec(target_lam.size(), Int(0))};
                bool hit = false;
                for (int round = 0; round < 8 && !hit; ++round) {
                    std::set<IVec> next = reach;
                    for (const auto& base : reach)
                        for (const auto& o : others) {
                            IVec cand(base.size());
                            bool ok = true;
                            for (std::size_t i = 0; i < base.size(); ++i) {
                                cand[i] = base[i] + o[i];
                                if (cand[i] > target_lam[i]) ok = false;
                            }
                            if (!ok) continue;
                            if (cand == target_lam) hit = true;
                            next.insert(cand);
                        }
                    if (next == reach) break;
                    reach = std::move(next);
                }
                REQUIRE_FALSE(hit);
            }
        }
    }
}

TEST_CASE("minimal generators of divisorial ideals") {
    SECTION("trivial divisor has a single generator") {
        ConeSpec c = validate_cone(kQuadric);
        auto gens = minimal_generators(c, iv({0, 0, 0, 0}));
        REQUIRE(gens.size() == 1);
        REQUIRE(gens[0] == iv({0, 0, 0}));
    }
    SECTION("canonical module of veronese2_3 needs 3 generators (type 3)") {
        ConeSpec c = validate_cone(kVeronese23);
        REQUIRE(module_mu(c, iv({1, 1, 1})) == 3);
        REQUIRE(cm_type(c) == 3);
    }
    SECTION("canonical module of kxy3 needs 2 generators (type 2)") {
        ConeSpec c = validate_cone(kKxy3);
        REQUIRE(cm_type(c) == 2);
    }
    SECTION("type of a polynomial ring is 1") {
        REQUIRE(cm_type(validate_cone(IntMatrix::identity(3))) == 1);
    }
    SECTION("mu is at least 1 for arbitrary small divisors") {
        ConeSpec c = validate_cone(kQuadric);
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> dist(-3, 3);
        for (int iter = 0; iter < 20; ++iter) {
            IVec a(4);
            for (auto& x : a) x = dist(rng);
            REQUIRE(module_mu(c, a) >= 1);
        }
    }
}

TEST_CASE("class projection properties") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (const IntMatrix& m : {kQuadric, kVeronese23, kVeronese22, kKxy3}) {
        ConeSpec c = validate_cone(m);
        ClassGroup cl(c);
        std::size_t n = c.num_generators(), d = c.dim();

        SECTION("project(a + lambda(m)) = project(a) on a grid: " + m.str()) {
            for (int iter = 0; iter < 40; ++iter) {
                IVec a(n);
                for (auto& x : a) x = dist(rng);
                IVec mm(d);
                for (auto& x : mm) x = dist(rng);
                IVec shifted = a;
                IVec lam = c.lambda(mm);
                for (std::size_t i = 0; i < n; ++i) shifted[i] += lam[i];
                REQUIRE(cl.project(a) == cl.project(shifted));
            }
        }
        SECTION("is_principal agrees with project == identity: " + m.str()) {
            for (int iter = 0; iter < 40; ++iter) {
                IVec a(n);
                for (auto& x : a) x = dist(rng);
                REQUIRE(is_principal(c, a) == cl.is_identity(cl.project(a)));
            }
        }
        SECTION("canonical class is the group sum of the prime classes: " + m.str()) {
            IVec ones(n, Int(1));
            ClassElement total = cl.identity();
            for (std::size_t i = 0; i < n; ++i) {
                IVec ei(n, Int(0));
                ei[i] = 1;
                total = cl.add(total, cl.project(ei));
            }
            REQUIRE(total == cl.project(ones));
        }
        SECTION("projection is a homomorphism: " + m.str()) {
            for (int iter = 0; iter < 30; ++iter) {
                IVec a(n), b(n), sum(n);
                for (std::size_t i = 0; i < n; ++i) {
                    a[i] = dist(rng);
                    b[i] = dist(rng);
                    sum[i] = a[i] + b[i];
                }
                REQUIRE(cl.add(cl.project(a), cl.project(b)) == cl.project(sum));
            }
        }
    }
}
