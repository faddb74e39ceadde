#include <catch2/catch_amalgamated.hpp>

#include "toricinv/bounds.hpp"

using namespace toricinv;

namespace {

// Midpoint grid oracle for the cube corner volume.
Rational corner_grid(const Rational& s, unsigned d, unsigned Q) {
    std::vector<unsigned> k(d, 0);
    std::uint64_t inside = 0;
    while (true) {
        Rational sum = 0;
        for (unsigned j = 0; j < d; ++j) sum += Rational(2 * k[j] + 1, 2 * Q);
        if (sum <= s) ++inside;
        std::size_t j = d;
        bool done = true;
        while (j > 0) {
            --j;
            if (k[j] + 1 < Q) {
                ++k[j];
                done = false;
                break;
            }
            k[j] = 0;
        }
        if (done) break;
    }
    return Rational(Int(inside), int_pow(Int(Q), d));
}

}  // namespace

TEST_CASE("cube corner volumes") {
    SECTION("v(d,d) = 1 and v(1,d) = 1/d! up to d = 8") {
        for (unsigned d = 1; d <= 8; ++d) {
            REQUIRE(cube_corner_volume(Rational(d), d) == 1);
            REQUIRE(cube_corner_volume(Rational(1), d) == Rational(1, factorial(d)));
        }
    }
    SECTION("pinned half-integer values") {
        REQUIRE(cube_corner_volume(Rational(3, 2), 2) == Rational(7, 8));
        // half the cube by symmetry
        REQUIRE(cube_corner_volume(Rational(3, 2), 3) == Rational(1, 2));
        REQUIRE(cube_corner_volume(Rational(2), 4) == Rational(1, 2));
    }
    SECTION("clamped outside [0, d]") {
        REQUIRE(cube_corner_volume(Rational(0), 3) == 0);
        REQUIRE(cube_corner_volume(Rational(-1), 3) == 0);
        REQUIRE(cube_corner_volume(Rational(7), 3) == 1);
    }
    SECTION("matches the 32-grid midpoint oracle within 2/32 for d <= 4") {
        for (unsigned d = 1; d <= 4; ++d)
            for (const Rational& s :
                 {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
                CAPTURE(d, to_string(s));
                REQUIRE(abs(cube_corner_volume(s, d) - corner_grid(s, d, 32)) <=
                        Rational(2, 32));
            }
    }
    SECTION("nondecreasing in s, range [0,1]") {
        for (unsigned d = 1; d <= 5; ++d) {
            Rational prev = 0;
            for (int i = 0; i <= 4 * static_cast<int>(d); ++i) {
                Rational s(i, 4);
                Rational v = cube_corner_volume(s, d);
                REQUIRE(v >= prev);
                REQUIRE(v >= 0);
                REQUIRE(v <= 1);
                prev = v;
            }
        }
    }
    SECTION("interval image respects monotonicity") {
        auto iv = cube_corner_volume(RationalInterval(Rational(1), Rational(3, 2)), 3);
        REQUIRE(iv.lo == Rational(1, 6));
        REQUIRE(iv.hi == Rational(1, 2));
    }
}

TEST_CASE("volume lower bounds") {
    SECTION("r = 0 at s = d recovers the multiplicity") {
        BoundContext ctx;
        ctx.e = 5;
        ctx.d = 3;
        ctx.r = 0;
        ctx.s = 3;
        REQUIRE(ae_bound(ctx) == 5);
    }
    SECTION("e=2, d=3, r=0, s=3/2 evaluates to 2 v(3/2,3) = 1") {
        BoundContext ctx;
        ctx.e = 2;
        ctx.d = 3;
        ctx.r = 0;
        ctx.s = Rational(3, 2);
        REQUIRE(ae_bound(ctx) == 1);
    }
    SECTION("supplied t list changes the subtrahends") {
        BoundContext ctx;
        ctx.e = 2;
        ctx.d = 3;
        ctx.r = 2;
        ctx.s = Rational(3, 2);
        ctx.t = {Rational(1), Rational(1, 2)};
        Rational expect = Rational(2) * (cube_corner_volume(Rational(3, 2), 3) -
                                         cube_corner_volume(Rational(1, 2), 3) -
                                         cube_corner_volume(Rational(1), 3));
        REQUIRE(ae_bound(ctx) == expect);
        ctx.t = {Rational(1)};
        REQUIRE_THROWS_AS(ae_bound(ctx), DimensionMismatch);
    }
    SECTION("critical-point closed form agrees with the direct interval bound, e=3") {
        // the optimum of e(v_s - (e-1) v_{s-1}) on [1,2] is (e/6) s_+^2 at
        // s_+ = (e+2+sqrt(e+2))/(e+1); target for e=3: (1/2)((5+sqrt5)/4)^2
        Rational e = 3;
        Rational eps(1, 100000000);
        RationalInterval root = sqrt_interval(e + 2, eps);
        RationalInterval splus = (RationalInterval(e + 2) + root) / RationalInterval(e + 1);
        RationalInterval direct = ae_bound_interval(e, 3, 2, splus);
        RationalInterval closed = optimal_bound_crit(e, eps);
        // the two enclosures overlap and are tight
        REQUIRE(direct.lo <= closed.hi);
        REQUIRE(closed.lo <= direct.hi);
        REQUIRE(closed.width() < Rational(1, 1000000));
        // reference decimal: (1/2)((5+sqrt 5)/4)^2 = 1.6362712429...
        REQUIRE(closed.lo > parse_rational("1.63627124"));
        REQUIRE(closed.hi < parse_rational("1.63627125"));
    }
}

TEST_CASE("the strict higher-dimension inequality step") {
    SECTION("pinned small and large cases") {
        REQUIRE(higher_check(2, 3) == BoundVerdict::Holds);
        REQUIRE(higher_check(50, 8) == BoundVerdict::Holds);
        REQUIRE(higher_check(2, 2) == BoundVerdict::NotApplicable);
        REQUIRE(higher_check(1, 5) == BoundVerdict::NotApplicable);
    }
    SECTION("holds across the whole acceptance range") {
        for (unsigned e = 2; e <= 50; ++e)
            for (unsigned d = 3; d <= 8; ++d) REQUIRE(higher_check(e, d) == BoundVerdict::Holds);
    }
}

TEST_CASE("Eulerian numbers and slices") {
    SECTION("pinned values") {
        REQUIRE(eulerian(1, 0) == 1);
        REQUIRE(slice_volume(1, 0) == 1);
        REQUIRE(eulerian(3, 1) == 4);
        REQUIRE(slice_volume(3, 1) == Rational(2, 3));
        REQUIRE(eulerian(5, 2) == 66);
        REQUIRE(slice_volume(5, 2) == Rational(11, 20));
        REQUIRE_THROWS_AS(eulerian(3, 3), Error);
    }
    SECTION("row sums are d! and rows are symmetric, d <= 10") {
        EulerianTable tab(10);
        for (unsigned d = 1; d <= 10; ++d) {
            Int sum = 0;
            for (unsigned k = 0; k < d; ++k) {
                sum += tab.at(d, k);
                REQUIRE(tab.at(d, k) == tab.at(d, d - 1 - k));
            }
            REQUIRE(sum == factorial(d));
        }
    }
    SECTION("cube-slice bridge: v(k+1,d) - v(k,d) = A(d,k)/d! for d <= 10") {
        for (unsigned d = 1; d <= 10; ++d)
            for (unsigned k = 0; k < d; ++k) {
                CAPTURE(d, k);
                REQUIRE(cube_corner_volume(Rational(k + 1), d) -
                            cube_corner_volume(Rational(k), d) ==
                        slice_volume(d, k));
            }
    }
    SECTION("slices above one half are exactly (1,0), (3,1), (5,2)") {
        auto hits = euler_lemma_scan(12);
        REQUIRE(hits == std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {3, 1}, {5, 2}});
        REQUIRE(euler_lemma_scan(5) ==
                std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {3, 1}, {5, 2}});
        REQUIRE(euler_lemma_scan(1) == std::vector<std::pair<unsigned, unsigned>>{{1, 0}});
    }
}

TEST_CASE("zigzag constants and the conjecture table") {
    SECTION("pinned limit constants for d <= 6") {
        QVec c = zigzag_constants(6);
        REQUIRE(1 + c[1] == Rational(2));
        REQUIRE(1 + c[2] == Rational(3, 2));
        REQUIRE(1 + c[3] == Rational(4, 3));
        REQUIRE(1 + c[4] == Rational(29, 24));
        REQUIRE(1 + c[5] == Rational(17, 15));
        REQUIRE(1 + c[6] == Rational(781, 720));
    }
    SECTION("table rows carry both columns") {
        auto rows = conjecture_table(6);
        REQUIRE(rows.size() == 6);
        REQUIRE(rows[0].rhs == Rational(2));
        REQUIRE(rows[1].rhs == Rational(3, 2));
        REQUIRE(rows[2].rhs == Rational(4, 3));
        REQUIRE(rows[3].rhs == Rational(5, 4));
        REQUIRE(rows[4].rhs == Rational(8, 7));
        REQUIRE(rows[5].rhs == Rational(9, 8));
    }
    SECTION("limit constants decrease; the refined bound dominates from d = 4 on") {
        // the refined conjectured bound is the improvement: RHS >= 1 + c_d,
        // with equality exactly in dimensions 1..3
        auto rows = conjecture_table(12);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            REQUIRE(rows[i].gessel_monsky > 1);
            if (i > 0) REQUIRE(rows[i].gessel_monsky < rows[i - 1].gessel_monsky);
            if (rows[i].d <= 3)
                REQUIRE(rows[i].gessel_monsky == rows[i].rhs);
            else
                REQUIRE(rows[i].gessel_monsky < rows[i].rhs);
        }
    }
}

TEST_CASE("refined three-dimensional lower bounds") {
    SECTION("refined bound strictly exceeds e/6 + 1 for 3 <= e <= 50") {
        for (unsigned e = 3; e <= 50; ++e) {
            Rational target = Rational(e, 6) + 1;
            auto verdict = separated_above(
                [&](const Rational& eps) { return optimal_bound_refined(Rational(e), eps); },
                target);
            CAPTURE(e);
            REQUIRE(verdict == BoundVerdict::Holds);
        }
    }
    SECTION("critical bound enclosure is positive and finite") {
        auto b = optimal_bound_crit(Rational(3));
        REQUIRE(b.lo > 0);
        REQUIRE(b.width() < Rational(1, 1000));
    }
}
