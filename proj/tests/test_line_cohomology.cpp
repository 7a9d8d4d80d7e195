#include <doctest.h>

#include "fano/line_cohomology.hpp"
#include "support/oracles.hpp"

using namespace fano;

TEST_SUITE("line_cohomology") {

TEST_CASE("pinned values") {
    const Model f1(1), f0(0);

    CHECK(line_cohomology(f1, 0, 0) == CohomologyVector{1, 0, 0, 0, 1});
    CHECK(line_cohomology(f1, 1, -3).h1 == 5);
    CHECK(line_cohomology(f1, -2, 0) == CohomologyVector{0, 0, 0, 0, 0});
    CHECK(line_cohomology(f1, 1, 0).h0 == 4);
    CHECK(line_cohomology(f1, -1, 5) == CohomologyVector{0, 0, 0, 0, 0});

    CHECK(line_cohomology(f0, -1, 3) == CohomologyVector{0, 0, 0, 0, 0});
    CHECK(line_cohomology(f0, -1, -7) == CohomologyVector{0, 0, 0, 0, 0});
    CHECK(line_cohomology(f0, 1, 1).h0 == 6);
}

TEST_CASE("chi via Riemann-Roch") {
    const Model f1(1), f0(0);
    CHECK(line_chi_rr(f1, 0, 0) == 1);
    CHECK(line_chi_rr(f1, -1, 0) == 0);
    CHECK(line_chi_rr(f0, 1, 1) == 6);
    for (int e : {0, 1}) {
        const Model m(e);
        for (Int a = -12; a <= 12; ++a)
            for (Int b = -12; b <= 12; ++b)
                CHECK(line_cohomology(m, a, b).chi == line_chi_rr(m, a, b));
    }
}

TEST_CASE("Serre duality and involution") {
    const Model f1(1), f0(0);
    CHECK(serre_dual_indices(f1, 0, 0) == std::pair<Int, Int>{-3, -1});
    CHECK(serre_dual_indices(f0, 0, 0) == std::pair<Int, Int>{-3, -2});
    CHECK(serre_dual_indices(f1, -3, -1) == std::pair<Int, Int>{0, 0});
    for (int e : {0, 1}) {
        const Model m(e);
        for (Int a = -12; a <= 12; ++a) {
            for (Int b = -12; b <= 12; ++b) {
                const auto [da, db] = serre_dual_indices(m, a, b);
                const auto [dda, ddb] = serre_dual_indices(m, da, db);
                CHECK(dda == a);
                CHECK(ddb == b);
                const CohomologyVector v = line_cohomology(m, a, b);
                const CohomologyVector dual = line_cohomology(m, da, db);
                for (int i = 0; i <= 3; ++i) CHECK(v.h(i) == dual.h(3 - i));
            }
        }
    }
}

TEST_CASE("independent oracles") {
    const Model f0(0), f1(1);
    for (Int a = -12; a <= 12; ++a) {
        for (Int b = -12; b <= 12; ++b) {
            const CohomologyVector v0 = line_cohomology(f0, a, b);
            const auto k = oracle::kunneth_line(a, b);
            for (int i = 0; i <= 3; ++i) CHECK(v0.h(i) == k[i]);
            if (a >= -1) {
                const CohomologyVector v1 = line_cohomology(f1, a, b);
                const auto p = oracle::pushforward_line(a, b);
                for (int i = 0; i <= 3; ++i) CHECK(v1.h(i) == p[i]);
            }
        }
    }
}

TEST_CASE("effectivity matches sections") {
    for (int e : {0, 1}) {
        const Model m(e);
        for (Int a = -12; a <= 12; ++a)
            for (Int b = -12; b <= 12; ++b)
                CHECK(line_properties(m, a, b).effective == (line_cohomology(m, a, b).h0 > 0));
    }
}

TEST_CASE("divisor properties") {
    const Model f1(1), f0(0);

    const LineProperties exceptional = line_properties(f1, 1, -1);
    CHECK(exceptional.effective);
    CHECK_FALSE(exceptional.globally_generated);
    CHECK(exceptional.smooth_integral_member);
    CHECK_FALSE(exceptional.smooth_member_criterion_extended);

    const LineProperties trivial = line_properties(f1, 0, 0);
    CHECK(trivial.effective);
    CHECK(trivial.globally_generated);
    CHECK(trivial.smooth_integral_member);

    const LineProperties none = line_properties(f1, 2, -3);
    CHECK_FALSE(none.effective);
    CHECK_FALSE(none.globally_generated);
    CHECK_FALSE(none.smooth_integral_member);

    // a >= 0, a+b >= 0 is effective on the blow-up even when b < 0
    CHECK(line_properties(f1, 2, -2).effective);
    CHECK_FALSE(line_properties(f1, 2, -2).smooth_integral_member);

    CHECK(line_properties(f0, 1, 0).smooth_integral_member);
    CHECK(line_properties(f0, 1, 0).smooth_member_criterion_extended);
    CHECK_FALSE(line_properties(f0, 1, -1).effective);
}

}  // TEST_SUITE
