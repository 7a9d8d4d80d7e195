#include <doctest.h>

#include "fano/bundle.hpp"
#include "fano/cotangent.hpp"
#include "fano/line_cohomology.hpp"
#include "support/oracles.hpp"

using namespace fano;

namespace {

std::array<Int, 4> line_dims(Model m, const Int& a, const Int& b) {
    const CohomologyVector v = line_cohomology(m, a, b);
    return {v.h0, v.h1, v.h2, v.h3};
}

// Dimensions of both Euler presentations of Ω(aξ+bf) as long exact
// sequences, entries for Ω taken from the computed intervals.
bool les_consistent(Model m, const Int& a, const Int& b, const IntervalCohomology& v) {
    using oracle::Range;
    const Int e = m.e();

    std::vector<Range> sub;  // 0 -> Ω(D) -> mid -> O(D) -> 0
    {
        const auto mid_a = line_dims(m, a - 1, b);
        const auto mid_b = line_dims(m, a - 1, b + e);
        const auto quot = line_dims(m, a, b);
        for (int i = 0; i < 4; ++i) {
            sub.push_back(Range{v.h[i].lo, v.h[i].hi});
            const Int mid = 2 * mid_a[i] + mid_b[i];
            sub.push_back(Range{mid, mid});
            sub.push_back(Range{quot[i], quot[i]});
        }
    }
    std::vector<Range> quot;  // 0 -> O(D-3ξ+ef) -> mid -> Ω(D) -> 0
    {
        const auto first = line_dims(m, a - 3, b + e);
        const auto mid_a = line_dims(m, a - 2, b + e);
        const auto mid_b = line_dims(m, a - 2, b);
        for (int i = 0; i < 4; ++i) {
            quot.push_back(Range{first[i], first[i]});
            const Int mid = 2 * mid_a[i] + mid_b[i];
            quot.push_back(Range{mid, mid});
            quot.push_back(Range{v.h[i].lo, v.h[i].hi});
        }
    }
    return oracle::les_feasible(sub) && oracle::les_feasible(quot);
}

}  // namespace

TEST_SUITE("relative_cotangent") {

TEST_CASE("plane cotangent dimensions") {
    CHECK(bott_p2(0) == std::array<Int, 3>{0, 1, 0});
    CHECK(bott_p2(1) == std::array<Int, 3>{0, 0, 0});
    CHECK(bott_p2(2) == std::array<Int, 3>{3, 0, 0});
    CHECK(bott_p2(-1) == std::array<Int, 3>{0, 0, 0});
    CHECK(bott_p2(-2) == std::array<Int, 3>{0, 0, 3});
    for (Int a = -10; a <= 10; ++a) {
        const auto v = bott_p2(a);
        const auto dual = bott_p2(-a);
        CHECK(v[0] == dual[2]);
        CHECK(v[1] == dual[1]);
        // chi(Ω_{P2}(a)) = a^2 - 1
        CHECK(v[0] - v[1] + v[2] == a * a - 1);
    }
}

TEST_CASE("product model is exact Bott-Kunneth") {
    const Model f0(0);
    CHECK(cotangent_cohomology(f0, 0, 0).h ==
          std::array<CohomEntry, 4>{CohomEntry{0, 0}, CohomEntry{1, 1}, CohomEntry{0, 0},
                                    CohomEntry{0, 0}});
    for (Int a = -8; a <= 8; ++a) {
        for (Int b = -8; b <= 8; ++b) {
            const IntervalCohomology v = cotangent_cohomology(f0, a, b);
            Int chi = 0, sign = 1;
            for (int i = 0; i < 4; ++i) {
                CHECK(v.h[i].exact());
                chi += sign * v.h[i].lo;
                sign = -sign;
            }
            CHECK(chi == v.chi);
            CHECK(v.chi == rr_general(chern_of(f0, NamedBundle::cotangent(a, b))));
            CHECK(les_consistent(f0, a, b, v));
        }
    }
}

TEST_CASE("blow-up vanishings used by the monad reduction") {
    const Model f1(1);
    for (Int b : {Int(-2), Int(-3)}) {
        const IntervalCohomology v = cotangent_cohomology(f1, 1, b);
        CHECK(v.h[1].exactly(0));
        CHECK(v.h[2].exactly(0));
    }
    // every twist of the form ξ+bf has fully vanishing cohomology
    for (Int b = -6; b <= 6; ++b) {
        const IntervalCohomology v = cotangent_cohomology(f1, 1, b);
        for (int i = 0; i < 4; ++i) CHECK(v.h[i].exactly(0));
    }
}

TEST_CASE("blow-up untwisted cohomology is exact") {
    const Model f1(1);
    const IntervalCohomology v = cotangent_cohomology(f1, 0, 0);
    CHECK(v.h[0].exactly(0));
    CHECK(v.h[1].exactly(1));
    CHECK(v.h[2].exactly(0));
    CHECK(v.h[3].exactly(0));
}

TEST_CASE("blow-up intervals are consistent") {
    const Model f1(1);
    for (Int a = -8; a <= 8; ++a) {
        for (Int b = -8; b <= 8; ++b) {
            const IntervalCohomology v = cotangent_cohomology(f1, a, b);
            for (int i = 0; i < 4; ++i) {
                CHECK(v.h[i].lo >= 0);
                CHECK(v.h[i].lo <= v.h[i].hi);
            }
            // chi is attainable inside the intervals
            const Int lo = v.h[0].lo - v.h[1].hi + v.h[2].lo - v.h[3].hi;
            const Int hi = v.h[0].hi - v.h[1].lo + v.h[2].hi - v.h[3].lo;
            CHECK(lo <= v.chi);
            CHECK(v.chi <= hi);
            CHECK(v.chi == rr_general(chern_of(f1, NamedBundle::cotangent(a, b))));
            CHECK(les_consistent(f1, a, b, v));
        }
    }
}

TEST_CASE("self-duality at the Chern level") {
    // Ω^∨ ≅ Ω(3ξ-ef): dualizing rank 2 negates c1 and keeps c2.
    for (int e : {0, 1}) {
        const Model m(e);
        const ChernData omega = chern_of(m, NamedBundle::cotangent(0, 0));
        const ChernData dual_twist = chern_of(m, NamedBundle::cotangent(3, -e));
        CHECK(dual_twist.c1 == -omega.c1);
        CHECK(dual_twist.c2 == omega.c2);
    }
}

}  // TEST_SUITE
