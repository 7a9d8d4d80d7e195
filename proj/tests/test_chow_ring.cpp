#include <doctest.h>

#include <random>

#include "fano/chow.hpp"
#include "fano/errors.hpp"
#include "fano/expr.hpp"
#include "support/oracles.hpp"

using namespace fano;

namespace {

ChowClass random_class(Model m, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    ChowClass x(m);
    for (int i = 0; i < 6; ++i) x = x + ChowClass::monomial(m, static_cast<Mono>(i), coeff(rng));
    return x;
}

}  // namespace

TEST_SUITE("chow_ring") {

TEST_CASE("generator products reduce canonically") {
    const Model f1(1);
    CHECK(f1.xi() * f1.xi() * f1.f() == f1.point());
    CHECK((f1.f() * f1.f()).is_zero());
    CHECK(f1.xi().pow(3) == f1.point());

    const Model f0(0);
    CHECK((f0.xi() * f0.xi().pow(2)).is_zero());
    CHECK(f0.xi() * f0.xi() * f0.f() == f0.point());
}

TEST_CASE("degrees of the fundamental classes") {
    const Model f1(1), f0(0);
    CHECK(f1.h().pow(3).degree() == 54);
    CHECK(f0.h().pow(3).degree() == 54);
    CHECK((f1.exceptional() * f1.h().pow(2)).degree() == 6);
}

TEST_CASE("exceptional class rejected on the product") {
    CHECK_THROWS_AS(Model(0).exceptional(), InvalidInput);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7u);
    for (int e : {0, 1}) {
        const Model m(e);
        for (int iter = 0; iter < 300; ++iter) {
            const ChowClass x = random_class(m, rng);
            const ChowClass y = random_class(m, rng);
            const ChowClass z = random_class(m, rng);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("products agree with naive polynomial reduction") {
    std::mt19937 rng(11u);
    for (int e : {0, 1}) {
        const Model m(e);
        for (int iter = 0; iter < 500; ++iter) {
            const ChowClass x = random_class(m, rng);
            const ChowClass y = random_class(m, rng);
            CHECK((x * y).coefficients() == oracle::ring_product(x, y));
        }
    }
}

TEST_CASE("model mismatch is an error") {
    CHECK_THROWS_AS(Model(0).xi() * Model(1).xi(), ModelMismatch);
    CHECK_THROWS_AS(Model(0).xi() + Model(1).f(), ModelMismatch);
}

TEST_CASE("slopes of line bundles") {
    const Model f1(1), f0(0);
    for (Int a = -20; a <= 20; ++a) {
        for (Int b = -20; b <= 20; ++b) {
            CHECK(slope(f1.divisor(a, b), 1) == Rat(15 * a + 9 * b));
            CHECK(slope(f0.divisor(a, b), 1) == Rat(12 * a + 9 * b));
        }
    }
    CHECK(slope(-f1.h(), 2) == Rat(-27));
    CHECK(slope(f0.divisor(1, 0), 1) == Rat(12));
    CHECK(slope(f1.divisor(1, 1), 2) == Rat(12));  // non-integral slope stays exact: 24/2
}

TEST_CASE("slope input validation") {
    const Model m(1);
    CHECK_THROWS_AS(slope(m.divisor(1, 0), 0), InvalidInput);
    CHECK_THROWS_AS(slope(m.point(), 1), InvalidInput);
}

TEST_CASE("expression evaluation") {
    const Model f1(1), f0(0);
    CHECK(parse_expr("(3*xi + f)^3", f1) == f1.point() * Int(54));
    CHECK(parse_expr("xi^3 - xi^2*f", f1).is_zero());
    CHECK(parse_expr("xi^2*(xi+f)", f0) == f0.point());
    CHECK(parse_expr("h^3", f0) == f0.point() * Int(54));
    CHECK(parse_expr("E*h^2", f1) == f1.point() * Int(6));
    CHECK(parse_expr("-2*xi + 3", f1) == f1.unit() * Int(3) + f1.xi() * Int(-2));
    CHECK(parse_expr("xi^0", f1) == f1.unit());
}

TEST_CASE("parse errors carry position and expectation") {
    const Model f1(1), f0(0);
    try {
        parse_expr("xi + ", f1);
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.position == 5);
        CHECK(ex.expected == "an integer, symbol or '('");
    }
    try {
        parse_expr("(xi + f", f1);
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.position == 7);
        CHECK(ex.expected == "')'");
    }
    CHECK_THROWS_AS(parse_expr("xi^-2", f1), ParseError);
    CHECK_THROWS_AS(parse_expr("E", f0), ParseError);
    CHECK_THROWS_AS(parse_expr("xj", f1), ParseError);
    CHECK_THROWS_AS(parse_expr("2 2", f1), ParseError);
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(23u);
    for (int e : {0, 1}) {
        const Model m(e);
        CHECK(parse_expr(m.zero().to_string(), m) == m.zero());
        for (int iter = 0; iter < 200; ++iter) {
            const ChowClass x = random_class(m, rng);
            CAPTURE(x.to_string());
            CHECK(parse_expr(x.to_string(), m) == x);
        }
    }
}

TEST_CASE("printer uses xi^2*f for the point class") {
    CHECK(Model(1).point().to_string() == "xi^2*f");
    CHECK((Model(1).point() * Int(54)).to_string() == "54*xi^2*f");
}

}  // TEST_SUITE
