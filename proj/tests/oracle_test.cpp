#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "resloc/bm_oracle.hpp"
#include "resloc/errors.hpp"
#include "test_helpers.hpp"

using namespace resloc;
using resloc::testing::P;

TEST_CASE("kernel normalization") {
    CHECK(std::abs(bm_normalization(1, {0.5, 2048, 0.0}) - 1.0) < 1e-9);
    CHECK(std::abs(bm_normalization(2, {0.5, 64, 0.0}) - 1.0) < 1e-4);
    // Radius independence.
    const double a = bm_normalization(2, {0.5, 48, 0.0});
    const double b = bm_normalization(2, {0.25, 48, 0.0});
    CHECK(std::abs(a - b) < 1e-4);
    CHECK_THROWS(bm_normalization(3, {0.5, 8, 0.0}));
}

TEST_CASE("cauchy residue on the circle") {
    const ResidueProblem prob{P("1", 1), {P("z1", 1)}};
    const auto v = residue_numeric(prob, {0.5, 2048, 0.0});
    CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-9);
}

TEST_CASE("identity map on the three-sphere") {
    const ResidueProblem prob{P("1", 2), {P("z1", 2), P("z2", 2)}};
    const auto v = residue_numeric(prob, {0.5, 64, 0.0});
    CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-3);
}

TEST_CASE("degenerate CP^2 problem matches the exact value 3") {
    const ResidueProblem prob{P("2*z1^2 + z2", 2), {P("z2 - z1^2", 2), P("-z1*z2", 2)}};
    const auto v = residue_numeric(prob, {0.5, 64, 0.0});
    CHECK(std::abs(v - std::complex<double>(3.0, 0.0)) < 1e-2);
    CHECK(std::abs(v.imag()) < 1e-2);
}

TEST_CASE("doubling nodes does not worsen the error") {
    struct Case {
        ResidueProblem prob;
        std::complex<double> exact;
        int base_nodes;
    };
    const std::vector<Case> cases = {
        // n=1 with a second zero at 1 so the trapezoid error is visible.
        {{P("1", 1), {P("z1 - z1^2", 1)}}, {1.0, 0.0}, 8},
        {{P("1", 2), {P("z1", 2), P("z2", 2)}}, {1.0, 0.0}, 8},
        {{P("2*z1^2 + z2", 2), {P("z2 - z1^2", 2), P("-z1*z2", 2)}}, {3.0, 0.0}, 16},
    };
    for (const auto& c : cases) {
        const double e1 =
            std::abs(residue_numeric(c.prob, {0.5, c.base_nodes, 0.0}) - c.exact);
        const double e2 =
            std::abs(residue_numeric(c.prob, {0.5, 2 * c.base_nodes, 0.0}) - c.exact);
        CAPTURE(e1);
        CAPTURE(e2);
        CHECK(e2 <= e1 + 1e-12);
    }
}

TEST_CASE("radius independence of the degenerate problem") {
    // The smaller sphere sits closer to the degenerate zero, so it needs the
    // finer grid to reach the same accuracy.
    const ResidueProblem prob{P("2*z1^2 + z2", 2), {P("z2 - z1^2", 2), P("-z1*z2", 2)}};
    const auto a = residue_numeric(prob, {0.5, 96, 0.0});
    const auto b = residue_numeric(prob, {0.25, 96, 0.0});
    CHECK(std::abs(a - b) < 2e-2);
}

TEST_CASE("imaginary parts of rational targets stay below tolerance") {
    const ResidueProblem prob{P("2*z1^2 + z2", 2), {P("z2 - z1^2", 2), P("-z1*z2", 2)}};
    CHECK(std::abs(residue_numeric(prob, {0.5, 48, 0.0}).imag()) < 1e-2);
    const ResidueProblem cauchy{P("3 + z1", 1), {P("z1", 1)}};
    CHECK(std::abs(residue_numeric(cauchy, {0.5, 512, 0.0}).imag()) < 1e-6);
}

TEST_CASE("a zero on the sphere raises SingularOnSphere") {
    // f = z1 - 1/2 vanishes at the theta = 0 node of the radius-1/2 circle.
    const ResidueProblem prob{P("1", 1), {P("z1 - (1/2)", 1)}};
    CHECK_THROWS_AS(residue_numeric(prob, {0.5, 64, 0.0}), SingularOnSphere);
}

TEST_CASE("input validation") {
    const ResidueProblem bad{P("1", 3), {P("z1", 3), P("z2", 3), P("z3", 3)}};
    CHECK_THROWS_AS(residue_numeric(bad, {0.5, 8, 0.0}), DimensionMismatch);
    const ResidueProblem ok{P("1", 1), {P("z1", 1)}};
    CHECK_THROWS_AS(residue_numeric(ok, {-1.0, 8, 0.0}), DimensionMismatch);
}
