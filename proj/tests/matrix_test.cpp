#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "resloc/invariant.hpp"
#include "resloc/matrix.hpp"
#include "test_helpers.hpp"

using namespace resloc;
using resloc::testing::P;
using resloc::testing::lift_vars;
using resloc::testing::random_poly;

namespace {

PolyMatrix dx_n2() {
    PolyMatrix m(2, 2);
    m.at(0, 0) = P("-2*z1", 2);
    m.at(0, 1) = P("1", 2);
    m.at(1, 0) = P("-z2", 2);
    m.at(1, 1) = P("-z1", 2);
    return m;
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t dim, std::size_t nvars, unsigned deg,
                         unsigned terms) {
    PolyMatrix m(dim, nvars);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = random_poly(rng, nvars, deg, terms);
    return m;
}

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(det(dx_n2()) == P("2*z1^2 + z2", 2));
    CHECK(det(PolyMatrix::identity(4, 2)) == P("1", 2));

    PolyMatrix b(2, 2);
    b.at(0, 0) = P("-z1", 2);
    b.at(0, 1) = P("-1", 2);
    b.at(1, 0) = P("z2", 2);
    b.at(1, 1) = P("-z1", 2);
    CHECK(det(b) == P("z1^2 + z2", 2));
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const PolyMatrix a = random_matrix(rng, dim, 2, 1, 2);
        const PolyMatrix b = random_matrix(rng, dim, 2, 1, 2);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("bareiss path matches cofactor expansion above the leibniz cutoff") {
    std::mt19937 rng(37);
    const std::size_t dim = 7;
    const PolyMatrix m = random_matrix(rng, dim, 1, 1, 2);
    // Independent route: expansion along the first row over 6x6 leibniz minors.
    MultiPoly expected(1);
    for (std::size_t j = 0; j < dim; ++j) {
        PolyMatrix minor(dim - 1, 1);
        for (std::size_t r = 1; r < dim; ++r)
            for (std::size_t c = 0, cc = 0; c < dim; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        MultiPoly term = m.at(0, j) * det(minor);
        if (j % 2 == 0)
            expected += term;
        else
            expected -= term;
    }
    CHECK(det(m) == expected);
}

TEST_CASE("trace power examples") {
    CHECK(trace_power(dx_n2(), 1) == P("-3*z1", 2));
    CHECK(trace_power(PolyMatrix::identity(3, 1), 5) == P("3", 1));

    PolyMatrix d(2, 2);
    d.at(0, 0) = P("z1", 2);
    d.at(1, 1) = P("z2", 2);
    CHECK(trace_power(d, 2) == P("z1^2 + z2^2", 2));
}

TEST_CASE("characteristic polynomial coefficients") {
    const auto c = char_poly_coeffs(dx_n2());
    REQUIRE(c.size() == 2);
    CHECK(c[0] == P("-3*z1", 2));        // expand det(tI + M) by hand
    CHECK(c[1] == P("2*z1^2 + z2", 2));

    const PolyMatrix zero(3, 1);
    for (const auto& cj : char_poly_coeffs(zero)) CHECK(cj.is_zero());
}

TEST_CASE("c_dim equals the determinant") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const PolyMatrix m = random_matrix(rng, dim, 2, 1, 2);
        CHECK(char_poly_coeffs(m).back() == det(m));
    }
}

TEST_CASE("char poly agrees with direct expansion of det(tI + M)") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const std::size_t nv = 2;
        const PolyMatrix m = random_matrix(rng, dim, nv, 1, 2);

        // Lift to nv+1 variables; the extra variable plays t.
        PolyMatrix lifted(dim, nv + 1);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) lifted.at(i, j) = lift_vars(m.at(i, j), nv + 1);
        for (std::size_t i = 0; i < dim; ++i)
            lifted.at(i, i) += MultiPoly::variable(nv + 1, nv);
        const MultiPoly expanded = det(lifted);

        const auto coeffs = char_poly_coeffs(m);
        // Collect coefficient of t^{dim-j} from the lifted determinant.
        for (std::size_t j = 1; j <= dim; ++j) {
            MultiPoly slice(nv);
            for (const auto& [mono, coef] : expanded.terms()) {
                if (mono.exps[nv] != dim - j) continue;
                Monomial dropped(nv);
                for (std::size_t v = 0; v < nv; ++v) dropped.exps[v] = mono.exps[v];
                slice.add_term(dropped, coef);
            }
            CHECK(slice == coeffs[j - 1]);
        }
    }
}

TEST_CASE("newton identities connect traces and chern coefficients") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const PolyMatrix m = random_matrix(rng, dim, 2, 1, 2);
        const auto e = char_poly_coeffs(m);
        // j e_j = sum_{i=1..j} (-1)^{i-1} e_{j-i} p_i
        for (std::size_t j = 1; j <= dim; ++j) {
            MultiPoly rhs(m.nvars());
            for (std::size_t i = 1; i <= j; ++i) {
                const MultiPoly ej_minus_i =
                    (j - i == 0) ? MultiPoly::constant(m.nvars(), 1) : e[j - i - 1];
                MultiPoly term = ej_minus_i * trace_power(m, static_cast<unsigned>(i));
                if (i % 2 == 1)
                    rhs += term;
                else
                    rhs -= term;
            }
            CHECK(e[j - 1].scaled(GaussianRational(static_cast<long>(j))) == rhs);
        }
    }
}

TEST_CASE("invariant evaluation examples") {
    const PolyMatrix dx = dx_n2();
    CHECK(eval_invariant(InvariantPolySpec::det_spec(2), dx) == P("2*z1^2 + z2", 2));
    CHECK(eval_invariant(InvariantPolySpec::tr_power(2), dx) == P("9*z1^2", 2));
    CHECK(eval_invariant(InvariantPolySpec::tr_times_det(2), dx) ==
          P("-3*z1", 2) * P("2*z1^2 + z2", 2));
    // Chern generators above the dimension vanish.
    const InvariantPolySpec high(InvariantPolySpec::Basis::chern_generators, 3,
                                 {{GaussianRational(1), {{3, 1}}}});
    CHECK(eval_invariant(high, dx).is_zero());
}

TEST_CASE("invariant spec validates weighted homogeneity") {
    using Basis = InvariantPolySpec::Basis;
    CHECK_THROWS(InvariantPolySpec(Basis::trace_powers, 3, {{GaussianRational(1), {{1, 2}}}}));
    CHECK_NOTHROW(InvariantPolySpec(Basis::trace_powers, 4,
                                    {{GaussianRational(1), {{1, 4}}},
                                     {GaussianRational::ratio(-1, 2), {{2, 2}}}}));
}

TEST_CASE("invariant shortcuts") {
    CHECK(InvariantPolySpec::from_shortcut("det", 3).degree() == 3);
    CHECK(InvariantPolySpec::from_shortcut("tr^4", 3).degree() == 4);
    CHECK(InvariantPolySpec::from_shortcut("tr(A^4)", 3).degree() == 4);
    CHECK(InvariantPolySpec::from_shortcut("tr*det", 3).degree() == 4);
    CHECK(InvariantPolySpec::from_shortcut("c1^2", 3).degree() == 2);
    CHECK_THROWS(InvariantPolySpec::from_shortcut("nope", 3));
}
