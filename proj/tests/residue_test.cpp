#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "resloc/errors.hpp"
#include "resloc/residue.hpp"
#include "test_helpers.hpp"

using namespace resloc;
using resloc::testing::P;
using resloc::testing::invert_constant;
using resloc::testing::random_poly;
using resloc::testing::random_rational;

namespace {

ResidueProblem degenerate_problem(const std::string& h) {
    return {P(h, 2), {P("z2 - z1^2", 2), P("-z1*z2", 2)}};
}

MembershipCertificate paper_cert_n2() {
    MembershipCertificate cert{{2, 1}, PolyMatrix(2, 2)};
    cert.B.at(0, 0) = P("-z1", 2);
    cert.B.at(0, 1) = P("-1", 2);
    cert.B.at(1, 0) = P("z2", 2);
    cert.B.at(1, 1) = P("-z1", 2);
    return cert;
}

}  // namespace

TEST_CASE("nondegenerate evaluation") {
    CHECK(residue_nondegenerate({P("5", 2), {P("2*z1", 2), P("3*z2", 2)}}) ==
          GaussianRational::ratio(5, 6));
    CHECK(residue_nondegenerate({P("1", 2), {P("z1", 2), P("z2", 2)}}) == GaussianRational(1));
    CHECK(residue_nondegenerate({P("z1", 2), {P("z1", 2), P("z2", 2)}}) == GaussianRational(0));
    CHECK_THROWS_AS(residue_nondegenerate(degenerate_problem("1")), DegenerateZero);
}

TEST_CASE("monomial coefficient rule") {
    CHECK(residue_monomial(P("z1^2*z2", 2), {2, 1}) == GaussianRational(1));
    CHECK(residue_monomial(P("z1^3", 2), {2, 1}) == GaussianRational(0));
    CHECK(residue_monomial(P("2*z1^4 + 3*z1^2*z2 + z2^2", 2), {2, 1}) == GaussianRational(3));
}

TEST_CASE("certificate path reproduces the worked example values") {
    const MembershipCertificate cert = paper_cert_n2();
    CHECK(residue_via_certificate(degenerate_problem("2*z1^2 + z2"), cert) == GaussianRational(3));
    CHECK(residue_via_certificate(degenerate_problem("9*z1^2"), cert) == GaussianRational(9));
    CHECK(residue_via_certificate(degenerate_problem("-27*z1^3"), cert) == GaussianRational(0));

    MembershipCertificate bad = cert;
    bad.B.at(0, 0) = P("z2", 2);
    CHECK_THROWS_AS(residue_via_certificate(degenerate_problem("1"), bad), InvalidCertificate);
}

TEST_CASE("dispatch picks the cheapest applicable method") {
    const ResidueResult linear = residue({P("7", 2), {P("z1 + z2", 2), P("z2", 2)}});
    CHECK(linear.value == GaussianRational(7));
    CHECK(linear.method == ResidueMethod::nondegenerate);

    const ResidueResult degen = residue(degenerate_problem("2*z1^2 + z2"));
    CHECK(degen.value == GaussianRational(3));
    CHECK(degen.method == ResidueMethod::certificate);
    CHECK(degen.alpha == std::vector<std::uint32_t>{2, 1});

    const ResidueResult mono = residue({P("z1", 2), {P("z1^2", 2), P("z2", 2)}});
    CHECK(mono.value == GaussianRational(1));
    CHECK(mono.method == ResidueMethod::monomial);
    CHECK(mono.alpha == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("permuted monomial denominators pick up the orientation sign") {
    // Res[dz1^dz2 / (z2 z1)] = -1: the tuple ordering matters.
    const ResidueResult swapped = residue({P("1", 2), {P("z2", 2), P("z1", 2)}});
    CHECK(swapped.value == GaussianRational(-1));
    // Same via the monomial path with a higher power.
    const ResidueResult mono = residue({P("z2", 2), {P("z2^2", 2), P("z1", 2)}});
    CHECK(mono.method == ResidueMethod::monomial);
    CHECK(mono.value == GaussianRational(-1));
}

TEST_CASE("dispatch propagates the non-isolated diagnosis") {
    CHECK_THROWS_AS(residue({P("1", 2), {P("z1*z2", 2), P("z1^2", 2)}}),
                    NotIsolatedOrCapTooLow);
}

TEST_CASE("residue is linear in the numerator") {
    std::mt19937 rng(61);
    const std::vector<MultiPoly> f{P("z2 - z1^2", 2), P("-z1*z2", 2)};
    for (int trial = 0; trial < 25; ++trial) {
        const MultiPoly h1 = random_poly(rng, 2, 3, 4);
        const MultiPoly h2 = random_poly(rng, 2, 3, 4);
        const GaussianRational a = random_rational(rng);
        const GaussianRational b = random_rational(rng);
        const GaussianRational lhs = residue({h1.scaled(a) + h2.scaled(b), f}).value;
        const GaussianRational rhs =
            a * residue({h1, f}).value + b * residue({h2, f}).value;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("certificate path agrees with the nondegenerate formula on linear maps") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + trial % 2;
        // Random invertible linear map with rational entries.
        std::vector<std::vector<GaussianRational>> jac(n, std::vector<GaussianRational>(n));
        PolyMatrix jac_matrix(n, n);
        std::vector<MultiPoly> f;
        bool invertible = false;
        while (!invertible) {
            for (auto& row : jac)
                for (auto& v : row) v = random_rational(rng);
            try {
                invert_constant(jac);
                invertible = true;
            } catch (const std::logic_error&) {
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly fi(n);
            for (std::size_t j = 0; j < n; ++j)
                fi += MultiPoly::variable(n, j).scaled(jac[i][j]);
            f.push_back(std::move(fi));
        }
        const auto inverse = invert_constant(jac);
        MembershipCertificate cert{std::vector<std::uint32_t>(n, 0), PolyMatrix(n, n)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cert.B.at(i, j) = MultiPoly::constant(n, inverse[i][j]);

        const MultiPoly h = random_poly(rng, n, 2, 3);
        const ResidueProblem prob{h, f};
        CHECK(residue_via_certificate(prob, cert) == residue_nondegenerate(prob));
    }
}

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(residue({P("1", 2), {P("z1", 2)}}), DimensionMismatch);
    CHECK_THROWS_AS(residue({P("1", 2), {}}), DimensionMismatch);
}
