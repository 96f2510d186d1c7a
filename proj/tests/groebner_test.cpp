#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "resloc/errors.hpp"
#include "resloc/groebner.hpp"
#include "test_helpers.hpp"

using namespace resloc;
using resloc::testing::P;
using resloc::testing::random_poly;

namespace {

// The chart-0 field of the maximally degenerate example.
std::vector<MultiPoly> degenerate_field(std::size_t n) {
    std::vector<MultiPoly> f;
    for (std::size_t j = 0; j + 1 < n; ++j)
        f.push_back(MultiPoly::variable(n, j + 1) -
                    MultiPoly::variable(n, 0) * MultiPoly::variable(n, j));
    f.push_back(-(MultiPoly::variable(n, 0) * MultiPoly::variable(n, n - 1)));
    return f;
}

bool reconstructs(const TrackedBasis& tb) {
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
        MultiPoly recon(tb.generators.front().nvars());
        for (std::size_t j = 0; j < tb.generators.size(); ++j)
            recon += tb.cofactors[k][j] * tb.generators[j];
        if (recon != tb.basis[k]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("buchberger on coordinate generators") {
    const TrackedBasis tb = buchberger({P("z1", 2), P("z2", 2)});
    REQUIRE(tb.basis.size() == 2);
    CHECK(reconstructs(tb));
    CHECK(is_groebner(tb));
    // Identity cofactors up to ordering.
    for (std::size_t k = 0; k < 2; ++k) {
        std::size_t nonzero = 0;
        for (const auto& c : tb.cofactors[k])
            if (!c.is_zero()) ++nonzero;
        CHECK(nonzero == 1);
    }
}

TEST_CASE("buchberger on the degenerate field finds pure powers") {
    const TrackedBasis tb = buchberger(degenerate_field(2));
    CHECK(reconstructs(tb));
    CHECK(is_groebner(tb));
    bool pure_z1 = false, pure_z2 = false;
    for (const auto& g : tb.basis) {
        const auto [lm, lc] = g.leading_term(tb.order);
        if (lm.exps[1] == 0 && lm.exps[0] > 0) pure_z1 = true;
        if (lm.exps[0] == 0 && lm.exps[1] > 0) pure_z2 = true;
    }
    CHECK(pure_z1);
    CHECK(pure_z2);
}

TEST_CASE("buchberger on a single univariate generator") {
    const TrackedBasis tb = buchberger({P("z1^2", 1)});
    REQUIRE(tb.basis.size() == 1);
    CHECK(tb.basis[0] == P("z1^2", 1));
}

TEST_CASE("buchberger rejects empty and zero input") {
    CHECK_THROWS_AS(buchberger({}), DimensionMismatch);
    CHECK_THROWS_AS(buchberger({P("0", 2), P("z1", 2)}), DimensionMismatch);
}

TEST_CASE("normal form: paper reduction of z1^3") {
    const auto f = degenerate_field(2);
    const TrackedBasis tb = buchberger(f);
    const auto [rem, cof] = normal_form(P("z1^3", 2), tb);
    CHECK(rem.is_zero());
    REQUIRE(cof.size() == 2);
    CHECK(cof[0] == P("-z1", 2));
    CHECK(cof[1] == P("-1", 2));
}

TEST_CASE("normal form: constants survive proper ideals") {
    const TrackedBasis tb = buchberger({P("z1", 2), P("z2", 2)});
    const auto [rem, cof] = normal_form(P("1", 2), tb);
    CHECK(rem == P("1", 2));
    const auto [rem2, cof2] = normal_form(P("z1", 2), tb);
    CHECK(rem2.is_zero());
}

TEST_CASE("normal form identity and idempotence on random input") {
    std::mt19937 rng(53);
    const auto f = degenerate_field(3);
    const TrackedBasis tb = buchberger(f);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = random_poly(rng, 3, 4, 5);
        const auto [rem, cof] = normal_form(p, tb);
        MultiPoly recon = rem;
        for (std::size_t j = 0; j < f.size(); ++j) recon += cof[j] * f[j];
        CHECK(recon == p);
        const auto [rem2, cof2] = normal_form(rem, tb);
        CHECK(rem2 == rem);
        for (const auto& c : cof2) CHECK(c.is_zero());
    }
}

TEST_CASE("find_certificate on the degenerate n=2 field") {
    const auto f = degenerate_field(2);
    const MembershipCertificate cert = find_certificate(f, 64);
    CHECK(cert.alpha == std::vector<std::uint32_t>{2, 1});
    CHECK(verify_certificate(cert, f));
    // z1^3 = -z1 f1 - f2 and z2^2 = z2 f1 - z1 f2.
    CHECK(cert.B.at(0, 0) == P("-z1", 2));
    CHECK(cert.B.at(0, 1) == P("-1", 2));
    CHECK(cert.B.at(1, 0) == P("z2", 2));
    CHECK(cert.B.at(1, 1) == P("-z1", 2));
}

TEST_CASE("find_certificate inverts a linear map") {
    const MembershipCertificate cert = find_certificate({P("z1 + z2", 2), P("z2", 2)}, 8);
    CHECK(cert.alpha == std::vector<std::uint32_t>{0, 0});
    CHECK(cert.B.at(0, 0) == P("1", 2));
    CHECK(cert.B.at(0, 1) == P("-1", 2));
    CHECK(cert.B.at(1, 0) == P("0", 2));
    CHECK(cert.B.at(1, 1) == P("1", 2));
}

TEST_CASE("find_certificate on monomial generators") {
    const MembershipCertificate cert = find_certificate({P("z1^2", 2), P("z2^3", 2)}, 8);
    CHECK(cert.alpha == std::vector<std::uint32_t>{1, 2});
    CHECK(cert.B.at(0, 0) == P("1", 2));
    CHECK(cert.B.at(1, 1) == P("1", 2));
    CHECK(cert.B.at(0, 1).is_zero());
    CHECK(cert.B.at(1, 0).is_zero());
}

TEST_CASE("find_certificate flags non-isolated zeros") {
    CHECK_THROWS_AS(find_certificate({P("z1*z2", 2), P("z1^2", 2)}, 16),
                    NotIsolatedOrCapTooLow);
}

TEST_CASE("verify_certificate examples") {
    const auto f = degenerate_field(2);
    MembershipCertificate paper{{2, 1}, PolyMatrix(2, 2)};
    paper.B.at(0, 0) = P("-z1", 2);
    paper.B.at(0, 1) = P("-1", 2);
    paper.B.at(1, 0) = P("z2", 2);
    paper.B.at(1, 1) = P("-z1", 2);
    CHECK(verify_certificate(paper, f));

    MembershipCertificate identity_cert{{0, 0}, PolyMatrix(2, 2)};
    identity_cert.B.at(0, 0) = P("1", 2);
    identity_cert.B.at(1, 1) = P("1", 2);
    CHECK(verify_certificate(identity_cert, {P("z1", 2), P("z2", 2)}));
    CHECK_FALSE(verify_certificate(identity_cert, {P("z1^2", 2), P("z2", 2)}));
}

TEST_CASE("paper certificate construction") {
    SUBCASE("n=2") {
        const MembershipCertificate cert = paper_certificate_cpn(2);
        CHECK(cert.alpha == std::vector<std::uint32_t>{2, 1});
        CHECK(det(cert.B) == P("z1^2 + z2", 2));
    }
    SUBCASE("n=3") {
        const MembershipCertificate cert = paper_certificate_cpn(3);
        CHECK(cert.alpha == std::vector<std::uint32_t>{3, 1, 1});
        // det B = (-1)^3 (z3 + z1 z2)(z2 + z1^2)
        const MultiPoly expected = -(P("z3 + z1*z2", 3) * P("z2 + z1^2", 3));
        CHECK(det(cert.B) == expected);
    }
    SUBCASE("closed form for det B") {
        for (unsigned n = 2; n <= 6; ++n) {
            const MembershipCertificate cert = paper_certificate_cpn(n);
            unsigned k = 0;
            while ((1u << (k + 1)) < n + 1) ++k;
            MultiPoly expected = MultiPoly::variable(n, n - 1) +
                                 MultiPoly::variable(n, 0) * MultiPoly::variable(n, n - 2);
            for (unsigned j = 1; j + 1 < n; ++j)
                for (unsigned i = 0; i < k; ++i) {
                    const unsigned e = 1u << i;
                    expected *= MultiPoly::variable(n, j).pow(e) +
                                MultiPoly::variable(n, 0).pow(e) *
                                    MultiPoly::variable(n, j - 1).pow(e);
                }
            if (n % 2 == 1) expected = -expected;
            CHECK(det(cert.B) == expected);
        }
    }
    SUBCASE("verifies against the field for n=2..6") {
        for (unsigned n = 2; n <= 6; ++n) {
            const MembershipCertificate cert = paper_certificate_cpn(n);
            CHECK(verify_certificate(cert, degenerate_field(n)));
        }
    }
    CHECK_THROWS(paper_certificate_cpn(1));
}

TEST_CASE("groebner and paper certificates may differ but both verify") {
    for (unsigned n = 2; n <= 4; ++n) {
        const auto f = degenerate_field(n);
        const MembershipCertificate a = paper_certificate_cpn(n);
        const MembershipCertificate b = find_certificate(f, 64);
        CHECK(verify_certificate(a, f));
        CHECK(verify_certificate(b, f));
    }
}

TEST_CASE("lex order basis also works") {
    const auto f = degenerate_field(2);
    const TrackedBasis tb = buchberger(f, MonomialOrder::lex());
    CHECK(reconstructs(tb));
    CHECK(is_groebner(tb));
    const auto [rem, cof] = normal_form(P("z1^3", 2), tb);
    CHECK(rem.is_zero());
}

TEST_CASE("resource caps raise a resource error") {
    BuchbergerLimits limits;
    limits.max_degree = 1;
    CHECK_THROWS_AS(buchberger(degenerate_field(3), MonomialOrder::grevlex(), limits),
                    ResourceLimit);
}

TEST_CASE("random small ideals keep exact bookkeeping") {
    std::mt19937 rng(59);
    int done = 0;
    while (done < 10) {
        const std::size_t nv = 2 + done % 2;
        std::vector<MultiPoly> gens;
        for (std::size_t i = 0; i < nv; ++i) {
            MultiPoly p = random_poly(rng, nv, 2, 3);
            if (p.is_zero()) p = MultiPoly::variable(nv, i);
            gens.push_back(std::move(p));
        }
        TrackedBasis tb;
        try {
            tb = buchberger(gens);
        } catch (const ResourceLimit&) {
            continue;
        }
        CHECK(reconstructs(tb));
        CHECK(is_groebner(tb));
        ++done;
    }
}
