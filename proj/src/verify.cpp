#include "resloc/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "resloc/bm_oracle.hpp"
#include "resloc/cpn.hpp"
#include "resloc/errors.hpp"
#include "resloc/parse.hpp"

namespace resloc {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

std::vector<InvariantPolySpec> four_invariants(unsigned n) {
    return {InvariantPolySpec::det_spec(n), InvariantPolySpec::tr_power(n),
            InvariantPolySpec::tr_power(n + 1), InvariantPolySpec::tr_times_det(n)};
}

GaussianRational random_small_rational(std::mt19937& rng, bool with_imag = false) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    GaussianRational v = GaussianRational::ratio(num(rng), den(rng));
    if (with_imag) v += GaussianRational::i() * GaussianRational::ratio(num(rng), den(rng));
    return v;
}

MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_deg, unsigned max_terms,
                      bool with_imag = false) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> expd(0, max_deg);
    MultiPoly p(nvars);
    const unsigned t = nterms(rng);
    for (unsigned i = 0; i < t; ++i) {
        Monomial m(nvars);
        for (std::size_t v = 0; v < nvars; ++v) m.exps[v] = expd(rng);
        p.add_term(m, random_small_rational(rng, with_imag));
    }
    return p;
}

// Exact inverse of a constant matrix by Gauss-Jordan elimination.
std::vector<std::vector<GaussianRational>> invert_constant(
    std::vector<std::vector<GaussianRational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<GaussianRational>> inv(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = GaussianRational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("singular matrix in invert_constant");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const GaussianRational scale = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const GaussianRational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

bool criterion_euler(unsigned n_max, Check& c) {
    for (unsigned n = 2; n <= n_max; ++n) {
        const auto r = futaki_morita(FieldWithZeros::from_max_degenerate(n),
                                     InvariantPolySpec::det_spec(n));
        c.expect(r.f_phi == GaussianRational(static_cast<long>(n + 1)),
                 "chi(CP^" + std::to_string(n) + ") != " + std::to_string(n + 1) + " (got " +
                     r.f_phi.str() + ")");
    }
    return c.ok;
}

bool criterion_chern(unsigned n_max, Check& c) {
    for (unsigned n = 2; n <= n_max; ++n) {
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), n + 1, n);
        const auto r = futaki_morita(FieldWithZeros::from_max_degenerate(n),
                                     InvariantPolySpec::tr_power(n));
        c.expect(r.f_phi == GaussianRational(mpq_class(expected)),
                 "c1^" + std::to_string(n) + " integral != (n+1)^n at n=" + std::to_string(n) +
                     " (got " + r.f_phi.str() + ")");
    }
    return c.ok;
}

bool criterion_futaki(unsigned n_max, Check& c) {
    for (unsigned n = 2; n <= n_max; ++n) {
        const FutakiResult r = futaki(FieldWithZeros::from_max_degenerate(n));
        c.expect(r.power_of_trace.is_zero(),
                 "[tr]^{n+1} Futaki value nonzero at n=" + std::to_string(n) + " (got " +
                     r.power_of_trace.str() + ")");
        c.expect(r.trace_of_power.is_zero(),
                 "tr(A^{n+1}) Futaki value nonzero at n=" + std::to_string(n) + " (got " +
                     r.trace_of_power.str() + ")");
    }
    return c.ok;
}

bool criterion_tr_det(unsigned n_max, Check& c) {
    for (unsigned n = 2; n <= n_max; ++n) {
        const auto r = futaki_morita(FieldWithZeros::from_max_degenerate(n),
                                     InvariantPolySpec::tr_times_det(n));
        c.expect(r.f_phi.is_zero(),
                 "tr*det value nonzero at n=" + std::to_string(n) + " (got " + r.f_phi.str() + ")");
    }
    return c.ok;
}

bool criterion_path_agreement(unsigned n_max, Check& c) {
    for (unsigned n = 2; n <= std::min(n_max, 4u); ++n) {
        for (const auto& phi : four_invariants(n)) {
            const GaussianRational lhs = proposition_formula(n, phi);
            const GaussianRational rhs =
                futaki_morita(FieldWithZeros::from_max_degenerate(n), phi).f_phi;
            c.expect(lhs == rhs, "proposition vs pipeline mismatch for " + phi.name() +
                                     " at n=" + std::to_string(n) + " (" + lhs.str() +
                                     " vs " + rhs.str() + ")");
        }
    }
    return c.ok;
}

bool criterion_certificate_independence(unsigned n_max, Check& c) {
    for (unsigned n = 2; n <= std::min(n_max, 4u); ++n) {
        const ChartField field = max_degenerate_field(n);
        const MembershipCertificate paper = paper_certificate_cpn(n);
        const MembershipCertificate synthesized = find_certificate(field.components, 64);
        const PolyMatrix dx = linearization(field);
        for (const auto& phi : four_invariants(n)) {
            const ResidueProblem prob{eval_invariant(phi, dx), field.components};
            const GaussianRational a = residue_via_certificate(prob, paper);
            const GaussianRational b = residue_via_certificate(prob, synthesized);
            c.expect(a == b, "certificates disagree for " + phi.name() +
                                 " at n=" + std::to_string(n) + " (" + a.str() + " vs " +
                                 b.str() + ")");
        }
    }
    return c.ok;
}

bool criterion_bott_consistency(unsigned seed, Check& c) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    unsigned done = 0;
    while (done < 20) {
        GaussianRational a0 = GaussianRational::ratio(num(rng), den(rng));
        GaussianRational a1 = GaussianRational::ratio(num(rng), den(rng));
        GaussianRational a2 = -(a0 + a1);
        if (a0 == a1 || a0 == a2 || a1 == a2) continue;
        const auto v = ProjectiveVectorField::diagonal({a0, a1, a2});
        const auto field = FieldWithZeros::from_diagonal(v);
        const auto chi = futaki_morita(field, InvariantPolySpec::det_spec(2));
        const auto c1sq = futaki_morita(field, InvariantPolySpec::tr_power(2));
        c.expect(chi.f_phi == GaussianRational(3),
                 "diagonal Bott sum for det != 3 (got " + chi.f_phi.str() + ")");
        c.expect(c1sq.f_phi == GaussianRational(9),
                 "diagonal Bott sum for tr^2 != 9 (got " + c1sq.f_phi.str() + ")");
        ++done;
    }
    return c.ok;
}

bool criterion_oracle(Check& c) {
    {
        QuadratureSpec spec{0.5, 2048, 1e-9};
        const double norm1 = bm_normalization(1, spec);
        c.expect(std::abs(norm1 - 1.0) < 1e-9,
                 "n=1 kernel normalization off by " + std::to_string(norm1 - 1.0));
    }
    {
        QuadratureSpec spec{0.5, 64, 1e-4};
        const double norm2 = bm_normalization(2, spec);
        c.expect(std::abs(norm2 - 1.0) < 1e-4,
                 "n=2 kernel normalization off by " + std::to_string(norm2 - 1.0));
    }
    {
        const ChartField field = max_degenerate_field(2);
        const PolyMatrix dx = linearization(field);
        const ResidueProblem prob{eval_invariant(InvariantPolySpec::det_spec(2), dx),
                                  field.components};
        QuadratureSpec spec{0.5, 64, 1e-2};
        const std::complex<double> value = residue_numeric(prob, spec);
        c.expect(std::abs(value - std::complex<double>(3.0, 0.0)) < 1e-2,
                 "numeric residue for the degenerate CP^2 problem is " +
                     std::to_string(value.real()) + " + " + std::to_string(value.imag()) + "i");
    }
    return c.ok;
}

bool criterion_properties(unsigned seed, Check& c) {
    std::mt19937 rng(seed);

    // Residue linearity on the degenerate CP^2 problem.
    {
        const ChartField field = max_degenerate_field(2);
        for (int trial = 0; trial < 100 && c.ok; ++trial) {
            const MultiPoly h1 = random_poly(rng, 2, 3, 4);
            const MultiPoly h2 = random_poly(rng, 2, 3, 4);
            const GaussianRational a = random_small_rational(rng);
            const GaussianRational b = random_small_rational(rng);
            const MultiPoly combo = h1.scaled(a) + h2.scaled(b);
            const GaussianRational lhs = residue({combo, field.components}).value;
            const GaussianRational rhs = a * residue({h1, field.components}).value +
                                         b * residue({h2, field.components}).value;
            c.expect(lhs == rhs, "residue linearity failed on trial " + std::to_string(trial));
        }
    }

    // Conjugation invariance of eval_invariant on constant matrices.
    {
        std::uniform_int_distribution<std::size_t> dim_dist(2, 4);
        for (int trial = 0; trial < 50 && c.ok; ++trial) {
            const std::size_t dim = dim_dist(rng);
            std::vector<std::vector<GaussianRational>> m(dim, std::vector<GaussianRational>(dim));
            for (auto& row : m)
                for (auto& v : row) v = random_small_rational(rng);
            // g = L U with unit triangular factors: invertible by construction.
            std::vector<std::vector<GaussianRational>> lower(dim,
                                                             std::vector<GaussianRational>(dim));
            std::vector<std::vector<GaussianRational>> upper(dim,
                                                             std::vector<GaussianRational>(dim));
            for (std::size_t i = 0; i < dim; ++i) {
                lower[i][i] = GaussianRational(1);
                upper[i][i] = GaussianRational(1);
                for (std::size_t j = 0; j < i; ++j) lower[i][j] = random_small_rational(rng);
                for (std::size_t j = i + 1; j < dim; ++j) upper[i][j] = random_small_rational(rng);
            }
            std::vector<std::vector<GaussianRational>> g(dim, std::vector<GaussianRational>(dim));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    for (std::size_t t = 0; t < dim; ++t) g[i][j] += lower[i][t] * upper[t][j];
            const auto ginv = invert_constant(g);

            const PolyMatrix mm = PolyMatrix::constant(m, 1);
            const PolyMatrix gm = PolyMatrix::constant(g, 1);
            const PolyMatrix gmi = PolyMatrix::constant(ginv, 1);
            const PolyMatrix conj = gm * mm * gmi;

            const std::vector<InvariantPolySpec> specs = {
                InvariantPolySpec::det_spec(static_cast<unsigned>(dim)),
                InvariantPolySpec::tr_power(static_cast<unsigned>(dim)),
                InvariantPolySpec::trace_of_power(static_cast<unsigned>(dim)),
                InvariantPolySpec::tr_times_det(static_cast<unsigned>(dim)),
                InvariantPolySpec::c1_power(2)};
            for (const auto& spec : specs) {
                c.expect(eval_invariant(spec, mm) == eval_invariant(spec, conj),
                         "conjugation invariance failed for " + spec.name() + " on trial " +
                             std::to_string(trial));
            }
        }
    }

    // Groebner cofactor identities and S-polynomial reduction.
    {
        std::uniform_int_distribution<std::size_t> nv_dist(2, 3);
        int done = 0;
        while (done < 20 && c.ok) {
            const std::size_t nv = nv_dist(rng);
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
                continue;  // skip pathological draws, they do not count
            }
            for (std::size_t k = 0; k < tb.basis.size(); ++k) {
                MultiPoly recon(nv);
                for (std::size_t j = 0; j < gens.size(); ++j)
                    recon += tb.cofactors[k][j] * gens[j];
                c.expect(recon == tb.basis[k],
                         "cofactor identity failed on ideal " + std::to_string(done));
            }
            c.expect(is_groebner(tb),
                     "an S-polynomial failed to reduce on ideal " + std::to_string(done));
            ++done;
        }
    }

    // parse/print round trip.
    {
        std::uniform_int_distribution<std::size_t> nv_dist(1, 4);
        for (int trial = 0; trial < 200 && c.ok; ++trial) {
            const std::size_t nv = nv_dist(rng);
            const MultiPoly p = random_poly(rng, nv, 5, 6, true);
            c.expect(parse_poly(print_poly(p), nv) == p,
                     "round trip failed on trial " + std::to_string(trial) + ": " +
                         print_poly(p));
        }
    }
    return c.ok;
}

}  // namespace

bool run_verification(const VerifyOptions& options, const VerifyReporter& report) {
    bool all = true;
    auto run = [&](int id, const std::string& name, auto&& fn) {
        Check c;
        bool ok = false;
        std::string detail;
        try {
            ok = fn(c);
            detail = c.detail.str();
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        all = all && ok;
        report({id, name, ok, detail});
    };

    const unsigned n_max = std::max(2u, options.n_max);
    run(1, "Euler characteristic chi(CP^n) = n+1, n=2.." + std::to_string(n_max),
        [&](Check& c) { return criterion_euler(n_max, c); });
    run(2, "Chern number via tr^n = (n+1)^n, n=2.." + std::to_string(n_max),
        [&](Check& c) { return criterion_chern(n_max, c); });
    run(3, "Futaki invariant vanishes (both trace conventions), n=2.." + std::to_string(n_max),
        [&](Check& c) { return criterion_futaki(n_max, c); });
    run(4, "tr*det invariant vanishes, n=2.." + std::to_string(n_max),
        [&](Check& c) { return criterion_tr_det(n_max, c); });
    run(5, "closed form agrees with the residue pipeline, n=2..4, four invariants",
        [&](Check& c) { return criterion_path_agreement(n_max, c); });
    run(6, "Groebner and explicit certificates give equal residues, n=2..4",
        [&](Check& c) { return criterion_certificate_independence(n_max, c); });
    run(7, "Bott sums over 20 random diagonal fields on CP^2 (det -> 3, tr^2 -> 9)",
        [&](Check& c) { return criterion_bott_consistency(options.seed, c); });
    if (options.with_oracle) {
        run(8, "Bochner-Martinelli oracle (normalizations and the degenerate CP^2 residue)",
            [&](Check& c) { return criterion_oracle(c); });
    } else {
        report({8, "Bochner-Martinelli oracle", true, "skipped (enable with --with-oracle)"});
    }
    run(9, "property suites (linearity, invariance, cofactors, round trip)",
        [&](Check& c) { return criterion_properties(options.seed, c); });
    return all;
}

}  // namespace resloc
