#include "resloc/residue.hpp"

#include <optional>

#include "resloc/errors.hpp"
#include "resloc/matrix.hpp"

namespace resloc {

void ResidueProblem::check() const {
    if (f.empty()) throw DimensionMismatch("denominator map is empty");
    if (f.size() != h.nvars())
        throw DimensionMismatch("denominator map must have one entry per variable");
    for (const MultiPoly& fi : f)
        if (fi.nvars() != h.nvars()) throw DimensionMismatch("variable counts differ");
}

std::string to_string(ResidueMethod m) {
    switch (m) {
        case ResidueMethod::nondegenerate: return "nondegenerate";
        case ResidueMethod::monomial: return "monomial";
        case ResidueMethod::certificate: return "certificate";
    }
    return "?";
}

namespace {

// Linearization of f at the origin as a constant matrix.
std::vector<std::vector<GaussianRational>> jacobian_at_zero(const std::vector<MultiPoly>& f) {
    const std::size_t n = f.size();
    std::vector<std::vector<GaussianRational>> j(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n);
        for (std::size_t v = 0; v < n; ++v) {
            m.exps[v] = 1;
            j[i][v] = f[i].coefficient(m);
            m.exps[v] = 0;
        }
    }
    return j;
}

GaussianRational det_constant(const std::vector<std::vector<GaussianRational>>& a) {
    PolyMatrix m = PolyMatrix::constant(a, 1);
    return det(m).constant_term();
}

// When every f_i is a single term c_i z_{s(i)}^{e_i} with s a permutation of
// the variables, the certificate is immediate: alpha_{s(i)} = e_i - 1 and
// B = permuted diag(1/c_i), whose determinant carries sgn(s).
std::optional<MembershipCertificate> monomial_certificate(const std::vector<MultiPoly>& f) {
    const std::size_t n = f.size();
    std::vector<std::size_t> var_of(n);
    std::vector<std::uint32_t> exp_of(n);
    std::vector<GaussianRational> coef_of(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].term_count() != 1) return std::nullopt;
        const auto& [m, c] = *f[i].terms().begin();
        std::size_t var = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (m.exps[v] == 0) continue;
            if (var != n) return std::nullopt;  // touches two variables
            var = v;
        }
        if (var == n || used[var]) return std::nullopt;
        used[var] = true;
        var_of[i] = var;
        exp_of[i] = m.exps[var];
        coef_of[i] = c;
    }
    MembershipCertificate cert{std::vector<std::uint32_t>(n, 0), PolyMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        cert.alpha[var_of[i]] = exp_of[i] - 1;
        cert.B.at(var_of[i], i) = MultiPoly::constant(n, coef_of[i].inverse());
    }
    return cert;
}

}  // namespace

GaussianRational residue_nondegenerate(const ResidueProblem& prob) {
    prob.check();
    const GaussianRational jdet = det_constant(jacobian_at_zero(prob.f));
    if (jdet.is_zero())
        throw DegenerateZero("Jacobian determinant vanishes at the origin");
    return prob.h.constant_term() / jdet;
}

GaussianRational residue_monomial(const MultiPoly& h, const std::vector<std::uint32_t>& alpha) {
    if (alpha.size() != h.nvars()) throw DimensionMismatch("alpha length != nvars");
    return h.coefficient(Monomial(std::vector<std::uint32_t>(alpha)));
}

GaussianRational residue_via_certificate(const ResidueProblem& prob,
                                         const MembershipCertificate& cert) {
    prob.check();
    if (!verify_certificate(cert, prob.f))
        throw InvalidCertificate("membership certificate does not verify against f");
    return residue_monomial(prob.h * det(cert.B), cert.alpha);
}

ResidueResult residue(const ResidueProblem& prob, const ResidueOptions& options) {
    prob.check();
    const GaussianRational jdet = det_constant(jacobian_at_zero(prob.f));
    if (!jdet.is_zero())
        return {prob.h.constant_term() / jdet, ResidueMethod::nondegenerate, {}};

    if (auto cert = monomial_certificate(prob.f)) {
        return {residue_via_certificate(prob, *cert), ResidueMethod::monomial, cert->alpha};
    }

    MembershipCertificate cert = find_certificate(prob.f, options.max_exponent, options.order);
    return {residue_via_certificate(prob, cert), ResidueMethod::certificate, cert.alpha};
}

}  // namespace resloc
