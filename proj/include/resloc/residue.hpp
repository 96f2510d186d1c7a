#pragma once

#include <string>
#include <vector>

#include "resloc/groebner.hpp"
#include "resloc/poly.hpp"

namespace resloc {

/// Res_0 [ h dz^1 ^ ... ^ dz^n / (f_1 ... f_n) ] with the origin an isolated
/// zero of f (caller contract; violations surface as certificate failure).
struct ResidueProblem {
    MultiPoly h;
    std::vector<MultiPoly> f;

    std::size_t nvars() const { return h.nvars(); }
    void check() const;
};

enum class ResidueMethod { nondegenerate, monomial, certificate };

std::string to_string(ResidueMethod m);

struct ResidueResult {
    GaussianRational value;
    ResidueMethod method;
    std::vector<std::uint32_t> alpha;  // empty for the nondegenerate path
};

/// h(0) / det Df(0).  Throws DegenerateZero when the Jacobian determinant at
/// the origin vanishes.
GaussianRational residue_nondegenerate(const ResidueProblem& prob);

/// Coefficient of z^alpha in h (the Cauchy monomial rule).
GaussianRational residue_monomial(const MultiPoly& h, const std::vector<std::uint32_t>& alpha);

/// Coefficient of z^alpha in h * det B, the derivative formula realized as
/// Taylor-coefficient extraction.  Throws InvalidCertificate unless the
/// certificate verifies against prob.f.
GaussianRational residue_via_certificate(const ResidueProblem& prob,
                                         const MembershipCertificate& cert);

struct ResidueOptions {
    unsigned max_exponent = 64;
    MonomialOrder order = MonomialOrder::grevlex();
};

/// Dispatch: nondegenerate evaluation, then the pure-monomial shortcut, then
/// the general certificate path (Groebner synthesis).  All applicable paths
/// agree by the transformation rule.
ResidueResult residue(const ResidueProblem& prob, const ResidueOptions& options = {});

}  // namespace resloc
