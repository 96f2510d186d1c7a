#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "resloc/matrix.hpp"
#include "resloc/poly.hpp"

namespace resloc {

/// Groebner basis of an ideal <f_1..f_n> with exact cofactor bookkeeping:
/// basis[k] = sum_j cofactors[k][j] * generators[j] holds as a polynomial
/// identity throughout construction.
struct TrackedBasis {
    std::vector<MultiPoly> generators;
    std::vector<MultiPoly> basis;
    std::vector<std::vector<MultiPoly>> cofactors;
    MonomialOrder order;
};

struct BuchbergerLimits {
    std::size_t max_basis_size = 4096;
    unsigned long max_degree = 512;
};

/// Buchberger with the product and chain pair criteria, followed by
/// inter-reduction to the reduced basis.  Cofactors stay expressed over the
/// original generators.  Throws ResourceLimit when `limits` is exceeded.
TrackedBasis buchberger(const std::vector<MultiPoly>& f,
                        const MonomialOrder& order = MonomialOrder::grevlex(),
                        const BuchbergerLimits& limits = {});

/// Full reduction of p by tb.basis.  Returns (remainder, cofactors over the
/// ORIGINAL generators) with p = sum_j cof[j] * f_j + remainder and no
/// remainder monomial divisible by any basis leading term.
std::pair<MultiPoly, std::vector<MultiPoly>> normal_form(const MultiPoly& p,
                                                         const TrackedBasis& tb);

/// True iff every S-polynomial of the basis reduces to zero.
bool is_groebner(const TrackedBasis& tb);

/// Exact witness that z_i^{alpha_i + 1} = sum_j B_ij * f_j for every i.
struct MembershipCertificate {
    std::vector<std::uint32_t> alpha;
    PolyMatrix B;
};

/// Per-variable minimal certificate search: alpha_i + 1 is the least
/// m <= max_exponent with z_i^m in the ideal; row i of B is that reduction's
/// cofactor vector.  Throws NotIsolatedOrCapTooLow when some power never
/// reduces to zero.
MembershipCertificate find_certificate(const std::vector<MultiPoly>& f, unsigned max_exponent,
                                       const MonomialOrder& order = MonomialOrder::grevlex());

bool verify_certificate(const MembershipCertificate& cert, const std::vector<MultiPoly>& f);

/// The explicit certificate for the maximally degenerate field on CP^n
/// (n >= 2): alpha_1 = n, alpha_n = 1, alpha_i = 2^k - 1 for the middle
/// variables, where 2^k < n+1 <= 2^{k+1}.  Verified exactly on construction.
MembershipCertificate paper_certificate_cpn(unsigned n);

}  // namespace resloc
