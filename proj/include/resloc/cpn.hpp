#pragma once

#include <optional>
#include <vector>

#include "resloc/invariant.hpp"
#include "resloc/residue.hpp"

namespace resloc {

/// Holomorphic vector field on CP^n induced in homogeneous coordinates by a
/// traceless (n+1)x(n+1) matrix A: X = sum A_ij Z_j d/dZ_i.
struct ProjectiveVectorField {
    unsigned n;
    std::vector<std::vector<GaussianRational>> A;  // (n+1)x(n+1), indices from 0

    ProjectiveVectorField(unsigned n, std::vector<std::vector<GaussianRational>> a);

    static ProjectiveVectorField diagonal(const std::vector<GaussianRational>& entries);
    /// The Jordan matrix with 1's above the diagonal (single maximally
    /// degenerate zero at [1:0:...:0]).
    static ProjectiveVectorField jordan(unsigned n);

    bool is_diagonal() const;
};

/// The field restricted to one affine chart, components in that chart's
/// coordinates z_1..z_n.
struct ChartField {
    unsigned chart;
    std::vector<MultiPoly> components;

    std::size_t n() const { return components.size(); }
};

struct ZeroPoint {
    enum class Kind { nondegenerate, degenerate };
    unsigned chart;
    std::vector<GaussianRational> coords;
    Kind kind;
};

/// Affine components X_a = (A Z)_{m(a)} - z_a (A Z)_{chart} with Z_chart = 1.
ChartField induced_chart_field(const ProjectiveVectorField& v, unsigned chart);

/// Chart-0 field z_{j+1} - z_1 z_j (j < n), -z_1 z_n; its Jacobian is the
/// companion-like linearization with -2z_1 in the corner.
ChartField max_degenerate_field(unsigned n);

/// Full Jacobian matrix, entry (j, k) = dX_j / dz_k.
PolyMatrix linearization(const ChartField& f);

/// For diagonal A with pairwise distinct entries: the n+1 coordinate points,
/// each nondegenerate, reported at the origin of its own chart.
std::vector<ZeroPoint> fixed_points_diagonalizable(const ProjectiveVectorField& v);

/// Residue of phi(DX) dz / (X_1 ... X_n) at p (coordinates translated so p
/// is the origin).
GaussianRational local_contribution(const ChartField& f, const ZeroPoint& p,
                                    const InvariantPolySpec& phi,
                                    const ResidueOptions& options = {});

/// A field presented chart-by-chart with its declared zeros.
struct FieldWithZeros {
    unsigned n;
    std::vector<std::pair<ChartField, std::vector<ZeroPoint>>> charts;

    static FieldWithZeros from_max_degenerate(unsigned n);
    static FieldWithZeros from_diagonal(const ProjectiveVectorField& v);
};

struct Contribution {
    unsigned chart;
    std::vector<GaussianRational> point;
    std::vector<std::uint32_t> alpha;
    GaussianRational value;
};

struct FutakiMoritaResult {
    GaussianRational f_phi;
    GaussianRational residue_sum;  // undivided sum over zeros
    unsigned k;
    std::vector<Contribution> per_zero;
};

/// f_phi(X) = (-1)^k binom(n+k, n)^{-1} sum of local contributions, with
/// k = deg(phi) - n >= 0.  Zeros appearing in several declared charts are
/// deduplicated by homogeneous comparison and processed in the lowest chart.
FutakiMoritaResult futaki_morita(const FieldWithZeros& field, const InvariantPolySpec& phi,
                                 const ResidueOptions& options = {});

/// Closed form for the maximally degenerate field: evaluates
///   (-1)^{n+k}/binom(n+k,n) [ coeff_{z1^n} phi(DX)
///                             + sum_j coeff_{z1^n z_j} (phi(DX) z1^j) ].
GaussianRational proposition_formula(unsigned n, const InvariantPolySpec& phi);

struct FutakiResult {
    GaussianRational trace_of_power;  // phi(A) = Tr(A^{n+1})
    GaussianRational power_of_trace;  // phi(A) = [Tr(A)]^{n+1}
};

/// Both degree-(n+1) trace conventions of the Futaki invariant.
FutakiResult futaki(const FieldWithZeros& field, const ResidueOptions& options = {});

}  // namespace resloc
