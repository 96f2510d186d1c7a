#pragma once

#include <complex>

#include "resloc/residue.hpp"

namespace resloc {

/// Sphere quadrature parameters.  The radius must keep every other zero of f
/// outside the closed ball (caller contract).
struct QuadratureSpec {
    double radius = 0.5;
    int nodes_per_angle = 64;
    double tolerance = 1e-2;
};

/// Integral of the Bochner-Martinelli kernel beta(w, 0) over the sphere of
/// the given radius; approaches 1 as nodes increase.  n in {1, 2}.
double bm_normalization(unsigned n, const QuadratureSpec& spec);

/// Quadrature of the distinguished representative
///   C_n h(z) sum_i (-1)^{i-1} conj(f_i) d conj(f_1) ^ ... ^ dz / |f|^{2n}
/// over the sphere.  Throws SingularOnSphere when |f| dips below the safety
/// floor at a node.  n in {1, 2}.
std::complex<double> residue_numeric(const ResidueProblem& prob, const QuadratureSpec& spec);

}  // namespace resloc
