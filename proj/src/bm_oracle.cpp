#include "resloc/bm_oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

using Complex = std::complex<double>;

constexpr double kSingularFloor = 1e-9;

// Fixed-order compensated accumulation: deterministic at a fixed grid.
struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex carry{0.0, 0.0};

    void add(Complex v) {
        const Complex y = v - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

Complex det3(const std::array<std::array<Complex, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Complex residue_numeric_1(const ResidueProblem& prob, const QuadratureSpec& spec) {
    const int nodes = spec.nodes_per_angle;
    const double eps = spec.radius;
    const double dtheta = 2.0 * std::numbers::pi / nodes;
    // C_1 h conj(f) dz / |f|^2 pulled back through z = eps e^{i theta}.
    const Complex c1 = 1.0 / Complex(0.0, 2.0 * std::numbers::pi);

    KahanSum acc;
    for (int t = 0; t < nodes; ++t) {
        const double theta = t * dtheta;
        const Complex z = eps * std::exp(Complex(0.0, theta));
        const std::array<Complex, 1> pt{z};
        const Complex fz = prob.f[0].evaluate(std::span<const Complex>(pt));
        if (std::abs(fz) < kSingularFloor)
            throw SingularOnSphere("|f| below safety floor on quadrature node");
        const Complex hz = prob.h.evaluate(std::span<const Complex>(pt));
        const Complex dz = Complex(0.0, 1.0) * z;  // dz/dtheta
        acc.add(hz * std::conj(fz) * dz / std::norm(fz));
    }
    return c1 * acc.sum * dtheta;
}

Complex residue_numeric_2(const ResidueProblem& prob, const QuadratureSpec& spec) {
    const int nodes = spec.nodes_per_angle;
    const double eps = spec.radius;

    // Simpson weights on eta in [0, pi/2] need an even interval count.
    const int neta = nodes % 2 == 0 ? nodes : nodes + 1;
    const double deta = (std::numbers::pi / 2.0) / neta;
    const double dtheta = 2.0 * std::numbers::pi / nodes;

    const std::array<MultiPoly, 2> f{prob.f[0], prob.f[1]};
    const std::array<std::array<MultiPoly, 2>, 2> df{
        std::array<MultiPoly, 2>{f[0].derivative(0), f[0].derivative(1)},
        std::array<MultiPoly, 2>{f[1].derivative(0), f[1].derivative(1)}};

    // C_2 = (-1) 1! / (2 pi i)^2 = 1/(4 pi^2); the parameterization
    //   z1 = eps cos(eta) e^{i theta1},  z2 = eps sin(eta) e^{i theta2}
    // carries the opposite of the boundary orientation, hence the extra -1
    // (fixed once by requiring the kernel normalization to equal +1).
    const double constant = -1.0 / (4.0 * std::numbers::pi * std::numbers::pi);

    KahanSum acc;
    for (int a = 0; a <= neta; ++a) {
        const double eta = a * deta;
        const double weta = (a == 0 || a == neta) ? 1.0 : (a % 2 == 1 ? 4.0 : 2.0);
        const double ce = std::cos(eta), se = std::sin(eta);
        for (int b = 0; b < nodes; ++b) {
            const double theta1 = b * dtheta;
            const Complex e1 = std::exp(Complex(0.0, theta1));
            for (int c = 0; c < nodes; ++c) {
                const double theta2 = c * dtheta;
                const Complex e2 = std::exp(Complex(0.0, theta2));

                const std::array<Complex, 2> z{eps * ce * e1, eps * se * e2};
                const std::span<const Complex> pt(z);

                const Complex f1 = f[0].evaluate(pt);
                const Complex f2 = f[1].evaluate(pt);
                const double norm2 = std::norm(f1) + std::norm(f2);
                if (norm2 < kSingularFloor * kSingularFloor)
                    throw SingularOnSphere("|f| below safety floor on quadrature node");

                // Pullbacks of dz_1, dz_2 along (eta, theta1, theta2).
                const std::array<Complex, 3> u1{-eps * se * e1, Complex(0.0, 1.0) * z[0],
                                                Complex(0.0, 0.0)};
                const std::array<Complex, 3> u2{eps * ce * e2, Complex(0.0, 0.0),
                                                Complex(0.0, 1.0) * z[1]};

                // w_i = pullback of d conj(f_i) = sum_j conj(df_i/dz_j) d conj(z_j).
                std::array<std::array<Complex, 3>, 2> w{};
                for (int i = 0; i < 2; ++i) {
                    const Complex di1 = std::conj(df[i][0].evaluate(pt));
                    const Complex di2 = std::conj(df[i][1].evaluate(pt));
                    for (int s = 0; s < 3; ++s)
                        w[i][s] = di1 * std::conj(u1[s]) + di2 * std::conj(u2[s]);
                }

                // (conj(f1) w2 - conj(f2) w1) ^ dz1 ^ dz2.
                std::array<std::array<Complex, 3>, 3> rows;
                for (int s = 0; s < 3; ++s)
                    rows[0][s] = std::conj(f1) * w[1][s] - std::conj(f2) * w[0][s];
                rows[1] = u1;
                rows[2] = u2;

                const Complex hz = prob.h.evaluate(pt);
                acc.add(weta * hz * det3(rows) / (norm2 * norm2));
            }
        }
    }
    const double measure = (deta / 3.0) * dtheta * dtheta;
    return constant * acc.sum * measure;
}

}  // namespace

std::complex<double> residue_numeric(const ResidueProblem& prob, const QuadratureSpec& spec) {
    prob.check();
    if (spec.radius <= 0.0) throw DimensionMismatch("radius must be positive");
    if (spec.nodes_per_angle < 2) throw DimensionMismatch("need at least 2 nodes per angle");
    switch (prob.nvars()) {
        case 1: return residue_numeric_1(prob, spec);
        case 2: return residue_numeric_2(prob, spec);
        default: throw DimensionMismatch("numeric oracle supports n <= 2 only");
    }
}

double bm_normalization(unsigned n, const QuadratureSpec& spec) {
    if (n < 1 || n > 2) throw DimensionMismatch("numeric oracle supports n <= 2 only");
    ResidueProblem prob{MultiPoly::constant(n, 1), {}};
    for (unsigned i = 0; i < n; ++i) prob.f.push_back(MultiPoly::variable(n, i));
    return residue_numeric(prob, spec).real();
}

}  // namespace resloc
