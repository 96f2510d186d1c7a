#pragma once

#include <cstddef>
#include <vector>

#include "resloc/poly.hpp"

namespace resloc {

/// Square matrix of polynomials sharing one variable set.
class PolyMatrix {
public:
    PolyMatrix(std::size_t dim, std::size_t nvars)
        : dim_(dim), nvars_(nvars), entries_(dim * dim, MultiPoly::zero(nvars)) {}

    static PolyMatrix identity(std::size_t dim, std::size_t nvars);
    static PolyMatrix constant(const std::vector<std::vector<GaussianRational>>& values,
                               std::size_t nvars);

    std::size_t dim() const { return dim_; }
    std::size_t nvars() const { return nvars_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix scaled(const GaussianRational& c) const;

    MultiPoly trace() const;

    /// Evaluate every entry at an exact point.
    std::vector<std::vector<GaussianRational>> evaluate(
        std::span<const GaussianRational> point) const;

    bool operator==(const PolyMatrix&) const = default;

private:
    std::size_t dim_;
    std::size_t nvars_;
    std::vector<MultiPoly> entries_;  // row-major
};

/// Exact determinant.  Leibniz expansion with memoized minors up to dim 6,
/// fraction-free Bareiss elimination above (polynomial pivots, exact
/// divisions only).
MultiPoly det(const PolyMatrix& m);

/// Tr(M^j), j >= 1.
MultiPoly trace_power(const PolyMatrix& m, unsigned j);

/// Coefficients c_1..c_dim with det(tI + M) = sum_j c_j t^{dim-j}, c_0 = 1.
/// Faddeev-LeVerrier recursion; c_dim = det(M).
std::vector<MultiPoly> char_poly_coeffs(const PolyMatrix& m);

}  // namespace resloc
