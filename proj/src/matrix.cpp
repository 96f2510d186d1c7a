#include "resloc/matrix.hpp"

#include <stdexcept>

#include "resloc/errors.hpp"

namespace resloc {

PolyMatrix PolyMatrix::identity(std::size_t dim, std::size_t nvars) {
    PolyMatrix m(dim, nvars);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = MultiPoly::constant(nvars, 1);
    return m;
}

PolyMatrix PolyMatrix::constant(const std::vector<std::vector<GaussianRational>>& values,
                                std::size_t nvars) {
    PolyMatrix m(values.size(), nvars);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].size() != values.size()) throw DimensionMismatch("matrix is not square");
        for (std::size_t j = 0; j < values.size(); ++j)
            m.at(i, j) = MultiPoly::constant(nvars, values[i][j]);
    }
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (dim_ != o.dim_ || nvars_ != o.nvars_) throw DimensionMismatch("matrix shape mismatch");
    PolyMatrix r(dim_, nvars_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (dim_ != o.dim_ || nvars_ != o.nvars_) throw DimensionMismatch("matrix shape mismatch");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

PolyMatrix PolyMatrix::scaled(const GaussianRational& c) const {
    PolyMatrix r(dim_, nvars_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r.at(i, j) = at(i, j).scaled(c);
    return r;
}

MultiPoly PolyMatrix::trace() const {
    MultiPoly t(nvars_);
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

std::vector<std::vector<GaussianRational>> PolyMatrix::evaluate(
    std::span<const GaussianRational> point) const {
    std::vector<std::vector<GaussianRational>> out(dim_, std::vector<GaussianRational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i][j] = at(i, j).evaluate(point);
    return out;
}

namespace {

// Expansion along the last included row; minors keyed by column subset mask.
MultiPoly det_leibniz(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<MultiPoly> minors(std::size_t{1} << n, MultiPoly::zero(m.nvars()));
    minors[0] = MultiPoly::constant(m.nvars(), 1);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
        MultiPoly acc(m.nvars());
        std::size_t pos = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (std::size_t{1} << col))) continue;
            const MultiPoly& e = m.at(row, col);
            if (!e.is_zero()) {
                MultiPoly sub = e * minors[mask ^ (std::size_t{1} << col)];
                if ((row + pos) % 2 == 0)
                    acc += sub;
                else
                    acc -= sub;
            }
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

MultiPoly det_bareiss(PolyMatrix m) {
    const std::size_t n = m.dim();
    bool negate = false;
    MultiPoly prev_pivot = MultiPoly::constant(m.nvars(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly::zero(m.nvars());
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.divide_exact(prev_pivot);
            }
            m.at(i, k) = MultiPoly::zero(m.nvars());
        }
        prev_pivot = m.at(k, k);
    }
    MultiPoly result = m.at(n - 1, n - 1);
    return negate ? -result : result;
}

}  // namespace

MultiPoly det(const PolyMatrix& m) {
    if (m.dim() == 0) return MultiPoly::constant(m.nvars(), 1);
    return m.dim() <= 6 ? det_leibniz(m) : det_bareiss(m);
}

MultiPoly trace_power(const PolyMatrix& m, unsigned j) {
    if (j == 0) throw std::logic_error("trace_power needs j >= 1");
    PolyMatrix p = m;
    for (unsigned t = 1; t < j; ++t) p = p * m;
    return p.trace();
}

std::vector<MultiPoly> char_poly_coeffs(const PolyMatrix& m) {
    // Faddeev-LeVerrier on -M: det(tI + M) = det(tI - (-M)) and the sign
    // alternation cancels, so step k directly yields c_k = e_k(M).  The only
    // divisions are by the step index, exact over Q(i).
    const std::size_t n = m.dim();
    const PolyMatrix a = m.scaled(GaussianRational(-1));
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(n);
    PolyMatrix mk(n, m.nvars());  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        PolyMatrix prev_scaled(n, m.nvars());
        for (std::size_t i = 0; i < n; ++i)
            prev_scaled.at(i, i) =
                coeffs.empty() ? MultiPoly::constant(m.nvars(), 1) : coeffs[k - 2];
        mk = a * mk + prev_scaled;
        MultiPoly ck =
            (a * mk).trace().scaled(GaussianRational::ratio(-1, static_cast<long>(k)));
        coeffs.push_back(std::move(ck));
    }
    return coeffs;
}

}  // namespace resloc
