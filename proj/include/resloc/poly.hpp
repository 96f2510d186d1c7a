#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "resloc/monomial.hpp"
#include "resloc/rational.hpp"

namespace resloc {

/// Sparse multivariate polynomial over Q(i).  Canonical: no stored zero
/// coefficients, at most one entry per monomial.  Immutable in spirit; all
/// operations return fresh values and never round.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(std::size_t nvars, GaussianRational c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly term(std::size_t nvars, Monomial m, GaussianRational c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned long total_degree() const;  // 0 for the zero polynomial

    const GaussianRational& coefficient(const Monomial& m) const;
    GaussianRational constant_term() const { return coefficient(Monomial(nvars_)); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const GaussianRational& c) const;
    MultiPoly times_term(const Monomial& m, const GaussianRational& c) const;
    MultiPoly pow(unsigned e) const;

    MultiPoly derivative(std::size_t var) const;

    /// Substitute z -> z + offset (exact Taylor shift).
    MultiPoly shifted(std::span<const GaussianRational> offset) const;

    GaussianRational evaluate(std::span<const GaussianRational> point) const;
    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    /// Requires a nonzero polynomial.
    std::pair<Monomial, GaussianRational> leading_term(const MonomialOrder& order) const;

    /// Quotient when `divisor` divides exactly; false otherwise.
    bool try_divide_exact(const MultiPoly& divisor, MultiPoly& quotient) const;
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    bool operator==(const MultiPoly&) const = default;

    std::string str() const;  // canonical text form (see parse.hpp)

    void add_term(const Monomial& m, const GaussianRational& c);

private:
    std::size_t nvars_;
    TermMap terms_;

    void check_compatible(const MultiPoly& o) const;
};

}  // namespace resloc
