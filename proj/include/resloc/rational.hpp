#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace resloc {

/// Exact element of Q(i): rational real and imaginary parts.  GMP keeps each
/// part canonical (lowest terms, positive denominator, 0 stored as 0/1).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT: implicit by design, mirrors integer literals
    GaussianRational(mpq_class re) : re_(std::move(re)) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational ratio(const mpz_class& num, const mpz_class& den) {
        if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(std::move(q));
    }
    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        mpq_class n = norm_sq();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "p/q" for real values; "(p/q)i", "a + (c/d)i" style otherwise.
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline std::string rational_str(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline std::string GaussianRational::str() const {
    if (is_real()) return rational_str(re_);
    mpq_class ai = abs(im_);
    std::string imag = (ai == 1) ? "i"
                       : (ai.get_den() == 1) ? ai.get_num().get_str() + "i"
                                             : "(" + ai.get_str() + ")i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return rational_str(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

}  // namespace resloc
