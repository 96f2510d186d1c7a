#include "resloc/poly.hpp"

#include <stdexcept>

#include "resloc/errors.hpp"

namespace resloc {

namespace {
const GaussianRational kZero{};
}

MultiPoly MultiPoly::constant(std::size_t nvars, GaussianRational c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionMismatch("variable index out of range");
    Monomial m(nvars);
    m.exps[index] = 1;
    return term(nvars, std::move(m), GaussianRational(1));
}

MultiPoly MultiPoly::term(std::size_t nvars, Monomial m, GaussianRational c) {
    if (m.nvars() != nvars) throw DimensionMismatch("monomial length != nvars");
    MultiPoly p(nvars);
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned long MultiPoly::total_degree() const {
    unsigned long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const GaussianRational& MultiPoly::coefficient(const Monomial& m) const {
    if (m.nvars() != nvars_) throw DimensionMismatch("monomial length != nvars");
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable counts differ");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const GaussianRational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(nvars_, GaussianRational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DimensionMismatch("derivative variable out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0) continue;
        Monomial dm(m);
        --dm.exps[var];
        r.terms_.emplace(std::move(dm), c * GaussianRational(static_cast<long>(m.exps[var])));
    }
    return r;
}

MultiPoly MultiPoly::shifted(std::span<const GaussianRational> offset) const {
    if (offset.size() != nvars_) throw DimensionMismatch("shift point length != nvars");
    bool trivial = true;
    for (const auto& c : offset) trivial = trivial && c.is_zero();
    if (trivial) return *this;

    MultiPoly result(nvars_);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = constant(nvars_, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m.exps[i] == 0) continue;
            MultiPoly zi = variable(nvars_, i);
            zi += constant(nvars_, offset[i]);
            t = t * zi.pow(m.exps[i]);
        }
        result += t;
    }
    return result;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point length != nvars");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point length != nvars");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> v = c.to_complex();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m.exps[i] == 0) continue;
            std::complex<double> p = 1.0, base = point[i];
            std::uint32_t e = m.exps[i];
            while (e > 0) {
                if (e & 1u) p *= base;
                e >>= 1u;
                if (e > 0) base *= base;
            }
            v *= p;
        }
        acc += v;
    }
    return acc;
}

std::pair<Monomial, GaussianRational> MultiPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

bool MultiPoly::try_divide_exact(const MultiPoly& divisor, MultiPoly& quotient) const {
    check_compatible(divisor);
    if (divisor.is_zero()) return false;
    const MonomialOrder order = MonomialOrder::grevlex();
    const auto [dm, dc] = divisor.leading_term(order);
    const GaussianRational dc_inv = dc.inverse();

    MultiPoly q(nvars_);
    MultiPoly rem = *this;
    while (!rem.is_zero()) {
        const auto [rm, rc] = rem.leading_term(order);
        if (!dm.divides(rm)) return false;
        const Monomial qm = rm / dm;
        const GaussianRational qc = rc * dc_inv;
        q.add_term(qm, qc);
        rem -= divisor.times_term(qm, qc);
    }
    quotient = std::move(q);
    return true;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    MultiPoly q(nvars_);
    if (!try_divide_exact(divisor, q)) throw std::logic_error("division is not exact");
    return q;
}

}  // namespace resloc
