#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "resloc/errors.hpp"

namespace resloc {

/// Exponent vector z_1^{e_1} ... z_n^{e_n}.  The built-in comparison is the
/// raw lexicographic order on the vector and is used only for container keys;
/// ranking under a monomial order goes through MonomialOrder.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    Monomial(std::initializer_list<std::uint32_t> e) : exps(e) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }

    unsigned long total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), 0ul);
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
        return r;
    }

    /// Exponent-wise difference; caller guarantees m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

/// Total order on monomials of a fixed variable count, multiplicative, with 1
/// minimal.  `var_order` lists variable indices from most to least significant
/// (empty means identity).
struct MonomialOrder {
    enum class Kind { grevlex, lex };

    Kind kind = Kind::grevlex;
    std::vector<std::uint32_t> var_order;

    static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }
    static MonomialOrder lex() { return {Kind::lex, {}}; }

    std::uint32_t var_at(std::size_t pos, std::size_t nvars) const {
        return var_order.empty() ? static_cast<std::uint32_t>(pos) : var_order[pos];
    }

    /// Strict "a ranks below b".
    bool less(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.exps.size();
        if (kind == Kind::grevlex) {
            const auto da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db;
            // Equal degree: a < b iff the rightmost differing position has a
            // larger exponent in a.
            for (std::size_t p = n; p-- > 0;) {
                const auto va = a.exps[var_at(p, n)], vb = b.exps[var_at(p, n)];
                if (va != vb) return va > vb;
            }
            return false;
        }
        for (std::size_t p = 0; p < n; ++p) {
            const auto va = a.exps[var_at(p, n)], vb = b.exps[var_at(p, n)];
            if (va != vb) return va < vb;
        }
        return false;
    }
};

}  // namespace resloc
