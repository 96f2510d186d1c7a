#include "resloc/invariant.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "resloc/errors.hpp"

namespace resloc {

InvariantPolySpec::InvariantPolySpec(Basis basis, unsigned degree, std::vector<Term> terms)
    : basis_(basis), degree_(degree), terms_(std::move(terms)) {
    for (const Term& t : terms_) {
        if (t.weighted_degree() != degree_)
            throw DimensionMismatch("invariant spec term breaks weighted homogeneity");
        for (auto [j, p] : t.gens)
            if (j == 0) throw DimensionMismatch("generator indices are 1-based");
    }
    name_ = "custom(deg " + std::to_string(degree_) + ")";
}

InvariantPolySpec InvariantPolySpec::det_spec(unsigned dim) {
    InvariantPolySpec s(Basis::chern_generators, dim, {{GaussianRational(1), {{dim, 1}}}});
    s.set_name("det");
    return s;
}

InvariantPolySpec InvariantPolySpec::tr_power(unsigned m) {
    InvariantPolySpec s(Basis::trace_powers, m, {{GaussianRational(1), {{1, m}}}});
    s.set_name("tr^" + std::to_string(m));
    return s;
}

InvariantPolySpec InvariantPolySpec::trace_of_power(unsigned m) {
    InvariantPolySpec s(Basis::trace_powers, m, {{GaussianRational(1), {{m, 1}}}});
    s.set_name("tr(A^" + std::to_string(m) + ")");
    return s;
}

InvariantPolySpec InvariantPolySpec::tr_times_det(unsigned dim) {
    InvariantPolySpec s(Basis::chern_generators, dim + 1,
                        {{GaussianRational(1), {{1, 1}, {dim, 1}}}});
    s.set_name("tr*det");
    return s;
}

InvariantPolySpec InvariantPolySpec::c1_power(unsigned m) {
    InvariantPolySpec s(Basis::chern_generators, m, {{GaussianRational(1), {{1, m}}}});
    s.set_name("c1^" + std::to_string(m));
    return s;
}

InvariantPolySpec InvariantPolySpec::from_shortcut(const std::string& text, unsigned dim) {
    auto parse_power = [&](const std::string& prefix) -> long {
        std::string rest = text.substr(prefix.size());
        if (rest.empty()) return -1;
        for (char c : rest)
            if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
        return std::stol(rest);
    };
    if (text == "det") return det_spec(dim);
    if (text == "tr*det") return tr_times_det(dim);
    if (text.rfind("tr^", 0) == 0) {
        long m = parse_power("tr^");
        if (m >= 1) return tr_power(static_cast<unsigned>(m));
    }
    if (text.rfind("c1^", 0) == 0) {
        long m = parse_power("c1^");
        if (m >= 1) return c1_power(static_cast<unsigned>(m));
    }
    if (text.rfind("tr(A^", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(5, text.size() - 6);
        bool digits = !inner.empty();
        for (char c : inner) digits = digits && std::isdigit(static_cast<unsigned char>(c));
        if (digits) return trace_of_power(static_cast<unsigned>(std::stol(inner)));
    }
    throw Error("unknown invariant shortcut: " + text);
}

MultiPoly eval_invariant(const InvariantPolySpec& spec, const PolyMatrix& m) {
    // Generator values, computed once per needed index.
    std::map<unsigned, MultiPoly> gen;
    std::vector<MultiPoly> chern;
    const bool chern_basis = spec.basis() == InvariantPolySpec::Basis::chern_generators;
    if (chern_basis) chern = char_poly_coeffs(m);

    auto generator = [&](unsigned j) -> const MultiPoly& {
        auto it = gen.find(j);
        if (it != gen.end()) return it->second;
        MultiPoly value = chern_basis
                              ? (j <= m.dim() ? chern[j - 1] : MultiPoly::zero(m.nvars()))
                              : trace_power(m, j);
        return gen.emplace(j, std::move(value)).first->second;
    };

    MultiPoly result(m.nvars());
    for (const auto& term : spec.terms()) {
        MultiPoly t = MultiPoly::constant(m.nvars(), term.coeff);
        for (auto [j, p] : term.gens) t = t * generator(j).pow(p);
        result += t;
    }
    return result;
}

}  // namespace resloc
