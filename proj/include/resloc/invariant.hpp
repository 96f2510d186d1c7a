#pragma once

#include <string>
#include <vector>

#include "resloc/matrix.hpp"

namespace resloc {

/// Weighted-homogeneous polynomial in abstract conjugation-invariant
/// generators: g_j = Tr(A^j) (trace basis) or g_j = c_j(A) (Chern basis,
/// the coefficients of det(tI + A)).  Generator g_j has weight j; every term
/// must have the declared total weight, so invariance and homogeneity are
/// structural.
class InvariantPolySpec {
public:
    enum class Basis { trace_powers, chern_generators };

    struct Term {
        GaussianRational coeff;
        std::vector<std::pair<unsigned, unsigned>> gens;  // (generator index j >= 1, power)

        unsigned weighted_degree() const {
            unsigned d = 0;
            for (auto [j, p] : gens) d += j * p;
            return d;
        }
    };

    InvariantPolySpec(Basis basis, unsigned degree, std::vector<Term> terms);

    Basis basis() const { return basis_; }
    unsigned degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// Short display name when built from a shortcut, else a rendered form.
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // Common shortcuts.  `dim` is the size of the matrices the spec will be
    // evaluated on (needed where the determinant generator g_dim appears).
    static InvariantPolySpec det_spec(unsigned dim);            // det(A)
    static InvariantPolySpec tr_power(unsigned m);              // [Tr(A)]^m
    static InvariantPolySpec trace_of_power(unsigned m);        // Tr(A^m)
    static InvariantPolySpec tr_times_det(unsigned dim);        // Tr(A) det(A)
    static InvariantPolySpec c1_power(unsigned m);              // c_1(A)^m

    /// Accepts "det", "tr^m", "tr(A^m)", "tr*det", "c1^m".
    static InvariantPolySpec from_shortcut(const std::string& text, unsigned dim);

private:
    Basis basis_;
    unsigned degree_;
    std::vector<Term> terms_;
    std::string name_;
};

/// Substitute g_j by Tr(M^j) or c_j(M) and evaluate exactly.  Chern
/// generators with j > dim are zero.
MultiPoly eval_invariant(const InvariantPolySpec& spec, const PolyMatrix& m);

}  // namespace resloc
