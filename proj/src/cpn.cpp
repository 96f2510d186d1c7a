#include "resloc/cpn.hpp"

#include <algorithm>
#include <map>

#include "resloc/errors.hpp"

namespace resloc {

ProjectiveVectorField::ProjectiveVectorField(unsigned n,
                                             std::vector<std::vector<GaussianRational>> a)
    : n(n), A(std::move(a)) {
    if (A.size() != n + 1) throw DimensionMismatch("matrix must be (n+1)x(n+1)");
    GaussianRational trace;
    for (std::size_t i = 0; i <= n; ++i) {
        if (A[i].size() != n + 1) throw DimensionMismatch("matrix must be (n+1)x(n+1)");
        trace += A[i][i];
    }
    if (!trace.is_zero()) throw DimensionMismatch("matrix must be traceless");
}

ProjectiveVectorField ProjectiveVectorField::diagonal(
    const std::vector<GaussianRational>& entries) {
    const unsigned n = static_cast<unsigned>(entries.size()) - 1;
    std::vector<std::vector<GaussianRational>> a(n + 1, std::vector<GaussianRational>(n + 1));
    for (std::size_t i = 0; i <= n; ++i) a[i][i] = entries[i];
    return {n, std::move(a)};
}

ProjectiveVectorField ProjectiveVectorField::jordan(unsigned n) {
    std::vector<std::vector<GaussianRational>> a(n + 1, std::vector<GaussianRational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) a[i][i + 1] = GaussianRational(1);
    return {n, std::move(a)};
}

bool ProjectiveVectorField::is_diagonal() const {
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (i != j && !A[i][j].is_zero()) return false;
    return true;
}

ChartField induced_chart_field(const ProjectiveVectorField& v, unsigned chart) {
    const unsigned n = v.n;
    if (chart > n) throw DimensionMismatch("chart index out of range");

    // Homogeneous index m of affine variable z_a (1-based a), skipping chart.
    std::vector<std::size_t> hom;
    for (std::size_t m = 0; m <= n; ++m)
        if (m != chart) hom.push_back(m);

    // Z as polynomials in the chart coordinates: Z_chart = 1, Z_{hom[a]} = z_{a+1}.
    std::vector<MultiPoly> Z(n + 1, MultiPoly::zero(n));
    Z[chart] = MultiPoly::constant(n, 1);
    for (std::size_t a = 0; a < n; ++a) Z[hom[a]] = MultiPoly::variable(n, a);

    auto row_dot = [&](std::size_t row) {
        MultiPoly acc(n);
        for (std::size_t j = 0; j <= n; ++j) {
            if (v.A[row][j].is_zero()) continue;
            acc += Z[j].scaled(v.A[row][j]);
        }
        return acc;
    };

    const MultiPoly chart_row = row_dot(chart);
    ChartField f{chart, {}};
    f.components.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
        f.components.push_back(row_dot(hom[a]) - Z[hom[a]] * chart_row);
    return f;
}

ChartField max_degenerate_field(unsigned n) {
    if (n < 2) throw DimensionMismatch("maximally degenerate field needs n >= 2");
    return induced_chart_field(ProjectiveVectorField::jordan(n), 0);
}

PolyMatrix linearization(const ChartField& f) {
    const std::size_t n = f.n();
    PolyMatrix jac(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) jac.at(j, k) = f.components[j].derivative(k);
    return jac;
}

std::vector<ZeroPoint> fixed_points_diagonalizable(const ProjectiveVectorField& v) {
    if (!v.is_diagonal()) throw DimensionMismatch("NotDiagonalDistinct: matrix is not diagonal");
    for (std::size_t i = 0; i <= v.n; ++i)
        for (std::size_t j = i + 1; j <= v.n; ++j)
            if (v.A[i][i] == v.A[j][j])
                throw DimensionMismatch("NotDiagonalDistinct: repeated eigenvalues");

    std::vector<ZeroPoint> zeros;
    zeros.reserve(v.n + 1);
    for (unsigned c = 0; c <= v.n; ++c)
        zeros.push_back({c, std::vector<GaussianRational>(v.n), ZeroPoint::Kind::nondegenerate});
    return zeros;
}

GaussianRational local_contribution(const ChartField& f, const ZeroPoint& p,
                                    const InvariantPolySpec& phi,
                                    const ResidueOptions& options) {
    if (p.coords.size() != f.n()) throw DimensionMismatch("zero point length != field vars");

    std::vector<MultiPoly> shifted;
    shifted.reserve(f.n());
    for (const MultiPoly& c : f.components) shifted.push_back(c.shifted(p.coords));
    for (const MultiPoly& c : shifted)
        if (!c.constant_term().is_zero())
            throw DimensionMismatch("declared point is not a zero of the field");

    ChartField local{f.chart, std::move(shifted)};
    const MultiPoly h = eval_invariant(phi, linearization(local));
    return residue({h, local.components}, options).value;
}

FieldWithZeros FieldWithZeros::from_max_degenerate(unsigned n) {
    FieldWithZeros f{n, {}};
    ZeroPoint origin{0, std::vector<GaussianRational>(n), ZeroPoint::Kind::degenerate};
    f.charts.emplace_back(max_degenerate_field(n), std::vector<ZeroPoint>{origin});
    return f;
}

FieldWithZeros FieldWithZeros::from_diagonal(const ProjectiveVectorField& v) {
    FieldWithZeros f{v.n, {}};
    for (const ZeroPoint& z : fixed_points_diagonalizable(v))
        f.charts.emplace_back(induced_chart_field(v, z.chart), std::vector<ZeroPoint>{z});
    return f;
}

namespace {

// Canonical homogeneous coordinates of a chart point: first nonzero entry 1.
std::vector<GaussianRational> homogeneous_key(unsigned n, const ZeroPoint& p) {
    std::vector<GaussianRational> h(n + 1);
    h[p.chart] = GaussianRational(1);
    std::size_t a = 0;
    for (std::size_t m = 0; m <= n; ++m) {
        if (m == p.chart) continue;
        h[m] = p.coords[a++];
    }
    for (auto& v : h) {
        if (v.is_zero()) continue;
        const GaussianRational scale = v.inverse();
        for (auto& w : h) w = w * scale;
        break;
    }
    return h;
}

struct KeyLess {
    bool operator()(const std::vector<GaussianRational>& a,
                    const std::vector<GaussianRational>& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].re() != b[i].re()) return a[i].re() < b[i].re();
            if (a[i].im() != b[i].im()) return a[i].im() < b[i].im();
        }
        return false;
    }
};

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

FutakiMoritaResult futaki_morita(const FieldWithZeros& field, const InvariantPolySpec& phi,
                                 const ResidueOptions& options) {
    if (phi.degree() < field.n)
        throw DimensionMismatch("invariant degree below n is outside the framework");
    const unsigned k = phi.degree() - field.n;

    // Deduplicate declared zeros by homogeneous comparison; lowest chart wins.
    std::map<std::vector<GaussianRational>, std::pair<std::size_t, std::size_t>, KeyLess> chosen;
    for (std::size_t ci = 0; ci < field.charts.size(); ++ci) {
        const auto& [chart_field, zeros] = field.charts[ci];
        for (std::size_t zi = 0; zi < zeros.size(); ++zi) {
            auto key = homogeneous_key(field.n, zeros[zi]);
            auto it = chosen.find(key);
            if (it == chosen.end() ||
                field.charts[it->second.first].first.chart > chart_field.chart)
                chosen[std::move(key)] = {ci, zi};
        }
    }

    FutakiMoritaResult result{{}, {}, k, {}};
    for (const auto& [key, loc] : chosen) {
        const auto& [chart_field, zeros] = field.charts[loc.first];
        const ZeroPoint& p = zeros[loc.second];
        Contribution c{chart_field.chart, p.coords, {}, {}};
        // Same computation as local_contribution, keeping alpha for the report.
        std::vector<MultiPoly> shifted;
        shifted.reserve(chart_field.n());
        for (const MultiPoly& comp : chart_field.components)
            shifted.push_back(comp.shifted(p.coords));
        for (const MultiPoly& comp : shifted)
            if (!comp.constant_term().is_zero())
                throw DimensionMismatch("declared point is not a zero of the field");
        ChartField local{chart_field.chart, std::move(shifted)};
        const MultiPoly h = eval_invariant(phi, linearization(local));
        ResidueResult r = residue({h, local.components}, options);
        c.alpha = r.alpha;
        c.value = r.value;
        result.residue_sum += c.value;
        result.per_zero.push_back(std::move(c));
    }

    GaussianRational scale = GaussianRational::ratio(1, binomial(field.n + k, field.n));
    if (k % 2 == 1) scale = -scale;
    result.f_phi = result.residue_sum * scale;
    return result;
}

GaussianRational proposition_formula(unsigned n, const InvariantPolySpec& phi) {
    if (n < 2) throw DimensionMismatch("proposition formula needs n >= 2");
    if (phi.degree() < n)
        throw DimensionMismatch("invariant degree below n is outside the framework");
    const unsigned k = phi.degree() - n;

    const ChartField field = max_degenerate_field(n);
    const MultiPoly phi_dx = eval_invariant(phi, linearization(field));

    Monomial z1n(n);
    z1n.exps[0] = n;
    GaussianRational bracket = phi_dx.coefficient(z1n);
    for (unsigned j = 2; j <= n; ++j) {
        Monomial z1j(n);
        z1j.exps[0] = j;
        Monomial target(n);
        target.exps[0] = n;
        target.exps[j - 1] = 1;
        bracket += (phi_dx * MultiPoly::term(n, z1j, 1)).coefficient(target);
    }

    GaussianRational scale = GaussianRational::ratio(1, binomial(n + k, n));
    if ((n + k) % 2 == 1) scale = -scale;
    return bracket * scale;
}

FutakiResult futaki(const FieldWithZeros& field, const ResidueOptions& options) {
    const unsigned m = field.n + 1;
    return {futaki_morita(field, InvariantPolySpec::trace_of_power(m), options).f_phi,
            futaki_morita(field, InvariantPolySpec::tr_power(m), options).f_phi};
}

}  // namespace resloc
