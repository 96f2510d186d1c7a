#include "resloc/json_io.hpp"

#include <algorithm>
#include <vector>

#include "resloc/errors.hpp"
#include "resloc/parse.hpp"

namespace resloc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what, 0); }

}  // namespace

Json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

mpz_class mpz_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    bad("expected integer (number or string)");
}

Json rational_to_json(const mpq_class& q) {
    return Json::array({mpz_to_json(q.get_num()), mpz_to_json(q.get_den())});
}

mpq_class rational_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) bad("rational array must be [num, den]");
        mpq_class q(mpz_from_json(j[0]), mpz_from_json(j[1]));
        if (q.get_den() == 0) bad("zero denominator");
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return mpq_class(j.get<std::int64_t>());
    if (j.is_string()) {
        mpq_class q(j.get<std::string>());
        if (q.get_den() == 0) bad("zero denominator");
        q.canonicalize();
        return q;
    }
    bad("expected rational ([num,den], integer, or \"p/q\")");
}

Json gaussian_to_json(const GaussianRational& v) {
    Json j = Json::object();
    j["re"] = rational_to_json(v.re());
    j["im"] = rational_to_json(v.im());
    return j;
}

GaussianRational gaussian_from_json(const Json& j) {
    if (j.is_object()) {
        mpq_class re = j.contains("re") ? rational_from_json(j.at("re")) : mpq_class(0);
        mpq_class im = j.contains("im") ? rational_from_json(j.at("im")) : mpq_class(0);
        return {std::move(re), std::move(im)};
    }
    return GaussianRational(rational_from_json(j));
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();

    std::vector<const Monomial*> order;
    order.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) order.push_back(&m);
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    std::sort(order.begin(), order.end(),
              [&](const Monomial* a, const Monomial* b) { return grevlex.less(*b, *a); });

    for (const Monomial* m : order) {
        const GaussianRational& c = p.terms().at(*m);
        Json term = Json::object();
        term["exps"] = m->exps;
        term["re"] = rational_to_json(c.re());
        term["im"] = rational_to_json(c.im());
        terms.push_back(std::move(term));
    }
    Json j = Json::object();
    j["nvars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const Json& j, std::size_t nvars_hint) {
    if (j.is_string()) {
        if (nvars_hint == 0) bad("polynomial string needs a variable count from context");
        return parse_poly(j.get<std::string>(), nvars_hint);
    }
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        bad("polynomial object needs nvars and terms");
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    if (nvars_hint != 0 && nvars != nvars_hint) bad("polynomial nvars differs from context");
    MultiPoly p(nvars);
    for (const Json& t : j.at("terms")) {
        const auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
        if (exps.size() != nvars) bad("term exps length != nvars");
        p.add_term(Monomial(exps), gaussian_from_json(t));
    }
    return p;
}

Json certificate_to_json(const MembershipCertificate& cert) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < cert.B.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t jx = 0; jx < cert.B.dim(); ++jx)
            row.push_back(poly_to_json(cert.B.at(i, jx)));
        rows.push_back(std::move(row));
    }
    Json j = Json::object();
    j["alpha"] = cert.alpha;
    j["B"] = std::move(rows);
    return j;
}

MembershipCertificate certificate_from_json(const Json& j, std::size_t nvars) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("B"))
        bad("certificate needs alpha and B");
    MembershipCertificate cert{j.at("alpha").get<std::vector<std::uint32_t>>(),
                               PolyMatrix(nvars, nvars)};
    const Json& rows = j.at("B");
    if (cert.alpha.size() != nvars || rows.size() != nvars)
        bad("certificate dimensions must match the variable count");
    for (std::size_t i = 0; i < nvars; ++i) {
        if (rows[i].size() != nvars) bad("certificate B must be square");
        for (std::size_t jx = 0; jx < nvars; ++jx)
            cert.B.at(i, jx) = poly_from_json(rows[i][jx], nvars);
    }
    return cert;
}

Json invariant_spec_to_json(const InvariantPolySpec& spec) {
    Json terms = Json::array();
    for (const auto& t : spec.terms()) {
        Json gens = Json::array();
        for (auto [g, p] : t.gens) gens.push_back(Json::array({g, p}));
        Json term = Json::object();
        term["gens"] = std::move(gens);
        term["coeff"] = rational_to_json(t.coeff.re());
        terms.push_back(std::move(term));
    }
    Json j = Json::object();
    j["basis"] = spec.basis() == InvariantPolySpec::Basis::trace_powers ? "trace" : "chern";
    j["degree"] = spec.degree();
    j["terms"] = std::move(terms);
    return j;
}

InvariantPolySpec invariant_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("degree") || !j.contains("terms"))
        bad("invariant spec needs basis, degree, terms");
    const std::string basis_name = j.at("basis").get<std::string>();
    InvariantPolySpec::Basis basis;
    if (basis_name == "trace")
        basis = InvariantPolySpec::Basis::trace_powers;
    else if (basis_name == "chern")
        basis = InvariantPolySpec::Basis::chern_generators;
    else
        bad("basis must be \"trace\" or \"chern\"");

    std::vector<InvariantPolySpec::Term> terms;
    for (const Json& t : j.at("terms")) {
        InvariantPolySpec::Term term;
        term.coeff = GaussianRational(rational_from_json(t.at("coeff")));
        for (const Json& g : t.at("gens"))
            term.gens.emplace_back(g.at(0).get<unsigned>(), g.at(1).get<unsigned>());
        terms.push_back(std::move(term));
    }
    return {basis, j.at("degree").get<unsigned>(), std::move(terms)};
}

ResidueJob residue_job_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("f"))
        bad("residue job needs h and f");
    const Json& f = j.at("f");
    if (!f.is_array() || f.empty()) bad("f must be a nonempty array");
    const std::size_t nvars = f.size();
    ResidueJob job{{poly_from_json(j.at("h"), nvars), {}}, std::nullopt};
    for (const Json& fi : f) job.problem.f.push_back(poly_from_json(fi, nvars));
    job.problem.check();
    if (j.contains("certificate") && !j.at("certificate").is_null())
        job.certificate = certificate_from_json(j.at("certificate"), nvars);
    return job;
}

FieldWithZeros field_from_json(const Json& j) {
    if (j.is_object() && j.contains("A")) {
        const Json& rows = j.at("A");
        const std::size_t dim = rows.size();
        if (dim < 2) bad("A must be at least 2x2");
        std::vector<std::vector<GaussianRational>> a;
        for (const Json& row : rows) {
            if (row.size() != dim) bad("A must be square");
            std::vector<GaussianRational> r;
            for (const Json& v : row) r.push_back(gaussian_from_json(v));
            a.push_back(std::move(r));
        }
        ProjectiveVectorField v(static_cast<unsigned>(dim - 1), std::move(a));
        if (v.is_diagonal()) return FieldWithZeros::from_diagonal(v);
        // The Jordan field is the other automatic case.
        const ProjectiveVectorField jordan = ProjectiveVectorField::jordan(v.n);
        if (v.A == jordan.A) return FieldWithZeros::from_max_degenerate(v.n);
        bad("automatic zero enumeration covers diagonal-distinct and the Jordan matrix only; "
            "declare chart_fields with zeros instead");
    }
    if (j.is_object() && j.contains("chart_fields")) {
        const Json& charts = j.at("chart_fields");
        if (!charts.is_array() || charts.empty()) bad("chart_fields must be a nonempty array");
        FieldWithZeros out{0, {}};
        for (const Json& cj : charts) {
            const unsigned chart = cj.at("chart").get<unsigned>();
            const Json& comps = cj.at("components");
            const std::size_t n = comps.size();
            if (out.n == 0)
                out.n = static_cast<unsigned>(n);
            else if (out.n != n)
                bad("chart fields disagree on dimension");
            ChartField field{chart, {}};
            for (const Json& c : comps) field.components.push_back(poly_from_json(c, n));
            const PolyMatrix jac = linearization(field);
            std::vector<ZeroPoint> zeros;
            for (const Json& zj : cj.at("zeros")) {
                if (zj.size() != n) bad("zero coordinate length != n");
                ZeroPoint p{chart, {}, ZeroPoint::Kind::degenerate};
                for (const Json& v : zj) p.coords.push_back(gaussian_from_json(v));
                const GaussianRational jdet =
                    det(PolyMatrix::constant(jac.evaluate(p.coords), 1)).constant_term();
                if (!jdet.is_zero()) p.kind = ZeroPoint::Kind::nondegenerate;
                zeros.push_back(std::move(p));
            }
            out.charts.emplace_back(std::move(field), std::move(zeros));
        }
        return out;
    }
    bad("field needs either A or chart_fields");
}

}  // namespace resloc
