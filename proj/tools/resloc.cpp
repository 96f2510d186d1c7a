// resloc: exact Grothendieck residues and Futaki-Morita invariants on CP^n,
// with a numerical Bochner-Martinelli cross-check.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "resloc/bm_oracle.hpp"
#include "resloc/cpn.hpp"
#include "resloc/errors.hpp"
#include "resloc/json_io.hpp"
#include "resloc/parse.hpp"
#include "resloc/verify.hpp"

namespace {

using resloc::Json;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw resloc::Error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

unsigned max_exponent_default() {
    if (const char* env = std::getenv("RESLOC_MAX_EXP")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 64;
}

Json value_json(const resloc::GaussianRational& v) {
    Json j = Json::object();
    j["re"] = resloc::rational_to_json(v.re());
    j["im"] = resloc::rational_to_json(v.im());
    return j;
}

void emit(const Json& j, bool table) {
    if (!table) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

resloc::InvariantPolySpec resolve_phi(const std::string& text, unsigned n) {
    if (text.size() > 5 && text.substr(text.size() - 5) == ".json")
        return resloc::invariant_spec_from_json(load_json_file(text));
    return resloc::InvariantPolySpec::from_shortcut(text, n);
}

std::vector<resloc::GaussianRational> parse_diag(const std::string& text) {
    std::vector<resloc::GaussianRational> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        mpq_class q(token);
        q.canonicalize();
        out.emplace_back(std::move(q));
    }
    return out;
}

struct FieldArgs {
    unsigned maxdeg = 0;
    std::string diag;
    std::string input;

    resloc::FieldWithZeros resolve() const {
        if (maxdeg > 0) return resloc::FieldWithZeros::from_max_degenerate(maxdeg);
        if (!diag.empty())
            return resloc::FieldWithZeros::from_diagonal(
                resloc::ProjectiveVectorField::diagonal(parse_diag(diag)));
        if (!input.empty()) return resloc::field_from_json(load_json_file(input));
        throw resloc::Error("need one of --maxdeg, --diag, --input");
    }
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--maxdeg", args.maxdeg,
                    "use the maximally degenerate field on CP^n for this n");
    cmd->add_option("--diag", args.diag,
                    "comma-separated diagonal of a traceless matrix, e.g. 0,1,-1");
    cmd->add_option("--input", args.input, "field JSON ({\"A\":...} or {\"chart_fields\":...})");
}

Json fm_report(const resloc::FieldWithZeros& field, const resloc::InvariantPolySpec& phi,
               const resloc::ResidueOptions& options, bool with_proposition) {
    const resloc::FutakiMoritaResult r = resloc::futaki_morita(field, phi, options);
    Json j = Json::object();
    j["f_phi"] = r.f_phi.str();
    j["residue_sum"] = r.residue_sum.str();
    j["n"] = field.n;
    j["k"] = r.k;
    j["phi"] = resloc::invariant_spec_to_json(phi);
    Json zeros = Json::array();
    for (const auto& c : r.per_zero) {
        Json z = Json::object();
        z["chart"] = c.chart;
        Json point = Json::array();
        for (const auto& v : c.point) point.push_back(v.str());
        z["point"] = std::move(point);
        z["alpha"] = c.alpha;
        z["contribution"] = c.value.str();
        zeros.push_back(std::move(z));
    }
    j["per_zero"] = std::move(zeros);
    if (with_proposition) {
        const resloc::GaussianRational check = resloc::proposition_formula(field.n, phi);
        j["proposition_formula"] = check.str();
        j["proposition_matches"] = check == r.f_phi;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact residue localization of Futaki-Morita integrals"};
    // --h is part of the documented surface, so help lives on --help only.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    bool table = false;

    // residue
    auto* residue_cmd = app.add_subcommand("residue", "Grothendieck residue at the origin");
    residue_cmd->set_help_flag("--help", "print help");
    std::string residue_input, residue_h, residue_cert;
    std::vector<std::string> residue_f;
    unsigned max_exp = max_exponent_default();
    residue_cmd->add_option("--input", residue_input, "problem JSON with h, f, certificate?");
    residue_cmd->add_option("--h", residue_h, "numerator polynomial (text grammar)");
    residue_cmd->add_option("--f", residue_f, "denominator component (repeat n times)");
    residue_cmd->add_option("--certificate", residue_cert, "certificate JSON to bypass synthesis");
    residue_cmd->add_option("--max-exp", max_exp, "certificate exponent cap");

    // fm / futaki / chern share field selection
    auto* fm_cmd = app.add_subcommand("fm", "Futaki-Morita integral f_phi(X)");
    fm_cmd->set_help_flag("--help", "print help");
    FieldArgs fm_field;
    std::string fm_phi = "det";
    add_field_options(fm_cmd, fm_field);
    fm_cmd->add_option("--phi", fm_phi, "invariant: det, tr^m, tr(A^m), tr*det, c1^m, or JSON file");
    fm_cmd->add_option("--max-exp", max_exp, "certificate exponent cap");

    auto* futaki_cmd = app.add_subcommand("futaki", "Futaki invariant, both trace conventions");
    futaki_cmd->set_help_flag("--help", "print help");
    FieldArgs futaki_field;
    add_field_options(futaki_cmd, futaki_field);
    futaki_cmd->add_option("--max-exp", max_exp, "certificate exponent cap");

    auto* chern_cmd = app.add_subcommand("chern", "Chern number for a chern-basis invariant");
    chern_cmd->set_help_flag("--help", "print help");
    FieldArgs chern_field;
    std::string chern_phi;
    add_field_options(chern_cmd, chern_field);
    chern_cmd->add_option("--phi", chern_phi, "chern-basis invariant (default c1^n)");
    chern_cmd->add_option("--max-exp", max_exp, "certificate exponent cap");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "numeric Bochner-Martinelli residue");
    oracle_cmd->set_help_flag("--help", "print help");
    std::string oracle_h = "1";
    std::vector<std::string> oracle_f;
    double oracle_radius = 0.5;
    int oracle_nodes = 64;
    oracle_cmd->add_option("--h", oracle_h, "numerator polynomial");
    oracle_cmd->add_option("--f", oracle_f, "denominator component (repeat; n <= 2)")->required();
    oracle_cmd->add_option("--radius", oracle_radius, "sphere radius");
    oracle_cmd->add_option("--nodes", oracle_nodes, "quadrature nodes per angle");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the reproduction suite");
    verify_cmd->set_help_flag("--help", "print help");
    bool with_oracle = false;
    unsigned n_max = 5;
    unsigned seed = 20240801;
    verify_cmd->add_flag("--with-oracle", with_oracle, "include the numeric oracle checks");
    verify_cmd->add_option("--n-max", n_max, "largest CP^n dimension (default 5)");
    verify_cmd->add_option("--seed", seed, "property-suite generator seed");

    for (CLI::App* cmd : {residue_cmd, fm_cmd, futaki_cmd, chern_cmd, oracle_cmd})
        cmd->add_flag("--table", table, "human-readable output instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        const resloc::ResidueOptions options{max_exp, resloc::MonomialOrder::grevlex()};

        if (*residue_cmd) {
            resloc::ResidueJob job{{resloc::MultiPoly(0), {}}, std::nullopt};
            if (!residue_input.empty()) {
                job = resloc::residue_job_from_json(load_json_file(residue_input));
            } else {
                if (residue_f.empty()) throw resloc::Error("need --input or --h/--f");
                const std::size_t n = residue_f.size();
                job.problem.h = resloc::parse_poly(residue_h.empty() ? "1" : residue_h, n);
                for (const auto& text : residue_f)
                    job.problem.f.push_back(resloc::parse_poly(text, n));
                job.problem.check();
            }
            if (!residue_cert.empty())
                job.certificate = resloc::certificate_from_json(load_json_file(residue_cert),
                                                                job.problem.nvars());

            resloc::ResidueResult result{};
            if (job.certificate) {
                result = {resloc::residue_via_certificate(job.problem, *job.certificate),
                          resloc::ResidueMethod::certificate, job.certificate->alpha};
            } else {
                result = resloc::residue(job.problem, options);
            }
            Json out = Json::object();
            out["residue"] = value_json(result.value);
            out["method"] = resloc::to_string(result.method);
            out["alpha"] = result.alpha;
            out["value"] = result.value.str();
            emit(out, table);
        } else if (*fm_cmd) {
            const resloc::FieldWithZeros field = fm_field.resolve();
            const auto phi = resolve_phi(fm_phi, field.n);
            emit(fm_report(field, phi, options, fm_field.maxdeg > 0), table);
        } else if (*futaki_cmd) {
            const resloc::FieldWithZeros field = futaki_field.resolve();
            const resloc::FutakiResult r = resloc::futaki(field, options);
            Json out = Json::object();
            out["n"] = field.n;
            out["trace_of_power"] = r.trace_of_power.str();
            out["power_of_trace"] = r.power_of_trace.str();
            out["note"] = "phi = Tr(A^{n+1}) and phi = [Tr A]^{n+1} respectively";
            emit(out, table);
        } else if (*chern_cmd) {
            const resloc::FieldWithZeros field = chern_field.resolve();
            const auto phi = chern_phi.empty()
                                 ? resloc::InvariantPolySpec::c1_power(field.n)
                                 : resolve_phi(chern_phi, field.n);
            emit(fm_report(field, phi, options, chern_field.maxdeg > 0), table);
        } else if (*oracle_cmd) {
            const std::size_t n = oracle_f.size();
            resloc::ResidueProblem prob{resloc::parse_poly(oracle_h, n), {}};
            for (const auto& text : oracle_f) prob.f.push_back(resloc::parse_poly(text, n));
            prob.check();
            const resloc::QuadratureSpec fine{oracle_radius, oracle_nodes, 0.0};
            const resloc::QuadratureSpec coarse{oracle_radius, std::max(2, oracle_nodes / 2), 0.0};
            const auto value = resloc::residue_numeric(prob, fine);
            const auto rough = resloc::residue_numeric(prob, coarse);
            Json out = Json::object();
            out["value_re"] = value.real();
            out["value_im"] = value.imag();
            out["est_error"] = std::abs(value - rough);
            emit(out, table);
        } else if (*verify_cmd) {
            const resloc::VerifyOptions vopts{n_max, with_oracle, seed};
            const bool ok = resloc::run_verification(vopts, [](const resloc::VerifyReport& r) {
                std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ": " << r.name;
                if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
            });
            return ok ? 0 : 4;
        }
        return 0;
    } catch (const resloc::NotIsolatedOrCapTooLow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resloc::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resloc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
