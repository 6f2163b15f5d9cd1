// Command-line front end: builds or ingests a representation, runs the
// checks, and emits a machine-readable JSON report (or a text summary).
//
// Exit codes: 0 = pass, 1 = check failed / witness not found, 2 = input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "invjac/errors.hpp"
#include "invjac/jacmod.hpp"
#include "invjac/modanalysis.hpp"
#include "invjac/poly.hpp"
#include "invjac/repcore.hpp"
#include "invjac/repspec_json.hpp"

using nlohmann::ordered_json;
using namespace invjac;

namespace {

struct CliInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RepOptions {
    std::string sl2_rep;
    int sln = 0;
    std::string rep_file;

    std::string description() const {
        if (!sl2_rep.empty()) return "sl2-rep " + sl2_rep;
        if (sln > 0) return "sln " + std::to_string(sln);
        return "file " + rep_file;
    }
};

void add_rep_options(CLI::App* sub, RepOptions& opts) {
    auto* a = sub->add_option("--sl2-rep", opts.sl2_rep,
                              "direct sum of sl2 irreducibles, e.g. 1,1 or 3");
    auto* b = sub->add_option("--sln", opts.sln, "standard representation of sl_k");
    auto* c = sub->add_option("--rep", opts.rep_file, "rep spec JSON file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

RepSpec build_rep(const RepOptions& opts) {
    RepSpec rep;
    if (!opts.sl2_rep.empty()) {
        std::vector<RepSpec> parts;
        std::stringstream ss(opts.sl2_rep);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                const int m = std::stoi(item);
                if (m < 0) throw CliInputError("--sl2-rep: weights must be >= 0");
                parts.push_back(sl2_irrep(m));
            } catch (const std::logic_error&) {
                throw CliInputError("--sl2-rep: malformed weight list '" +
                                    opts.sl2_rep + "'");
            }
        }
        if (parts.empty()) throw CliInputError("--sl2-rep: empty weight list");
        rep = direct_sum(parts);
    } else if (opts.sln > 0) {
        if (opts.sln < 2) throw CliInputError("--sln: need k >= 2");
        rep = sln_standard(opts.sln);
    } else if (!opts.rep_file.empty()) {
        try {
            rep = load_repspec_file(opts.rep_file);
        } catch (const nlohmann::json::exception& e) {
            throw CliInputError(std::string("rep spec: ") + e.what());
        } catch (const Error& e) {
            throw CliInputError(e.what());
        }
    } else {
        throw CliInputError("one of --sl2-rep, --sln, --rep is required");
    }
    const auto violations = validate(rep);
    if (!violations.empty()) {
        std::string msg = "rep spec validation failed:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw CliInputError(msg);
    }
    return rep;
}

// Inline string or @file indirection.
std::string read_poly_text(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw CliInputError("cannot open polynomial file: " + arg.substr(1));
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

ordered_json weight_set_json(const std::set<WeightVector>& ws) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : ws) arr.push_back(weight_to_string(w));
    return arr;
}

class Reporter {
public:
    Reporter(const std::string& command, bool text_format)
        : text_(text_format), start_(std::chrono::steady_clock::now()) {
        report_["schema_version"] = 1;
        report_["command"] = command;
        report_["inputs"] = ordered_json::object();
        report_["verdicts"] = ordered_json::object();
    }

    ordered_json& inputs() { return report_["inputs"]; }
    ordered_json& verdicts() { return report_["verdicts"]; }
    ordered_json& report() { return report_; }

    void add_text_line(const std::string& line) { text_lines_.push_back(line); }

    int finish(int exit_code) {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        report_["exit_code"] = exit_code;
        report_["timing_ms"] =
            std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() /
            1000.0;
        if (text_) {
            for (const auto& line : text_lines_) std::cout << line << "\n";
            std::cout << (exit_code == 0 ? "PASS" : "FAIL") << "\n";
        } else {
            std::cout << report_.dump(2) << std::endl;
        }
        return exit_code;
    }

private:
    bool text_;
    ordered_json report_;
    std::vector<std::string> text_lines_;
    std::chrono::steady_clock::time_point start_;
};

int emit_input_error(const std::string& command, bool text, const std::string& message) {
    Reporter r(command, text);
    r.report()["error"] = message;
    r.add_text_line("error: " + message);
    return r.finish(2);
}

int cmd_verify_hom(const RepOptions& ro, int degree, bool text) {
    Reporter r("verify-hom", text);
    const RepSpec rep = build_rep(ro);
    r.inputs()["rep"] = ro.description();
    r.inputs()["degree"] = degree;
    const auto counterexample = check_intertwining_phi(rep, degree);
    r.verdicts()["intertwining"] = !counterexample.has_value();
    if (counterexample) {
        ordered_json w;
        w["generator"] = counterexample->generator;
        w["monomial"] = monomial_to_string(counterexample->monomial);
        w["basis_index"] = counterexample->basis_index;
        w["lhs"] = poly_to_string(counterexample->lhs);
        w["rhs"] = poly_to_string(counterexample->rhs);
        r.report()["witnesses"] = w;
        r.add_text_line("counterexample at generator " + counterexample->generator);
    } else {
        r.add_text_line("intertwining holds exhaustively at degree " +
                        std::to_string(degree));
    }
    return r.finish(counterexample ? 1 : 0);
}

int cmd_invariants(const RepOptions& ro, int degree, bool text) {
    Reporter r("invariants", text);
    const RepSpec rep = build_rep(ro);
    r.inputs()["rep"] = ro.description();
    r.inputs()["degree"] = degree;
    const Subspace inv = invariants(rep, degree);
    const GradedPiece piece = monomial_basis(rep.n, degree);
    r.verdicts()["dimension"] = inv.dim();
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < inv.dim(); ++i) {
        const std::string s = poly_to_string(from_coordinates(inv.basis_vector(i), piece));
        basis.push_back(s);
        r.add_text_line("invariant: " + s);
    }
    r.report()["basis"] = std::move(basis);
    r.add_text_line("dimension " + std::to_string(inv.dim()));
    return r.finish(0);
}

int cmd_yau(const RepOptions& ro, const std::string& poly_arg, bool text) {
    Reporter r("yau", text);
    const RepSpec rep = build_rep(ro);
    r.inputs()["rep"] = ro.description();
    const Poly f = parse_poly(read_poly_text(poly_arg), rep.n);
    r.inputs()["poly"] = poly_to_string(f);
    const YauReport report = yau_check(rep, f);
    r.verdicts()["f_degree"] = report.f_degree;
    r.verdicts()["jacobian_invariant"] = report.jacobian_invariant;
    if (!report.jacobian_invariant) {
        ordered_json w;
        w["generator"] = report.invariance_witness->generator;
        w["element"] = poly_to_string(report.invariance_witness->element);
        r.report()["witnesses"] = w;
        r.add_text_line("J(f) is not invariant (generator " +
                        report.invariance_witness->generator + ")");
        return r.finish(1);
    }
    r.verdicts()["j_highest_weights"] = weight_set_json(report.j_highest_weights);
    r.verdicts()["a1_highest_weights"] = weight_set_json(report.a1_highest_weights);
    r.verdicts()["subset_holds"] = report.subset_holds;
    r.verdicts()["kempf_witness_found"] = report.kempf_witness_found;
    if (report.quotient_hom) {
        r.verdicts()["quotient_hom"] = *report.quotient_hom;
        r.verdicts()["quotient_kernel_dim"] = *report.quotient_kernel_dim;
    }
    r.add_text_line(std::string("highest-weight containment: ") +
                    (report.subset_holds ? "holds" : "fails"));
    return r.finish(report.subset_holds ? 0 : 1);
}

int cmd_kempf(const RepOptions& ro, const std::string& poly_arg, bool text) {
    Reporter r("kempf", text);
    const RepSpec rep = build_rep(ro);
    r.inputs()["rep"] = ro.description();
    const Poly f = parse_poly(read_poly_text(poly_arg), rep.n);
    r.inputs()["poly"] = poly_to_string(f);
    const auto witness = kempf_witness(rep, f);
    r.verdicts()["found"] = witness.has_value();
    if (!witness) {
        r.add_text_line("no invariant witness found within the search budget");
        return r.finish(1);
    }
    r.report()["witness"] = poly_to_string(*witness);
    r.add_text_line("witness: " + poly_to_string(*witness));
    return r.finish(0);
}

int cmd_decompose(const RepOptions& ro, int degree, const std::string& jac_poly,
                  bool have_degree, bool text) {
    Reporter r("decompose", text);
    const RepSpec rep = build_rep(ro);
    r.inputs()["rep"] = ro.description();
    Subspace subject = Subspace::zero(Ambient::abstract(0));
    if (have_degree) {
        r.inputs()["degree"] = degree;
        subject = Subspace::full(Ambient::of_piece(monomial_basis(rep.n, degree)));
    } else {
        const Poly f = parse_poly(read_poly_text(jac_poly), rep.n);
        r.inputs()["jacobian_of"] = poly_to_string(f);
        subject = jacobian_subspace(f);
    }
    const DecompositionReport report = decompose(rep, subject);
    r.verdicts()["total_dim"] = report.total_dim;
    r.verdicts()["highest_weight_set"] = weight_set_json(report.highest_weight_set);
    ordered_json summands = ordered_json::array();
    const GradedPiece piece = monomial_basis(subject.ambient().n, subject.ambient().d);
    for (const auto& s : report.summands) {
        ordered_json sj;
        sj["highest_weight"] = weight_to_string(s.highest_weight);
        sj["hwv"] = poly_to_string(from_coordinates(s.hwv, piece));
        sj["generated_dim"] = s.generated_dim;
        summands.push_back(std::move(sj));
        r.add_text_line("summand " + weight_to_string(s.highest_weight) + " dim " +
                        std::to_string(s.generated_dim));
    }
    r.report()["summands"] = std::move(summands);
    return r.finish(0);
}

int cmd_fuzz(const FuzzOptions& options, bool text) {
    Reporter r("fuzz", text);
    r.inputs()["seed"] = options.seed;
    r.inputs()["trials"] = options.trials;
    r.inputs()["max_m"] = options.max_m;
    r.inputs()["max_d"] = options.max_d;
    r.inputs()["corrupt_action"] = options.corrupt_action;
    const FuzzSummary summary = fuzz_harness(options);
    r.verdicts()["checks_run"] = summary.checks_run;
    r.verdicts()["checks_passed"] = summary.checks_passed;
    r.verdicts()["all_passed"] = summary.all_passed();
    ordered_json trials = ordered_json::array();
    for (const auto& t : summary.trials) {
        ordered_json tj;
        tj["index"] = t.index;
        tj["rep"] = t.rep_description;
        tj["degree"] = t.degree;
        tj["invariant_dim"] = t.invariant_dim;
        tj["intertwining_pass"] = t.intertwining_pass;
        if (t.quotient_pass) tj["quotient_pass"] = *t.quotient_pass;
        if (t.yau_pass) tj["yau_pass"] = *t.yau_pass;
        if (t.kempf_pass) tj["kempf_pass"] = *t.kempf_pass;
        trials.push_back(std::move(tj));
    }
    r.report()["trials"] = std::move(trials);
    r.add_text_line(std::to_string(summary.checks_passed) + "/" +
                    std::to_string(summary.checks_run) + " checks passed");
    return r.finish(summary.all_passed() ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for the module structure on invariant Jacobians"};
    app.require_subcommand(1);
    app.fallthrough();
    bool text = false;
    std::string format = "json";
    app.add_option("--format", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    RepOptions hom_rep, inv_rep, yau_rep, kempf_rep, dec_rep;
    int hom_degree = 0, inv_degree = 0, dec_degree = 0;
    std::string yau_poly, kempf_poly, dec_jac;

    auto* hom = app.add_subcommand("verify-hom", "exhaustive intertwining check of phi");
    add_rep_options(hom, hom_rep);
    hom->add_option("--degree", hom_degree)->required();

    auto* inv = app.add_subcommand("invariants", "basis of invariant polynomials");
    add_rep_options(inv, inv_rep);
    inv->add_option("--degree", inv_degree)->required();

    auto* yau = app.add_subcommand("yau", "highest-weight containment check");
    add_rep_options(yau, yau_rep);
    yau->add_option("--poly", yau_poly, "inline expression or @file")->required();

    auto* kempf = app.add_subcommand("kempf", "invariant witness with equal Jacobian");
    add_rep_options(kempf, kempf_rep);
    kempf->add_option("--poly", kempf_poly, "inline expression or @file")->required();

    auto* dec = app.add_subcommand("decompose", "irreducible decomposition report");
    add_rep_options(dec, dec_rep);
    auto* dd = dec->add_option("--degree", dec_degree, "decompose all of A_d");
    auto* dj = dec->add_option("--subspace-from-jacobian", dec_jac,
                               "decompose J(f) for this polynomial");
    dd->excludes(dj);

    FuzzOptions fuzz_options;
    auto* fuzz = app.add_subcommand("fuzz", "seeded random sweep of all checks");
    fuzz->add_option("--seed", fuzz_options.seed);
    fuzz->add_option("--trials", fuzz_options.trials);
    fuzz->add_option("--max-m", fuzz_options.max_m);
    fuzz->add_option("--max-d", fuzz_options.max_d);
    fuzz->add_flag("--corrupt-action", fuzz_options.corrupt_action,
                   "negative control: corrupt one generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << std::endl;
        return 2;
    }
    text = (format == "text");

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (hom->parsed()) return cmd_verify_hom(hom_rep, hom_degree, text);
        if (inv->parsed()) return cmd_invariants(inv_rep, inv_degree, text);
        if (yau->parsed()) return cmd_yau(yau_rep, yau_poly, text);
        if (kempf->parsed()) return cmd_kempf(kempf_rep, kempf_poly, text);
        if (dec->parsed()) {
            if (dd->count() == 0 && dj->count() == 0)
                throw CliInputError(
                    "decompose: need --degree or --subspace-from-jacobian");
            return cmd_decompose(dec_rep, dec_degree, dec_jac, dd->count() > 0, text);
        }
        if (fuzz->parsed()) return cmd_fuzz(fuzz_options, text);
    } catch (const CliInputError& e) {
        return emit_input_error(command, text, e.what());
    } catch (const ParseError& e) {
        return emit_input_error(command, text, e.what());
    } catch (const DegreeError& e) {
        return emit_input_error(command, text, e.what());
    } catch (const DimensionCapError& e) {
        return emit_input_error(command, text, e.what());
    } catch (const AmbientMismatchError& e) {
        return emit_input_error(command, text, e.what());
    } catch (const std::invalid_argument& e) {
        return emit_input_error(command, text, e.what());
    } catch (const std::out_of_range& e) {
        return emit_input_error(command, text, e.what());
    } catch (const Error& e) {
        return emit_input_error(command, text, e.what());
    }
    return 2;
}
