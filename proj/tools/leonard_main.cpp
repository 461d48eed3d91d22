#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leonard/identities.hpp"
#include "leonard/io.hpp"
#include "leonard/relatives.hpp"
#include "leonard/transition.hpp"
#include "leonard/verification.hpp"

namespace {

using namespace leonard;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::optional<Vector> parse_seed(const std::string& text, const FieldSpec& field,
                                 std::size_t n) {
    if (text.empty()) return std::nullopt;
    std::vector<FieldElement> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(parse_element(item, field));
    if (entries.size() != n)
        throw ParseError("anchor seed needs " + std::to_string(n) + " entries, got " +
                         std::to_string(entries.size()));
    return Vector(std::move(entries), field);
}

int cmd_validate(const std::string& path) {
    ParameterArrayFile file = load_parameter_file(path);
    LeonardSystem sys = build_from_file(file).first;
    ValidationReport rep = validate_system(sys);
    for (const auto& c : rep.conditions)
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    std::cout << (rep.all_pass() ? "valid Leonard system" : "not a Leonard system") << ", d="
              << sys.d() << " over " << sys.field().name() << "\n";
    return rep.all_pass() ? kExitPass : kExitMathFailure;
}

int cmd_orbit(const std::string& path) {
    ParameterArrayFile file = load_parameter_file(path);
    auto [sys, pa] = build_from_file(file);
    auto seq = [](const std::vector<FieldElement>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += format_element(v[i]) + (i + 1 < v.size() ? "," : "");
        return s + ")";
    };
    for (const auto& [g, rel] : orbit(sys)) {
        ParameterArray rel_pa = parameter_array(rel);
        ParameterArray expected = transform_parameter_array(g, pa);
        std::string label = g.short_name().empty() ? "Phi" : "Phi^" + g.short_name();
        std::cout << label << ": theta=" << seq(rel_pa.theta())
                  << " theta*=" << seq(rel_pa.theta_star()) << " varphi=" << seq(rel_pa.varphi())
                  << " phi=" << seq(rel_pa.phi()) << "\n";
        if (rel_pa != expected) {
            std::cout << "MISMATCH against the closed-form relative array\n";
            return kExitMathFailure;
        }
    }
    return kExitPass;
}

int cmd_transition(const std::string& path, const std::string& from, const std::string& to,
                   const std::string& emit, const std::string& seed_text) {
    ParameterArrayFile file = load_parameter_file(path);
    LeonardSystem sys = build_from_file(file).first;
    BasisTag src = parse_tag(from);
    BasisTag tgt = parse_tag(to);

    GramForm gram = compute_gram(sys);
    AnchorVectors anchors =
        anchor_vectors(sys, parse_seed(seed_text, sys.field(), sys.d() + 1));
    TransitionContext ctx(sys, gram, anchors);

    TransitionFormula f = formula(src, tgt);
    Matrix T = evaluate(f, ctx);
    Matrix oracle = oracle_change_of_basis(ctx.basis(src), ctx.basis(tgt));
    bool ok = T == oracle;

    std::string x_note = tag_name(tgt).substr(0, tag_name(tgt).find('.'));
    if (tgt.orientation == Orientation::Reversed) x_note += ".rev";
    if (emit == "formula" || emit == "both") std::cout << format_formula(f);
    if (emit == "matrix" || emit == "both") {
        std::cout << f.equation_tag << " (X = " << x_note << ")\n";
        std::cout << format_matrix(T);
    }
    std::cout << (ok ? "verified against the change-of-basis oracle"
                     : "MISMATCH against the change-of-basis oracle")
              << "\n";
    return ok ? kExitPass : kExitMathFailure;
}

int cmd_verify(const std::string& path, const VerifyOptions& opt_in,
               const std::string& seed_text, const std::string& json_path) {
    ParameterArrayFile file = load_parameter_file(path);
    auto [sys, pa] = build_from_file(file);

    VerifyOptions opt = opt_in;
    opt.anchor_seed = parse_seed(seed_text, sys.field(), sys.d() + 1);
    VerificationReport rep = run_verification(sys, pa, opt);

    std::cout << "instance: " << rep.instance << "\n";
    for (const auto& s : rep.suites) {
        std::ostringstream line;
        line << (s.pass ? "pass" : "FAIL") << "  " << s.name << "  " << (s.checks - s.failures)
             << "/" << s.checks;
        if (!s.note.empty()) line << "  [" << s.note << "]";
        std::cout << line.str() << "\n";
        for (const auto& id : s.failed_ids) std::cout << "      failed: " << id << "\n";
    }
    std::cout << (rep.all_pass() ? "ALL SUITES PASS" : "VERIFICATION FAILED") << "  ("
              << rep.total_seconds << " s)\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw ParseError("cannot write '" + json_path + "'");
        out << report_to_json(rep) << "\n";
    }
    return rep.all_pass() ? kExitPass : kExitMathFailure;
}

int cmd_formula_table() {
    std::cout << "# Transition formula table\n\n";
    std::cout
        << "The selection rule: the source tag picks the display group (one per\n"
           "family/anchor combination), the target anchor picks the display, and X\n"
           "runs over the six families on the target's side, oriented by the target\n"
           "tag. Reversed sources reuse the forward display with X_r replaced by\n"
           "X_{d-r}. That covers all 24 x 24 ordered pairs with the 48 displays\n"
           "below, each shown with one representative X.\n\n";
    for (const auto& src : all_basis_tags()) {
        if (src.orientation != Orientation::Forward) continue;
        std::cout << "## source " << tag_name(src) << "\n\n";
        for (AnchorId anchor : {AnchorId::Xis0, AnchorId::Xisd, AnchorId::Xi0, AnchorId::Xid}) {
            bool a_side = anchor == AnchorId::Xis0 || anchor == AnchorId::Xisd;
            BasisTag rep{a_side ? BasisFamily::E : BasisFamily::Es, Orientation::Forward,
                         anchor};
            TransitionFormula f = formula(src, rep);
            std::cout << format_formula(f)
                      << "  (X ranges over the six "
                      << (a_side ? "E/tauA/etaA" : "Es/tauAs/etaAs") << " families)\n\n";
        }
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for Leonard systems, their 24 bases, "
                 "and the closed-form transition maps between them"};
    app.require_subcommand(1);

    std::string file, from, to, emit = "both", seed, json_path;
    VerifyOptions vopt;
    std::vector<std::string> suites;

    auto* validate = app.add_subcommand("validate", "construct from a parameter-array file and "
                                                    "check the Leonard-system conditions");
    validate->add_option("file", file, "parameter array JSON file")->required();

    auto* transition = app.add_subcommand(
        "transition", "evaluate one closed-form transition map and check it against the oracle");
    transition->add_option("file", file)->required();
    transition->add_option("--from", from, "source basis tag, e.g. E.fwd.xis0")->required();
    transition->add_option("--to", to, "target basis tag, e.g. tauA.rev.xisd")->required();
    transition->add_option("--emit", emit, "matrix | formula | both")
        ->check(CLI::IsMember({"matrix", "formula", "both"}));
    transition->add_option("--seed-anchors", seed, "comma-separated anchor seed vector");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("file", file)->required();
    verify->add_option("--suites", suites,
                       "subset of: axioms bases split d4 scalars reductions transitions")
        ->delimiter(',');
    verify->add_flag("--relatives", vopt.relatives, "repeat identity suites on all 8 relatives");
    verify->add_flag("--rescale-check", vopt.rescale_check,
                     "rerun with rescaled anchors and Gram form, require identical verdicts");
    verify->add_option("--seed-anchors", seed, "comma-separated anchor seed vector");
    verify->add_option("--json", json_path, "write machine-readable report here");

    auto* orbit_cmd = app.add_subcommand("orbit", "print the parameter arrays of all 8 relatives");
    orbit_cmd->add_option("file", file)->required();

    auto* table = app.add_subcommand("formula-table", "print all 48 transition displays");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (transition->parsed()) return cmd_transition(file, from, to, emit, seed);
        if (verify->parsed()) {
            vopt.suites = suites;
            return cmd_verify(file, vopt, seed, json_path);
        }
        if (orbit_cmd->parsed()) return cmd_orbit(file);
        if (table->parsed()) return cmd_formula_table();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
