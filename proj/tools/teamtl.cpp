// Command-line front end: path checking, model checking, reduction
// generators and the differential self-test.

#include "teamtl/check/oracles.hpp"
#include "teamtl/check/selftest.hpp"
#include "teamtl/error.hpp"
#include "teamtl/eval_team_ctl.hpp"
#include "teamtl/eval_team_ltl.hpp"
#include "teamtl/io.hpp"
#include "teamtl/naive_oracle.hpp"
#include "teamtl/parser.hpp"
#include "teamtl/qbf.hpp"
#include "teamtl/tmc_splitfree.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using namespace teamtl;

enum Exit : int { kSat = 0, kUnsat = 1, kInput = 2, kResource = 3, kSelftest = 4 };

int verdict(bool v) {
    std::cout << (v ? "SAT" : "UNSAT") << '\n';
    return v ? kSat : kUnsat;
}

std::string formula_text(const std::string& inline_text, const std::string& file) {
    if (!file.empty()) return read_file(file);
    if (inline_text.empty()) throw InputError("no formula given (positional or --formula-file)");
    return inline_text;
}

struct PathArgs {
    std::string team_file, formula, formula_file, strategy = "auto";
    bool explain = false, oracle = false;
    std::size_t max_team = 16;
};

int check_path(const PathArgs& a) {
    const TeamEncoding team = parse_team(read_file(a.team_file));
    const LtlFormula f = parse_ltl(formula_text(a.formula, a.formula_file));
    TeamCheckOptions opts;
    opts.max_team = a.max_team;
    if (a.strategy == "disjoint") opts.strategy = SplitStrategy::DisjointOnly;
    else if (a.strategy == "covers") opts.strategy = SplitStrategy::Covers;
    if (a.explain) {
        const std::string tree = explain_team(team, f, opts);
        std::cout << tree;
        return tree.rfind("SAT", 0) == 0 ? kSat : kUnsat;
    }
    const bool v = check_team(team, f, opts);
    if (a.oracle) {
        const bool o = naive_oracle(team, f);
        std::cout << "check_team:   " << (v ? "SAT" : "UNSAT") << '\n'
                  << "naive_oracle: " << (o ? "SAT" : "UNSAT") << '\n';
        if (v != o) {
            std::cerr << "verdict mismatch between evaluator and oracle\n";
            return kSelftest;
        }
        return v ? kSat : kUnsat;
    }
    return verdict(v);
}

struct ModelArgs {
    std::string kripke_file, formula, formula_file, mode = "ctl", team;
    std::size_t max_team = 6, max_worlds = 12, max_subsets = std::size_t{1} << 20;
    bool until_from_one = false;
};

int check_model(const ModelArgs& a) {
    const KripkeStructure k(parse_kripke(read_file(a.kripke_file)));
    const std::string text = formula_text(a.formula, a.formula_file);
    if (a.mode == "ltl-splitfree") return verdict(check_model_splitfree(k, parse_ltl(text), a.max_subsets));
    if (a.mode == "ltl-enumerate") {
        TeamCheckOptions opts;
        opts.max_team = a.max_team;
        return verdict(check_team(enumerate_traces(k), parse_ltl(text), opts));
    }
    if (a.team.empty()) throw InputError("mode ctl needs --team");
    CtlCheckOptions opts;
    opts.max_team = a.max_team;
    opts.max_worlds = a.max_worlds;
    opts.max_states = a.max_subsets;
    opts.until_from_one = a.until_from_one;
    return verdict(mc_ctl(k, parse_multiteam(k, a.team), parse_ctl(text), opts));
}

struct GenArgs {
    std::string kind, input, out;
    bool check = false;
};

QbfInstance load_qbf(const std::string& path) {
    NormalizeReport report;
    QbfInstance q = normalize_qbf(parse_qbf(read_file(path)), &report);
    if (report.padded_clauses)
        std::cerr << "note: padded " << report.padded_clauses
                  << " clause(s) to width 3 by repeating a literal\n";
    if (report.dummies)
        std::cerr << "note: inserted " << report.dummies << " dummy variable(s) for alternation\n";
    return q;
}

int report_reduction(bool expected, bool actual, const char* yes, const char* no) {
    if (expected != actual) {
        std::cout << "REDUCTION MISMATCH (expected " << (expected ? yes : no) << ")\n";
        return kSelftest;
    }
    std::cout << "REDUCTION OK (" << (expected ? yes : no) << ")\n";
    return kSat;
}

int gen(const GenArgs& a) {
    if (a.kind == "qbf-tpc") {
        const QbfInstance q = load_qbf(a.input);
        const auto [team, f] = reduce_to_tpc(q);
        if (!a.out.empty()) {
            write_file(a.out + ".team.json", write_team(team));
            write_file(a.out + ".ltl", render(f) + "\n");
        }
        TeamCheckOptions opts;
        opts.max_team = kMaxTeamBits;
        return a.check ? report_reduction(eval_qbf(q), check_team(team, f, opts), "valid", "invalid")
                       : kSat;
    }
    if (a.kind == "qbf-ctl") {
        const QbfInstance q = load_qbf(a.input);
        const auto red = reduce_to_tmc_ctl(q);
        if (!a.out.empty()) {
            write_file(a.out + ".kripke.json", write_kripke(red.structure));
            write_file(a.out + ".ctl", render(red.formula) + "\n");
            std::string members;
            for (const auto& e : red.team.entries())
                members += (members.empty() ? "" : ",") + red.structure.name(e.world);
            write_file(a.out + ".team", members + "\n");
        }
        CtlCheckOptions opts;
        opts.max_team = red.team.size();
        opts.max_worlds = red.structure.size();
        return a.check ? report_reduction(eval_qbf(q),
                                          mc_ctl(red.structure, red.team, red.formula, opts),
                                          "valid", "invalid")
                       : kSat;
    }
    if (a.kind == "plsim") {
        const Formula psi = parse_ltl(a.input);
        const auto [team, f] = reduce_plsim_to_tpc(psi);
        if (!a.out.empty()) {
            write_file(a.out + ".team.json", write_team(team));
            write_file(a.out + ".ltl", render(f) + "\n");
        }
        TeamCheckOptions opts;
        opts.max_team = kMaxTeamBits;
        return a.check ? report_reduction(check::brute_force_plsim(psi), check_team(team, f, opts),
                                          "satisfiable", "unsatisfiable")
                       : kSat;
    }
    throw InputError("unknown generator '" + a.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Team semantics model checker for LTL and CTL"};
    app.require_subcommand(1);

    PathArgs path;
    auto* cp = app.add_subcommand("check-path", "Decide T |= phi for a finite team of lasso traces");
    cp->add_option("team", path.team_file, "Team file")->required()->check(CLI::ExistingFile);
    cp->add_option("formula", path.formula, "Formula text");
    cp->add_option("--formula-file", path.formula_file, "Read the formula from a file");
    cp->add_flag("--explain", path.explain, "Print the split/witness tree");
    cp->add_flag("--oracle", path.oracle, "Cross-check with the naive oracle");
    cp->add_option("--strategy", path.strategy, "Split enumeration: auto, disjoint, covers")
        ->check(CLI::IsMember({"auto", "disjoint", "covers"}));
    cp->add_option("--max-team", path.max_team, "Largest team for split enumeration")
        ->envname("TEAMTL_MAX_TEAM");

    ModelArgs model;
    auto* cm = app.add_subcommand("check-model", "Model checking over a Kripke structure");
    cm->add_option("kripke", model.kripke_file, "Kripke file")->required()->check(CLI::ExistingFile);
    cm->add_option("formula", model.formula, "Formula text");
    cm->add_option("--formula-file", model.formula_file, "Read the formula from a file");
    cm->add_option("--mode", model.mode, "ltl-splitfree, ltl-enumerate or ctl")
        ->check(CLI::IsMember({"ltl-splitfree", "ltl-enumerate", "ctl"}));
    cm->add_option("--team", model.team, "Multiteam for ctl mode, e.g. r,a,a");
    cm->add_option("--max-team", model.max_team, "Team size cap")->envname("TEAMTL_MAX_TEAM");
    cm->add_option("--max-worlds", model.max_worlds, "Structure size cap for ctl mode")
        ->envname("TEAMTL_MAX_WORLDS");
    cm->add_option("--max-subsets", model.max_subsets, "Cap on explored subsets / multisets")
        ->envname("TEAMTL_MAX_SUBSETS");
    cm->add_flag("--until-from-one", model.until_from_one,
                 "Require the until invariant only from step 1 (ctl mode)");

    GenArgs g;
    auto* cg = app.add_subcommand("gen", "Generate a reduction instance");
    cg->add_option("kind", g.kind, "qbf-tpc, qbf-ctl or plsim")
        ->required()
        ->check(CLI::IsMember({"qbf-tpc", "qbf-ctl", "plsim"}));
    cg->add_option("input", g.input, "QBF file, or formula text for plsim")->required();
    cg->add_option("--out", g.out, "Output path prefix");
    cg->add_flag("--check", g.check, "Evaluate the instance and compare with the source problem");

    check::SelftestOptions st;
    std::string fixtures;
    auto* cs = app.add_subcommand("selftest", "Run the differential suites and pinned fixtures");
    cs->add_option("--seed", st.seed, "Random seed")->envname("TEAMTL_SEED");
    cs->add_option("--count", st.count, "Instances per suite")->envname("TEAMTL_COUNT");
    cs->add_option("--fixtures", fixtures, "Fixture directory (with manifest.json)")
        ->envname("TEAMTL_FIXTURES");

    std::string dot_file;
    auto* cd = app.add_subcommand("dot", "Print a Kripke structure as Graphviz");
    cd->add_option("kripke", dot_file, "Kripke file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*cp) return check_path(path);
        if (*cm) return check_model(model);
        if (*cg) return gen(g);
        if (*cd) {
            std::cout << to_dot(KripkeStructure(parse_kripke(read_file(dot_file))));
            return kSat;
        }
        if (*cs) {
            if (!fixtures.empty()) st.fixtures = fixtures;
            const auto report = check::run_selftest(st);
            for (const auto& f : report.failures) std::cerr << "MISMATCH " << f << '\n';
            if (!report.ok()) {
                std::cout << "FAIL: " << report.instances << " instances, " << report.mismatches
                          << " mismatches (reproduce with --seed " << st.seed << " --count "
                          << st.count << ")\n";
                return kSelftest;
            }
            std::cout << "OK: " << report.instances << " instances, 0 mismatches\n";
            return kSat;
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kSelftest;
    }
    return kInput;
}
