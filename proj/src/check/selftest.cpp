#include "teamtl/check/selftest.hpp"

#include "teamtl/check/oracles.hpp"
#include "teamtl/check/random.hpp"
#include "teamtl/error.hpp"
#include "teamtl/eval_team_ctl.hpp"
#include "teamtl/eval_team_ltl.hpp"
#include "teamtl/io.hpp"
#include "teamtl/naive_oracle.hpp"
#include "teamtl/parser.hpp"
#include "teamtl/qbf.hpp"
#include "teamtl/tmc_splitfree.hpp"

#include <json.hpp>

namespace teamtl::check {

namespace {

class Recorder {
public:
    explicit Recorder(SelftestReport& report) : report_(report) {}

    void instance(const std::string& description, bool expected, bool actual) {
        ++report_.instances;
        for (unsigned char c : description) report_.digest = (report_.digest ^ c) * 1099511628211ULL;
        report_.digest = (report_.digest ^ (expected ? 1U : 2U)) * 1099511628211ULL;
        if (expected != actual) {
            ++report_.mismatches;
            report_.failures.push_back(description + ": expected " + (expected ? "true" : "false") +
                                       ", got " + (actual ? "true" : "false"));
        }
    }

    void failure(const std::string& description) {
        ++report_.instances;
        ++report_.mismatches;
        report_.failures.push_back(description);
    }

private:
    SelftestReport& report_;
};

std::string describe(const TeamEncoding& team) {
    std::string s = write_team(team);
    std::erase(s, '\n');
    std::erase(s, ' ');
    return s;
}

void team_suite(Rng& rng, std::size_t count, const TeamChecker& checker, Recorder& rec) {
    FormulaShape shape;
    shape.cneg = shape.boolor = shape.atoms = true;
    TeamShape teams;
    for (std::size_t i = 0; i < count; ++i) {
        const Formula f = random_formula(rng, shape);
        const TeamEncoding t = random_team(rng, teams);
        rec.instance("path " + describe(t) + " " + render(f), naive_oracle(t, f), checker(t, f));
    }
}

void ctl_suite(Rng& rng, std::size_t count, Recorder& rec) {
    FormulaShape shape;
    shape.ctl = true;
    shape.cneg = shape.boolor = true;
    shape.max_length = 4;
    for (std::size_t i = 0; i < count; ++i) {
        const KripkeStructure k = random_kripke(rng, 1 + i % 4, {"p", "q"});
        const MultiTeam team = random_multiteam(rng, k, 3);
        const Formula f = random_formula(rng, shape);
        rec.instance("ctl " + write_kripke(k) + render(f), brute_force_ctl(k, team, f),
                     mc_ctl(k, team, f));
    }
}

void splitfree_suite(Rng& rng, std::size_t count, Recorder& rec) {
    FormulaShape shape;
    shape.split = false;
    shape.cneg = shape.boolor = true;
    for (std::size_t i = 0; i < count; ++i) {
        const KripkeStructure k = random_lasso_forest(rng, 2 + i % 5, {"p", "q"});
        const Formula f = random_formula(rng, shape);
        const TeamEncoding traces = enumerate_traces(k);
        rec.instance("splitfree " + write_kripke(k) + render(f), check_team(traces, f),
                     check_model_splitfree(k, f));
    }
}

void successor_suite(Rng& rng, std::size_t count, Recorder& rec) {
    for (std::size_t i = 0; i < count; ++i) {
        const KripkeStructure k = random_kripke(rng, 2 + i % 4, {"p"});
        const MultiTeam from = random_multiteam(rng, k, 4);
        // Half of the targets are genuine successors, half arbitrary.
        MultiTeam to;
        if (i % 2 == 0) {
            const auto succ = successor_teams(k, from);
            to = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
        } else {
            std::vector<WorldId> ws(from.size());
            for (auto& w : ws) w = std::uniform_int_distribution<std::size_t>(0, k.size() - 1)(rng);
            to = MultiTeam::of(ws);
        }
        rec.instance("successor " + write_kripke(k), brute_force_successor(k, from, to),
                     is_successor_team(k, from, to));
    }
}

void fixture_suite(const std::filesystem::path& dir, const TeamChecker& checker, Recorder& rec) {
    const auto manifest = nlohmann::json::parse(strip_comments(read_file(dir / "manifest.json")));
    for (const auto& entry : manifest.at("fixtures")) {
        const std::string name = entry.at("name");
        const std::string kind = entry.at("kind");
        const bool expect = entry.at("expect");
        const std::string label = "fixture " + name;
        if (kind == "path") {
            const TeamEncoding team = parse_team(read_file(dir / entry.at("team").get<std::string>()));
            rec.instance(label, expect, checker(team, parse_ltl(entry.at("formula").get<std::string>())));
        } else if (kind == "ctl") {
            const KripkeStructure k(parse_kripke(read_file(dir / entry.at("kripke").get<std::string>())));
            const MultiTeam team = parse_multiteam(k, entry.at("team"));
            rec.instance(label, expect, mc_ctl(k, team, parse_ctl(entry.at("formula").get<std::string>())));
        } else if (kind == "splitfree") {
            const KripkeStructure k(parse_kripke(read_file(dir / entry.at("kripke").get<std::string>())));
            rec.instance(label, expect,
                         check_model_splitfree(k, parse_ltl(entry.at("formula").get<std::string>())));
        } else if (kind == "qbf") {
            const QbfInstance q =
                normalize_qbf(parse_qbf(read_file(dir / entry.at("file").get<std::string>())));
            rec.instance(label + " (brute force)", expect, eval_qbf(q));
            const auto [team, f] = reduce_to_tpc(q);
            rec.instance(label + " (path reduction)", expect, checker(team, f));
            const auto red = reduce_to_tmc_ctl(q);
            CtlCheckOptions big;
            big.max_worlds = red.structure.size();
            rec.instance(label + " (CTL reduction)", expect,
                         mc_ctl(red.structure, red.team, red.formula, big));
        } else {
            rec.failure(label + ": unknown fixture kind '" + kind + "'");
        }
    }
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
    SelftestReport report;
    Recorder rec(report);
    const TeamChecker checker =
        options.team_checker ? options.team_checker
                             : TeamChecker([](const TeamEncoding& t, const LtlFormula& f) {
                                   return check_team(t, f);
                               });
    Rng rng(options.seed);
    team_suite(rng, options.count, checker, rec);
    ctl_suite(rng, options.count, rec);
    splitfree_suite(rng, options.count, rec);
    successor_suite(rng, options.count, rec);
    if (options.fixtures) {
        try {
            fixture_suite(*options.fixtures, checker, rec);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed fixture manifest: ") + e.what());
        }
    }
    return report;
}

}  // namespace teamtl::check
