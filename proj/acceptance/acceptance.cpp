// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "teamtl/check/oracles.hpp"
#include "teamtl/check/random.hpp"
#include "teamtl/check/selftest.hpp"
#include "teamtl/eval_classical.hpp"
#include "teamtl/eval_team_ctl.hpp"
#include "teamtl/eval_team_ltl.hpp"
#include "teamtl/io.hpp"
#include "teamtl/naive_oracle.hpp"
#include "teamtl/parser.hpp"
#include "teamtl/qbf.hpp"
#include "teamtl/tmc_splitfree.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace teamtl;
using check::Rng;

namespace {

const std::filesystem::path kFixtures = FIXTURE_DIR;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t instances = 0;
    std::size_t bad = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++instances;
        if (ok) return;
        ++bad;
        pass = false;
        if (first_failure.empty()) first_failure = what();
    }
};

int run(int id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%d] %s: %zu checks, %zu failed%s%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id,
                title, o.instances, o.bad, o.detail.empty() ? "" : "; ", o.detail.c_str(), secs);
    if (!o.pass) std::printf("    first failure: %s\n", o.first_failure.c_str());
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

std::vector<TeamEncoding> subteams(const TeamEncoding& t) {
    std::vector<TeamEncoding> out;
    const auto& ts = t.traces();
    for (std::size_t m = 0; m < (std::size_t{1} << ts.size()); ++m) {
        std::vector<LassoTrace> pick;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (m >> i & 1) pick.push_back(ts[i]);
        out.emplace_back(std::move(pick));
    }
    return out;
}

// All sorted world tuples of length n.
void multisets(std::size_t worlds, std::size_t n, std::vector<WorldId>& cur,
               std::vector<std::vector<WorldId>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (WorldId w = cur.empty() ? 0 : cur.back(); w < worlds; ++w) {
        cur.push_back(w);
        multisets(worlds, n, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiTeam> all_multiteams(std::size_t worlds, std::size_t max_size) {
    std::vector<std::vector<WorldId>> tuples;
    std::vector<WorldId> cur;
    for (std::size_t n = 0; n <= max_size; ++n) multisets(worlds, n, cur, tuples);
    std::vector<MultiTeam> out;
    for (const auto& t : tuples) out.push_back(MultiTeam::of(t));
    return out;
}

std::string show(const MultiTeam& t) {
    std::string s = "{";
    for (WorldId w : t.multiset()) s += " " + std::to_string(w);
    return s + " }";
}

// 1. Fragment properties on the ~-free fragment.
void fragment_properties(Outcome& o) {
    Rng rng(1001);
    check::FormulaShape shape;
    shape.max_length = 8;
    shape.boolor = true;
    check::TeamShape teams;
    teams.max_traces = 3;
    teams.max_prefix = 3;
    teams.max_loop = 3;
    std::size_t dc = 0, singles = 0;
    for (int i = 0; i < 1200; ++i) {
        shape.atoms = i % 2 == 0;
        const Formula f = check::random_formula(rng, shape);
        const TeamEncoding t = check::random_team(rng, teams);
        const auto what = [&] { return render(f) + " on " + write_team(t); };
        o.expect(check_team(TeamEncoding{}, f), [&] { return "empty team fails " + render(f); });
        const bool v = check_team(t, f);
        if (classify(f).downward_closed_fragment) {
            ++dc;
            if (v)
                for (const auto& s : subteams(t)) o.expect(check_team(s, f), what);
        }
        if (!classify(f).uses_genatoms) {
            for (const auto& tr : t.traces()) {
                ++singles;
                o.expect(check_team(TeamEncoding({tr}), f) == ltl_positions(tr, f, true).front(),
                         what);
            }
        }
    }
    o.detail = "1200 formulas, " + std::to_string(dc) + " downward closed, " +
               std::to_string(singles) + " singleton comparisons";
}

// 2. Pinned fixture verdicts.
void fixtures(Outcome& o) {
    check::SelftestOptions opts;
    opts.count = 0;
    opts.fixtures = kFixtures;
    const auto r = check::run_selftest(opts);
    const auto manifest = nlohmann::json::parse(strip_comments(read_file(kFixtures / "manifest.json")));
    o.expect(!manifest.at("fixtures").empty(), [] { return std::string("empty manifest"); });
    for (const auto& f : r.failures) o.expect(false, [&] { return f; });
    o.expect(r.ok(), [] { return std::string("fixture mismatch"); });
    o.detail = std::to_string(manifest.at("fixtures").size()) + " manifest entries, " +
               std::to_string(r.instances) + " verdicts";
}

// 3. Memoised checker against the explicit suffix-team oracle.
void naive_agreement(Outcome& o) {
    Rng rng(3003);
    check::FormulaShape shape;
    shape.max_length = 8;
    shape.cneg = shape.boolor = shape.atoms = true;
    check::TeamShape teams;
    std::size_t with_atoms = 0, with_bool = 0, with_cneg = 0;
    for (int i = 0; i < 2500; ++i) {
        const Formula f = check::random_formula(rng, shape);
        const TeamEncoding t = check::random_team(rng, teams);
        const auto c = classify(f);
        with_atoms += c.uses_genatoms;
        with_bool += c.uses_boolor;
        with_cneg += c.uses_cneg;
        o.expect(check_team(t, f) == naive_oracle(t, f),
                 [&] { return render(f) + " on " + write_team(t); });
    }
    o.expect(with_atoms > 0 && with_bool > 0 && with_cneg > 0,
             [] { return std::string("operator coverage missing"); });
    o.detail = std::to_string(with_atoms) + " with atoms, " + std::to_string(with_bool) +
               " with \\|/, " + std::to_string(with_cneg) + " with ~";
}

bool qbf_reference(const QbfInstance& q, std::vector<bool>& a, std::size_t i) {
    if (i == q.num_vars()) {
        for (const auto& c : q.clauses) {
            bool sat = false;
            for (const auto& l : c) sat = sat || a[l.var] == l.positive;
            if (!sat) return false;
        }
        return true;
    }
    bool any = false, all = true;
    for (bool v : {false, true}) {
        a[i] = v;
        const bool r = qbf_reference(q, a, i + 1);
        any = any || r;
        all = all && r;
    }
    return QbfInstance::quantifier(i) == Quantifier::Exists ? any : all;
}

// 4. Both QBF reductions over every 3-variable instance with at most 2 clauses.
void qbf_reductions(Outcome& o) {
    std::vector<QbfInstance::Literal> lits;
    for (std::size_t v = 0; v < 3; ++v)
        for (bool pos : {true, false}) lits.push_back({v, pos});
    std::vector<std::array<QbfInstance::Literal, 3>> pool;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a; b < 6; ++b)
            for (std::size_t c = b; c < 6; ++c) pool.push_back({lits[a], lits[b], lits[c]});
    o.expect(pool.size() == 56, [] { return std::string("clause pool size"); });

    std::vector<std::vector<std::size_t>> matrices{{}};
    for (std::size_t a = 0; a < pool.size(); ++a) {
        matrices.push_back({a});
        for (std::size_t b = a; b < pool.size(); ++b) matrices.push_back({a, b});
    }
    std::size_t valid = 0;
    const auto decide = [&](const QbfInstance& q) {
        std::vector<bool> a(q.num_vars());
        const bool truth = qbf_reference(q, a, 0);
        const auto [team, f] = reduce_to_tpc(q);
        TeamCheckOptions topts;
        topts.max_team = kMaxTeamBits;
        o.expect(check_team(team, f, topts) == truth, [&] { return "path: " + render_qbf(q); });
        const auto r = reduce_to_tmc_ctl(q);
        CtlCheckOptions copts;
        copts.max_team = r.team.size();
        copts.max_worlds = r.structure.size();
        o.expect(mc_ctl(r.structure, r.team, r.formula, copts) == truth,
                 [&] { return "ctl: " + render_qbf(q); });
        return truth;
    };
    for (const auto& m : matrices) {
        QbfInstance q;
        q.names = {"x1", "x2", "x3"};
        for (std::size_t j : m) q.clauses.push_back(pool[j]);
        valid += decide(q);
    }
    const QbfInstance worked = normalize_qbf(parse_qbf(read_file(kFixtures / "valid3.qbf")));
    o.expect(decide(worked), [] { return std::string("worked instance not valid"); });
    o.detail = std::to_string(matrices.size()) + " instances (" + std::to_string(valid) +
               " valid) on both reductions";
}

// 5. Split-free model checking on lasso forests against trace enumeration.
void splitfree(Outcome& o) {
    Rng rng(5005);
    check::FormulaShape shape;
    shape.split = false;
    shape.cneg = shape.boolor = true;
    shape.max_length = 7;
    for (int i = 0; i < 600; ++i) {
        const auto k = check::random_lasso_forest(rng, 1 + i % 8, {"p", "q"});
        const Formula f = check::random_formula(rng, shape);
        const auto what = [&] { return render(f) + " on " + write_kripke(k); };
        o.expect(check_model_splitfree(k, f) == check_team(enumerate_traces(k), f), what);
        const FlattenedTrace ft = flatten(k);
        o.expect(ft.s + ft.p <= (std::size_t{1} << k.size()), what);
    }
    o.detail = "600 structures with up to 8 worlds";
}

// 6. TeamCTL against the tuple oracle, and singleton equivalence.
void team_ctl(Outcome& o) {
    Rng rng(6006);
    check::FormulaShape shape;
    shape.ctl = true;
    shape.max_length = 5;
    std::size_t compared = 0;
    for (int s = 0; s < 6; ++s) {
        const auto k = check::random_kripke(rng, 2 + s % 3, {"p", "q"});
        const auto teams = all_multiteams(k.size(), 3);
        for (int i = 0; i < 8; ++i) {
            shape.cneg = shape.atoms = i % 2 == 1;
            const Formula f = check::random_formula(rng, shape);
            for (const auto& t : teams) {
                ++compared;
                o.expect(mc_ctl(k, t, f) == check::brute_force_ctl(k, t, f),
                         [&] { return render(f) + " team " + show(t) + " on " + write_kripke(k); });
            }
        }
    }
    shape.cneg = shape.atoms = false;
    shape.max_length = 7;
    std::size_t singles = 0;
    while (singles < 1200) {
        const auto k = check::random_kripke(rng, 1 + singles % 6, {"p", "q"});
        const Formula f = check::random_formula(rng, shape);
        const WorldSet sat = ctl_satisfying_worlds(k, f);
        for (WorldId w = 0; w < k.size(); ++w, ++singles)
            o.expect(mc_ctl(k, MultiTeam::of({w}), f) == sat[w],
                     [&] { return render(f) + " at " + std::to_string(w) + " on " + write_kripke(k); });
    }
    o.detail = std::to_string(compared) + " oracle comparisons, " + std::to_string(singles) +
               " singleton comparisons";
}

// 7. Successor teams: matching against explicit choice enumeration.
void successor(Outcome& o) {
    const KripkeStructure cx(KripkeDescription{
        {"a", "b", "c", "x", "y"},
        {{"a", "x"}, {"b", "x"}, {"c", "x"}, {"c", "y"}, {"x", "x"}, {"y", "y"}},
        {},
        "a"});
    const MultiTeam from = parse_multiteam(cx, "a,b,c"), to = parse_multiteam(cx, "x,y,y");
    o.expect(!is_successor_team(cx, from, to), [] { return std::string("counterexample shape accepted"); });
    o.expect(!check::brute_force_successor(cx, from, to), [] { return std::string("oracle on counterexample"); });

    Rng rng(7007);
    std::size_t cases = 0;
    for (int s = 0; s < 4; ++s) {
        const auto k = s == 0 ? cx : check::random_kripke(rng, 3 + s % 3, {"p"}, 0.4);
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<std::vector<WorldId>> tuples;
            std::vector<WorldId> cur;
            multisets(k.size(), n, cur, tuples);
            for (const auto& a : tuples)
                for (const auto& b : tuples) {
                    const auto ta = MultiTeam::of(a), tb = MultiTeam::of(b);
                    ++cases;
                    o.expect(is_successor_team(k, ta, tb) == check::brute_force_successor(k, ta, tb),
                             [&] { return show(ta) + " -> " + show(tb) + " on " + write_kripke(k); });
                }
        }
    }
    o.detail = std::to_string(cases) + " multiteam pairs over 4 structures";
}

// PL(~) formulas over p, q, r with exactly `n` connectives.
void pl_formulas(std::size_t n, std::vector<std::vector<Formula>>& memo) {
    if (memo.size() > n) return;
    for (std::size_t k = memo.size(); k <= n; ++k) {
        std::vector<Formula> out;
        if (k == 0) {
            for (const char* v : {"p", "q", "r"}) {
                out.push_back(Formula::prop(v));
                out.push_back(Formula::neg_prop(v));
            }
        } else {
            for (const auto& f : memo[k - 1]) out.push_back(Formula::cneg(f));
            for (std::size_t a = 0; a < k; ++a)
                for (const auto& l : memo[a])
                    for (const auto& r : memo[k - 1 - a]) {
                        out.push_back(Formula::conj(l, r));
                        out.push_back(Formula::split(l, r));
                        out.push_back(Formula::bool_or(l, r));
                    }
        }
        memo.push_back(std::move(out));
    }
}

Formula random_pl(Rng& rng, std::size_t n) {
    static const char* vars[] = {"p", "q", "r"};
    if (n == 0) {
        const auto v = vars[std::uniform_int_distribution<int>(0, 2)(rng)];
        return std::bernoulli_distribution(0.5)(rng) ? Formula::prop(v) : Formula::neg_prop(v);
    }
    const int op = std::uniform_int_distribution<int>(0, 3)(rng);
    if (op == 0) return Formula::cneg(random_pl(rng, n - 1));
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    Formula l = random_pl(rng, a), r = random_pl(rng, n - 1 - a);
    if (op == 1) return Formula::conj(l, r);
    if (op == 2) return Formula::split(l, r);
    return Formula::bool_or(l, r);
}

// 8. PL(~) satisfiability through path checking.
void plsim(Outcome& o) {
    std::vector<std::vector<Formula>> memo;
    pl_formulas(2, memo);
    std::size_t sat = 0, exhaustive = 0;
    const auto one = [&](const Formula& psi) {
        const auto [team, f] = reduce_plsim_to_tpc(psi);
        TeamCheckOptions opts;
        opts.max_team = kMaxTeamBits;
        const bool truth = check::brute_force_plsim(psi);
        sat += truth;
        o.expect(check_team(team, f, opts) == truth, [&] { return render(psi); });
    };
    for (const auto& level : memo)
        for (const auto& psi : level) {
            one(psi);
            ++exhaustive;
        }
    Rng rng(8008);
    for (int i = 0; i < 300; ++i) one(random_pl(rng, 3 + i % 3));
    o.detail = std::to_string(exhaustive) + " exhaustive + 300 sampled, " + std::to_string(sat) +
               " satisfiable";
}

}  // namespace

int main() {
    int failed = 0;
    failed += run(1, "empty team, downward closure and singleton equivalence", fragment_properties);
    failed += run(2, "pinned fixture verdicts", fixtures);
    failed += run(3, "team path checking vs explicit suffix-team oracle", naive_agreement);
    failed += run(4, "QBF reductions to path and CTL model checking", qbf_reductions);
    failed += run(5, "split-free model checking vs trace enumeration", splitfree);
    failed += run(6, "TeamCTL vs tuple oracle and classical singletons", team_ctl);
    failed += run(7, "successor teams by matching vs choice enumeration", successor);
    failed += run(8, "propositional ~ satisfiability via path checking", plsim);
    std::printf("%d of 8 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
