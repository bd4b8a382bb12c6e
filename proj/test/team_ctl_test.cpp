#include "support.hpp"

#include "teamtl/check/oracles.hpp"
#include "teamtl/check/random.hpp"
#include "teamtl/error.hpp"
#include "teamtl/eval_classical.hpp"
#include "teamtl/eval_team_ctl.hpp"
#include "teamtl/io.hpp"
#include "teamtl/parser.hpp"

#include <doctest.h>

#include <algorithm>

using namespace teamtl;

namespace {

KripkeStructure load(const char* name) {
    return KripkeStructure(parse_kripke(read_file(support::fixtures() / name)));
}

bool holds(const KripkeStructure& k, const std::string& team, const char* f,
           const CtlCheckOptions& o = {}) {
    return mc_ctl(k, parse_multiteam(k, team), parse_ctl(f), o);
}

// Every sub-multiset obtained by dropping a set of entries.
std::vector<MultiTeam> sub_teams(const MultiTeam& t) {
    std::vector<MultiTeam> out;
    const std::size_t n = t.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<MultiTeam::Entry> e;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) e.push_back(t.entries()[i]);
        out.emplace_back(std::move(e));
    }
    return out;
}

check::FormulaShape ctl_shape(bool cneg, bool atoms) {
    check::FormulaShape s;
    s.ctl = true;
    s.cneg = cneg;
    s.atoms = atoms;
    s.max_length = 5;
    return s;
}

}  // namespace

TEST_CASE("synchronous reading separates a pair of individually good worlds") {
    const KripkeStructure k = load("flatness_left.kripke.json");
    CHECK(holds(k, "x1", "EF p"));
    CHECK(holds(k, "y1", "EF p"));
    CHECK_FALSE(holds(k, "x1,y1", "EF p"));
    CHECK(holds(k, "x1,y1", "EF p | EF p"));
}

TEST_CASE("multiplicity matters") {
    const KripkeStructure k = load("multiplicity_right.kripke.json");
    CHECK(holds(k, "w", "AF p"));
    CHECK_FALSE(holds(k, "w,w", "AF p"));
    CHECK(holds(k, "w,w", "EF p"));  // both members take the same branch
    CHECK(holds(k, "w,w", "AF p | AF p"));
}

TEST_CASE("empty team satisfies everything") {
    const KripkeStructure k = load("diamond.kripke.json");
    for (const char* f : {"BOT", "AG (p & !p)", "EX BOT", "A[p U BOT]"})
        CHECK(mc_ctl(k, MultiTeam{}, parse_ctl(f)));
    CHECK_FALSE(mc_ctl(k, MultiTeam{}, parse_ctl("~TOP")));
}

TEST_CASE("until index: default vs from-one reading") {
    const KripkeStructure k(KripkeDescription{{"a", "b"}, {{"a", "b"}, {"b", "b"}}, {{"b", {"p"}}}, "a"});
    CtlCheckOptions lit;
    lit.until_from_one = true;
    CHECK_FALSE(holds(k, "a", "E[q U p]"));
    CHECK(holds(k, "a", "E[q U p]", lit));
    CHECK(holds(k, "a", "A[q U p]", lit));
    // A witness at step 0 makes both readings agree.
    CHECK(holds(k, "b", "E[q U p]"));
    CHECK(holds(k, "b", "E[q U p]", lit));
    // Release: l at step 0 discharges r only in the default reading.
    const KripkeStructure r(KripkeDescription{
        {"c", "d"}, {{"c", "d"}, {"d", "d"}}, {{"c", {"p", "q"}}}, "c"});
    CHECK(holds(r, "c", "E[q R p]"));
    CHECK_FALSE(holds(r, "c", "E[q R p]", lit));
    CHECK_FALSE(holds(k, "a", "E[q R p]", lit));
}

TEST_CASE("successor graph search") {
    const KripkeStructure k(KripkeDescription{
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}}, {{"c", {"q"}}}, "a"});
    const auto has_q = [&](const MultiTeam& t) {
        return std::all_of(t.entries().begin(), t.entries().end(),
                           [&](const auto& e) { return k.label(e.world).count("q") != 0; });
    };
    const auto any = [](const MultiTeam&) { return true; };
    const auto none = [](const MultiTeam&) { return false; };
    const MultiTeam t = parse_multiteam(k, "a,b");
    CHECK(successor_graph_reach(k, t, any, has_q, PathMode::E));
    CHECK(successor_graph_reach(k, t, any, has_q, PathMode::A));
    CHECK_FALSE(successor_graph_reach(k, t, none, has_q, PathMode::E));

    const KripkeStructure f = load("flatness_left.kripke.json");
    const auto all_p = [&](const MultiTeam& m) {
        return std::all_of(m.entries().begin(), m.entries().end(),
                           [&](const auto& e) { return f.label(e.world).count("p") != 0; });
    };
    CHECK_FALSE(successor_graph_reach(f, parse_multiteam(f, "x1,y1"), any, all_p, PathMode::E));
    CHECK(successor_graph_reach(f, parse_multiteam(f, "x1"), any, all_p, PathMode::E));
}

TEST_CASE("singleton teams agree with classical CTL on split-free formulas") {
    check::Rng rng(41);
    check::FormulaShape shape = ctl_shape(false, false);
    shape.max_length = 7;
    for (int i = 0; i < 600; ++i) {
        const auto k = check::random_kripke(rng, 1 + i % 6, {"p", "q"});
        const Formula f = check::random_formula(rng, shape);
        const WorldSet sat = ctl_satisfying_worlds(k, f);
        if (classify(f).uses_split) {
            // Split on singletons is disjunction only if one side may be empty.
            continue;
        }
        for (WorldId w = 0; w < k.size(); ++w) {
            INFO(render(f), " at w", w);
            CHECK(mc_ctl(k, MultiTeam::of({w}), f) == sat[w]);
        }
    }
}

TEST_CASE("singleton teams agree with classical CTL when splits are present") {
    // On a singleton, one half of any split is empty, so split is disjunction.
    check::Rng rng(43);
    check::FormulaShape shape = ctl_shape(false, false);
    for (int i = 0; i < 400; ++i) {
        const auto k = check::random_kripke(rng, 1 + i % 5, {"p", "q"});
        const Formula f = check::random_formula(rng, shape);
        if (!classify(f).uses_split) continue;
        const WorldSet sat = ctl_satisfying_worlds(k, f);
        for (WorldId w = 0; w < k.size(); ++w) {
            INFO(render(f), " at w", w);
            CHECK(mc_ctl(k, MultiTeam::of({w}), f) == sat[w]);
        }
    }
}

TEST_CASE("downward closure, index invariance and flatness of split-free literals") {
    check::Rng rng(47);
    const check::FormulaShape shape = ctl_shape(false, false);
    for (int i = 0; i < 300; ++i) {
        const auto k = check::random_kripke(rng, 2 + i % 4, {"p", "q"});
        const Formula f = check::random_formula(rng, shape);
        const MultiTeam t = check::random_multiteam(rng, k, 4);
        const bool v = mc_ctl(k, t, f);
        INFO(render(f));
        if (v)
            for (const auto& s : sub_teams(t)) CHECK(mc_ctl(k, s, f));
        std::vector<WorldId> ws = t.multiset();
        std::shuffle(ws.begin(), ws.end(), rng);
        CHECK(mc_ctl(k, MultiTeam::of(ws), f) == v);
        std::vector<MultiTeam::Entry> far;
        for (std::size_t j = 0; j < ws.size(); ++j) far.push_back({100 + 7 * j, ws[j]});
        CHECK(mc_ctl(k, MultiTeam(far), f) == v);
    }
}

TEST_CASE("agreement with the explicit tuple oracle") {
    check::Rng rng(53);
    for (bool extended : {false, true}) {
        const check::FormulaShape shape = ctl_shape(extended, extended);
        for (int i = 0; i < 300; ++i) {
            const auto k = check::random_kripke(rng, 1 + i % 4, {"p", "q"});
            const Formula f = check::random_formula(rng, shape);
            const MultiTeam t = check::random_multiteam(rng, k, 3);
            INFO(render(f), " on ", write_kripke(k));
            CHECK(mc_ctl(k, t, f) == check::brute_force_ctl(k, t, f));
        }
    }
}

TEST_CASE("caps") {
    const KripkeStructure k = load("diamond.kripke.json");
    CtlCheckOptions o;
    o.max_team = 2;
    CHECK_THROWS_AS((void)holds(k, "r,r,r", "EF p", o), ResourceError);
    o = {};
    o.max_worlds = 2;
    CHECK_THROWS_AS((void)holds(k, "r", "EF p", o), ResourceError);
    o = {};
    o.max_states = 1;
    CHECK_THROWS_AS((void)holds(k, "r", "EF p", o), ResourceError);
}
