#include "support.hpp"

#include "teamtl/check/oracles.hpp"
#include "teamtl/error.hpp"
#include "teamtl/io.hpp"
#include "teamtl/kripke.hpp"
#include "teamtl/trace.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace teamtl;
using support::lasso;

namespace {

const PropSet P{"p"};
const PropSet Q{"q"};
const PropSet E{};

KripkeStructure make(std::vector<std::string> worlds,
                     std::vector<std::pair<std::string, std::string>> edges,
                     std::map<std::string, PropSet> labels = {},
                     std::optional<std::string> initial = std::nullopt) {
    return KripkeStructure(KripkeDescription{std::move(worlds), std::move(edges), std::move(labels),
                                             std::move(initial)});
}

}  // namespace

TEST_CASE("trace_at and suffix_trace") {
    const LassoTrace t = lasso({P, Q}, {E, P});
    CHECK(t.at(0) == P);
    CHECK(t.at(1) == Q);
    CHECK(t.at(2) == E);
    CHECK(t.at(5) == P);
    CHECK(suffix_trace(t, 1) == lasso({Q}, {E, P}));
    CHECK(suffix_trace(t, 3) == lasso({}, {P, E}));
    CHECK(suffix_trace(t, 4) == lasso({}, {E, P}));
    CHECK_THROWS_AS(LassoTrace({P}, {}), InputError);
}

TEST_CASE("canonical forms coincide exactly when the words do") {
    // Oracle: compare letters on a window longer than both horizons.
    teamtl::check::Rng rng(3);
    teamtl::check::TeamShape shape;
    shape.props = {"p"};
    shape.max_prefix = 3;
    shape.max_loop = 4;
    for (int i = 0; i < 3000; ++i) {
        const LassoTrace a = teamtl::check::random_trace(rng, shape);
        const LassoTrace b = teamtl::check::random_trace(rng, shape);
        bool same = true;
        for (std::size_t k = 0; k < 40 && same; ++k) same = a.at(k) == b.at(k);
        CHECK((canonicalize(a) == canonicalize(b)) == same);
        for (std::size_t k = 0; k < 12; ++k) CHECK(canonicalize(a).at(k) == a.at(k));
    }
    CHECK(canonicalize(lasso({P, E}, {P, E, P, E})) == lasso({}, {P, E}));
}

TEST_CASE("team encoding, suffix teams, prfx and lcm") {
    const TeamEncoding t({lasso({P}, {E}), lasso({E, P}, {E}), lasso({P}, {E})});
    CHECK(t.size() == 2);
    CHECK(prfx(t) == 2);
    CHECK(lcm_loop(t) == 1);
    // After two steps both traces are ∅^ω.
    CHECK(suffix_team(t, 2).size() == 1);
    const TeamEncoding u({lasso({}, {P, E}), lasso({Q}, {E, E, P})});
    CHECK(lcm_loop(u) == 6);
    CHECK(prfx(TeamEncoding{}) == 0);
    CHECK(lcm_loop(TeamEncoding{}) == 1);
}

TEST_CASE("validate reports every problem") {
    CHECK(validate({{"a"}, {{"a", "a"}}, {}, {}}).empty());
    const auto errs = validate({{"a", "b", "a"}, {{"a", "c"}}, {{"z", {"p"}}, {"a", {"1x"}}}, "q"});
    auto has = [&](const std::string& needle) {
        return std::any_of(errs.begin(), errs.end(),
                           [&](const std::string& e) { return e.find(needle) != std::string::npos; });
    };
    CHECK(has("duplicate world 'a'"));
    CHECK(has("undeclared world 'c'"));
    CHECK(has("not left-total"));
    CHECK(has("undeclared world 'z'"));
    CHECK(has("invalid proposition '1x'"));
    CHECK(has("initial world 'q'"));
    CHECK_THROWS_AS(make({"a"}, {}), InputError);
}

TEST_CASE("successor teams") {
    const auto k = make({"a", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"x", "x"}, {"y", "y"}});
    const WorldId a = k.world("a"), x = k.world("x"), y = k.world("y");
    CHECK(successor_teams(k, MultiTeam::of({a})).size() == 2);
    const auto two = successor_teams(k, MultiTeam::of({a, a}));
    std::set<std::vector<WorldId>> got;
    for (const auto& t : two) got.insert(t.multiset());
    CHECK(got == std::set<std::vector<WorldId>>{{x, x}, {x, y}, {y, y}});
    CHECK(successor_teams(k, MultiTeam::of({x})).size() == 1);
    CHECK(successor_teams(k, MultiTeam{}).size() == 1);
}

TEST_CASE("successor matching: documented shapes") {
    const auto k = make({"a", "b", "c", "x", "y"},
                        {{"a", "x"}, {"b", "x"}, {"c", "x"}, {"c", "y"}, {"x", "x"}, {"y", "y"}});
    const WorldId a = k.world("a"), b = k.world("b"), c = k.world("c"), x = k.world("x"),
                  y = k.world("y");
    // Sizes agree and every world is covered in both directions, yet a and b
    // compete for the single x.
    CHECK_FALSE(is_successor_team(k, MultiTeam::of({a, b, c}), MultiTeam::of({x, y, y})));
    CHECK_FALSE(teamtl::check::brute_force_successor(k, MultiTeam::of({a, b, c}),
                                                     MultiTeam::of({x, y, y})));
    CHECK(is_successor_team(k, MultiTeam::of({a, b, c}), MultiTeam::of({x, x, y})));
    CHECK(is_successor_team(k, MultiTeam::of({a}), MultiTeam::of({x})));
    CHECK_FALSE(is_successor_team(k, MultiTeam::of({a}), MultiTeam::of({x, x})));
    const auto k2 = make({"a", "b", "x", "y"},
                         {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}, {"x", "x"}, {"y", "y"}});
    CHECK(is_successor_team(k2, MultiTeam::of({k2.world("a"), k2.world("b")}),
                            MultiTeam::of({k2.world("x"), k2.world("x")})));
    CHECK_THROWS_AS((void)is_successor_team(k, MultiTeam::of({17}), MultiTeam::of({x})), InputError);
}

TEST_CASE("successor teams agree with matching and with enumeration") {
    teamtl::check::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto k = teamtl::check::random_kripke(rng, 2 + i % 3, {"p"});
        const auto from = teamtl::check::random_multiteam(rng, k, 3);
        std::set<std::vector<WorldId>> listed;
        for (const auto& t : successor_teams(k, from)) listed.insert(t.multiset());
        // Every multiset of the right size over the worlds.
        std::vector<WorldId> cand(from.size(), 0);
        while (true) {
            const MultiTeam to = MultiTeam::of(cand);
            const bool brute = teamtl::check::brute_force_successor(k, from, to);
            CHECK(is_successor_team(k, from, to) == brute);
            if (std::is_sorted(cand.begin(), cand.end())) CHECK(listed.count(cand) == (brute ? 1U : 0U));
            std::size_t pos = 0;
            while (pos < cand.size() && cand[pos] == k.size() - 1) cand[pos++] = 0;
            if (pos == cand.size()) break;
            ++cand[pos];
        }
    }
}

TEST_CASE("successor chains repeat within |W|^|T| steps") {
    teamtl::check::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto k = teamtl::check::random_kripke(rng, 2 + i % 3, {"p"});
        const auto t0 = teamtl::check::random_multiteam(rng, k, 3);
        std::size_t bound = 1;
        for (std::size_t j = 0; j < t0.size(); ++j) bound *= k.size();
        std::set<std::vector<WorldId>> seen;
        MultiTeam cur = t0;
        while (seen.insert(cur.multiset()).second) cur = successor_teams(k, cur).back();
        CHECK(seen.size() <= bound);
    }
}

TEST_CASE("successor set image") {
    const auto k = make({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}, {"a", "a"}, {"b", "b"}});
    CHECK(successor_sets_step(k, {true, false, false}) == WorldSet{false, true, true});
    CHECK(successor_sets_step(k, {false, false, false}) == WorldSet{false, false, false});
    CHECK(successor_sets_step(k, {false, true, false}) == WorldSet{false, true, false});
}

TEST_CASE("enumerate_traces") {
    const auto cycle = make({"i", "v"}, {{"i", "v"}, {"v", "i"}}, {{"i", P}}, "i");
    const auto t = enumerate_traces(cycle);
    REQUIRE(t.size() == 1);
    CHECK(t.traces()[0] == lasso({}, {P, E}));

    const KripkeStructure diamond(parse_kripke(read_file(support::fixtures() / "diamond.kripke.json")));
    const auto d = enumerate_traces(diamond);
    CHECK(d.size() == 2);
    CHECK(d.contains(lasso({E}, {P})));
    CHECK(d.contains(lasso({}, {E})));

    const KripkeStructure branching(
        parse_kripke(read_file(support::fixtures() / "branching_cycle.kripke.json")));
    try {
        (void)enumerate_traces(branching);
        FAIL("expected a lasso-forest violation");
    } catch (const LassoForestViolation& e) {
        CHECK(e.world() == "b");
    }
}

TEST_CASE("multiteam parsing and multiplicity") {
    const auto k = make({"r", "a"}, {{"r", "a"}, {"a", "a"}});
    const MultiTeam t = parse_multiteam(k, "r, a,a");
    CHECK(t.size() == 3);
    CHECK(t.multiplicity(k.world("a")) == 2);
    CHECK_THROWS_AS((void)parse_multiteam(k, "r,zz"), InputError);
    CHECK_THROWS_AS(MultiTeam({{0, 0}, {0, 1}}), InputError);
    CHECK(same_multiset(MultiTeam({{4, 1}, {9, 0}}), MultiTeam::of({0, 1})));
}

TEST_CASE("to_dot emits every edge") {
    const auto k = make({"r", "a"}, {{"r", "a"}, {"a", "a"}}, {{"a", P}}, "r");
    const std::string dot = to_dot(k);
    CHECK(dot.find("\"r\" -> \"a\"") != std::string::npos);
    CHECK(dot.find("\"a\" -> \"a\"") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
}
