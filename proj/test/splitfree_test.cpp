#include "support.hpp"

#include "teamtl/error.hpp"
#include "teamtl/eval_classical.hpp"
#include "teamtl/eval_team_ltl.hpp"
#include "teamtl/io.hpp"
#include "teamtl/parser.hpp"
#include "teamtl/tmc_splitfree.hpp"

#include <doctest.h>

#include <map>

using namespace teamtl;

namespace {

KripkeStructure load(const char* name) {
    return KripkeStructure(parse_kripke(read_file(support::fixtures() / name)));
}

}  // namespace

TEST_CASE("flatten: diamond loses both p and its bar after the branch") {
    const FlattenedTrace f = flatten(load("diamond.kripke.json"));
    CHECK(f.s == 1);
    CHECK(f.p == 1);
    CHECK(f.trace.at(0) == PropSet{bar_name("p")});
    CHECK(f.trace.at(1).empty());
    CHECK(f.trace.at(7).empty());
}

TEST_CASE("flatten: self-loop and deterministic structures") {
    const KripkeStructure loop(KripkeDescription{{"a"}, {{"a", "a"}}, {{"a", {"p"}}}, "a"});
    const FlattenedTrace f = flatten(loop);
    CHECK(f.s == 0);
    CHECK(f.p == 1);
    CHECK(f.trace.at(0) == PropSet{"p"});

    const KripkeStructure chain(KripkeDescription{
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "b"}}, {{"b", {"p"}}, {"c", {"q"}}}, "a"});
    const FlattenedTrace g = flatten(chain);
    CHECK(g.s == 1);
    CHECK(g.p == 2);
    CHECK(g.trace.at(0) == PropSet{bar_name("p"), bar_name("q")});
    CHECK(g.trace.at(1) == PropSet{"p", bar_name("q")});
    CHECK(g.trace.at(2) == PropSet{"q", bar_name("p")});
    // Deterministic: same verdict as the classical check of its only trace.
    const auto traces = enumerate_traces(chain);
    REQUIRE(traces.size() == 1);
    for (const char* text : {"G F p", "X !q", "F (p & X q)", "p U q", "!q R !p"}) {
        const Formula phi = parse_ltl(text);
        CHECK(check_model_splitfree(chain, phi) == check_ltl_classical(traces.traces()[0], phi));
    }
}

TEST_CASE("split-free model checking examples") {
    CHECK_FALSE(check_model_splitfree(load("diamond.kripke.json"), parse_ltl("G !p")));
    CHECK(check_model_splitfree(load("diamond.kripke.json"), parse_ltl("X ~(p \\|/ !p)")));
    const KripkeStructure same = load("same_depth.kripke.json");
    CHECK(check_model_splitfree(same, parse_ltl("F p")));
    CHECK(check_model_splitfree(same, parse_ltl("X X p")));
    // Depth-2 world set is all-p, computed independently.
    WorldSet s(same.size(), false);
    s[*same.initial()] = true;
    s = successor_sets_step(same, successor_sets_step(same, s));
    for (WorldId w = 0; w < same.size(); ++w)
        if (s[w]) CHECK(same.label(w).count("p") == 1);
    CHECK(check_model_splitfree(load("all_p_cycle.kripke.json"), parse_ltl("G p")));
}

TEST_CASE("split-free model checking rejects splits and atoms") {
    const KripkeStructure k = load("diamond.kripke.json");
    CHECK_THROWS_AS((void)check_model_splitfree(k, parse_ltl("p | q")), SplitjunctionPresent);
    CHECK_THROWS_AS((void)check_model_splitfree(k, parse_ltl("dep(p; q)")), GenAtomPresent);
    // TOP hides its split and is accepted.
    CHECK(check_model_splitfree(k, parse_ltl("F TOP")));
}

TEST_CASE("flattened characteristic is minimal and bounded") {
    teamtl::check::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto k = teamtl::check::random_kripke(rng, 1 + i % 6, {"p", "q"});
        const FlattenedTrace f = flatten(k);
        CHECK(f.s + f.p <= (std::size_t{1} << k.size()));
        // Independent recomputation of the set sequence.
        std::vector<WorldSet> seq;
        WorldSet cur(k.size(), false);
        cur[0] = true;
        for (std::size_t j = 0; j < f.s + 2 * f.p + 1; ++j) {
            seq.push_back(cur);
            cur = successor_sets_step(k, cur);
        }
        for (std::size_t j = f.s; j + f.p < seq.size(); ++j) CHECK(seq[j] == seq[j + f.p]);
        for (std::size_t a = 0; a < f.s + f.p; ++a)
            for (std::size_t b = a + 1; b < f.s + f.p; ++b) CHECK(seq[a] != seq[b]);
    }
}

TEST_CASE("split-free verdict equals checking the enumerated trace team") {
    teamtl::check::Rng rng(23);
    teamtl::check::FormulaShape shape;
    shape.split = false;
    shape.cneg = shape.boolor = true;
    shape.max_length = 7;
    for (int i = 0; i < 400; ++i) {
        const auto k = teamtl::check::random_lasso_forest(rng, 2 + i % 7, {"p", "q"});
        const Formula f = teamtl::check::random_formula(rng, shape);
        INFO(render(f), " on ", write_kripke(k));
        CHECK(check_model_splitfree(k, f) == check_team(enumerate_traces(k), f));
    }
}

TEST_CASE("removing edges never falsifies a downward-closed split-free formula") {
    teamtl::check::Rng rng(29);
    teamtl::check::FormulaShape shape;
    shape.split = false;
    shape.boolor = true;
    for (int i = 0; i < 300; ++i) {
        const auto k = teamtl::check::random_lasso_forest(rng, 3 + i % 5, {"p", "q"});
        const Formula f = teamtl::check::random_formula(rng, shape);
        if (!check_model_splitfree(k, f)) continue;
        // Drop one edge of a world that keeps another successor.
        auto d = k.description();
        std::map<std::string, int> out;
        for (const auto& [a, b] : d.edges) ++out[a];
        for (std::size_t e = 0; e < d.edges.size(); ++e) {
            if (out[d.edges[e].first] < 2) continue;
            auto smaller = d;
            smaller.edges.erase(smaller.edges.begin() + static_cast<long>(e));
            const KripkeStructure k2(smaller);
            const auto big = enumerate_traces(k), small = enumerate_traces(k2);
            for (const auto& t : small) CHECK(big.contains(t));
            CHECK(check_model_splitfree(k2, f));
        }
    }
}

TEST_CASE("subset cap") {
    const KripkeStructure k(KripkeDescription{
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, {}, "a"});
    CHECK_THROWS_AS((void)check_model_splitfree(k, parse_ltl("F p"), 2), ResourceError);
    CHECK_FALSE(check_model_splitfree(k, parse_ltl("F p"), 3));
}
