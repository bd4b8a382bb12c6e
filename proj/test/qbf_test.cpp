#include "support.hpp"

#include "teamtl/check/oracles.hpp"
#include "teamtl/error.hpp"
#include "teamtl/eval_team_ctl.hpp"
#include "teamtl/eval_team_ltl.hpp"
#include "teamtl/io.hpp"
#include "teamtl/parser.hpp"
#include "teamtl/qbf.hpp"

#include <doctest.h>

#include <random>

using namespace teamtl;

namespace {

// Plain recursive game evaluation.
bool game(const QbfInstance& q, std::vector<bool>& a, std::size_t i) {
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
        const bool r = game(q, a, i + 1);
        any = any || r;
        all = all && r;
    }
    return QbfInstance::quantifier(i) == Quantifier::Exists ? any : all;
}

bool valid(const QbfInstance& q) {
    std::vector<bool> a(q.num_vars());
    return game(q, a, 0);
}

QbfInstance random_qbf(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    QbfInstance q;
    for (std::size_t i = 0; i < n; ++i) q.names.push_back("x" + std::to_string(i + 1));
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::bernoulli_distribution pos(0.5);
    for (std::size_t j = 0; j < m; ++j) {
        std::array<QbfInstance::Literal, 3> c;
        for (auto& l : c) l = {var(rng), pos(rng)};
        q.clauses.push_back(c);
    }
    return q;
}

QbfInstance load(const char* name) {
    return normalize_qbf(parse_qbf(read_file(support::fixtures() / name)));
}

bool via_path(const QbfInstance& q) {
    const auto [team, f] = reduce_to_tpc(q);
    TeamCheckOptions o;
    o.max_team = kMaxTeamBits;
    return check_team(team, f, o);
}

bool via_ctl(const QbfInstance& q) {
    const auto r = reduce_to_tmc_ctl(q);
    CtlCheckOptions o;
    o.max_team = r.team.size();
    o.max_worlds = r.structure.size();
    return mc_ctl(r.structure, r.team, r.formula, o);
}

}  // namespace

TEST_CASE("parsing and normalisation") {
    NormalizeReport rep;
    const QbfInstance one = normalize_qbf(parse_qbf("exists x\nx\n"), &rep);
    CHECK(one.names == std::vector<std::string>{"x", "d1"});
    REQUIRE(one.clauses.size() == 1);
    for (const auto& l : one.clauses[0]) CHECK(l == QbfInstance::Literal{0, true});
    CHECK(rep.padded_clauses == 1);
    CHECK(rep.dummies == 1);

    const QbfInstance w = normalize_qbf(parse_qbf(read_file(support::fixtures() / "width2.qbf")), &rep);
    CHECK(w.names == std::vector<std::string>{"d1", "y", "z"});
    CHECK(rep.padded_clauses == 2);
    CHECK(w.clauses[0][2] == QbfInstance::Literal{2, true});
    CHECK(w.clauses[1][0] == QbfInstance::Literal{1, false});

    const QbfInstance v = load("valid3.qbf");
    CHECK(v.names == std::vector<std::string>{"x1", "x2", "x3"});
    const QbfInstance again = normalize_qbf(parse_qbf(render_qbf(v)), &rep);
    CHECK(again == v);
    CHECK(rep.dummies == 0);
    CHECK(rep.padded_clauses == 0);

    CHECK_THROWS_AS((void)parse_qbf("exists x\nx\nforall y\n"), InputError);
    CHECK_THROWS_AS((void)normalize_qbf(parse_qbf("exists x\ny\n")), InputError);
    CHECK_THROWS_AS((void)normalize_qbf(parse_qbf("exists x\nforall x\nx\n")), InputError);
    CHECK_THROWS_AS((void)normalize_qbf(parse_qbf("exists x\nx x x x\n")), InputError);
}

TEST_CASE("fixture validity") {
    CHECK(eval_qbf(load("valid3.qbf")));
    CHECK_FALSE(eval_qbf(load("invalid3.qbf")));
    CHECK(eval_qbf(load("width2.qbf")));
    CHECK(valid(load("valid3.qbf")));
    CHECK_FALSE(valid(load("invalid3.qbf")));
}

TEST_CASE("game evaluation agrees with the recursive reference") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 500; ++i) {
        const QbfInstance q = random_qbf(rng, 2 + i % 7, 1 + i % 5);
        CHECK(eval_qbf(q) == valid(q));
    }
}

TEST_CASE("path reduction shape") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 2 + i % 4, m = 1 + i % 3;
        const QbfInstance q = random_qbf(rng, n, m);
        const auto [team, f] = reduce_to_tpc(q);
        const std::size_t universals = n / 2, existentials = n - universals;
        CHECK(team.size() == 2 * existentials + 3 * universals + 3 * m);
        for (const auto& t : team.traces()) {
            CHECK(t.prefix().empty());
            CHECK((t.loop().size() == 3 || t.loop().size() == 6));
        }
        // Clause j: each of its three traces lacks c_j at exactly one loop
        // position, and those positions are distinct.
        for (std::size_t j = 0; j < m; ++j) {
            const std::string c = "c" + std::to_string(j + 1);
            std::vector<bool> missing(3, false);
            std::size_t found = 0;
            for (const auto& t : team.traces()) {
                std::size_t holes = 0, at = 0, hits = 0;
                for (std::size_t p = 0; p < t.loop().size(); ++p) {
                    if (t.loop()[p].count(c)) ++hits;
                    else { ++holes; at = p; }
                }
                if (hits == 0) continue;
                ++found;
                CHECK(holes == 1);
                CHECK_FALSE(missing[at]);
                missing[at] = true;
            }
            CHECK(found == 3);
        }
    }
}

TEST_CASE("worked instance through both reductions") {
    const QbfInstance v = load("valid3.qbf");
    CHECK(via_path(v));
    CHECK(via_ctl(v));
    const QbfInstance u = load("invalid3.qbf");
    CHECK_FALSE(via_path(u));
    CHECK_FALSE(via_ctl(u));
}

TEST_CASE("reductions agree with the reference on random instances") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 60; ++i) {
        const QbfInstance q = random_qbf(rng, 2 + i % 3, 1 + i % 2);
        INFO(render_qbf(q));
        const bool truth = valid(q);
        CHECK(via_path(q) == truth);
        CHECK(via_ctl(q) == truth);
    }
}

TEST_CASE("CTL reduction with an empty matrix") {
    QbfInstance q;
    q.names = {"x1", "x2"};
    CHECK(valid(q));
    CHECK(via_ctl(q));
    CHECK(via_path(q));
}

TEST_CASE("propositional ~ satisfiability through path checking") {
    for (const char* text : {"p", "p & ~p", "~p", "p & !p", "(p | q) & ~(p & q)", "~(p | !p)",
                             "p \\|/ (q & ~q)"}) {
        const Formula psi = parse_ltl(text);
        const auto [team, f] = reduce_plsim_to_tpc(psi);
        INFO(text);
        CHECK(check_team(team, f) == check::brute_force_plsim(psi));
    }
    CHECK(check::brute_force_plsim(parse_ltl("p")));
    CHECK_FALSE(check::brute_force_plsim(parse_ltl("p & ~p")));
    CHECK(check::brute_force_plsim(parse_ltl("~p")));
    CHECK_FALSE(check::brute_force_plsim(parse_ltl("p & !p")));
    CHECK_THROWS_AS((void)reduce_plsim_to_tpc(parse_ltl("X p")), InputError);
}
