#include "support.hpp"

#include "teamtl/error.hpp"
#include "teamtl/formula.hpp"
#include "teamtl/parser.hpp"

#include <doctest.h>

using namespace teamtl;

TEST_CASE("precedence: U binds looser than the splitjunction") {
    const Formula f = parse_ltl("p | q U r");
    REQUIRE(f.kind() == Kind::Until);
    CHECK(f.lhs().kind() == Kind::Split);
    CHECK(f.rhs() == Formula::prop("r"));
}

TEST_CASE("precedence: & over \\|/ over |") {
    const Formula f = parse_ltl("a | b \\|/ c & d");
    REQUIRE(f.kind() == Kind::Split);
    CHECK(f.rhs().kind() == Kind::BoolOr);
    CHECK(f.rhs().rhs().kind() == Kind::And);
}

TEST_CASE("until is right associative") {
    const Formula f = parse_ltl("a U b U c");
    REQUIRE(f.kind() == Kind::Until);
    CHECK(f.lhs() == Formula::prop("a"));
    CHECK(f.rhs().kind() == Kind::Until);
}

TEST_CASE("contradictory negation extends to the right") {
    const Formula f = parse_ltl("~p & q");
    REQUIRE(f.kind() == Kind::CNeg);
    CHECK(f.child(0).kind() == Kind::And);
    const Formula g = parse_ltl("(~p) & q");
    CHECK(g.kind() == Kind::And);
}

TEST_CASE("shorthands expand to until/release with constants") {
    CHECK(parse_ltl("F p") == Formula::until(top(), Formula::prop("p")));
    CHECK(parse_ltl("G p") == Formula::release(bottom(), Formula::prop("p")));
    CHECK(parse_ctl("EF p") == Formula::eu(top(), Formula::prop("p")));
    CHECK(parse_ctl("AG p") == Formula::ar(bottom(), Formula::prop("p")));
    CHECK(parse_ltl("TOP") == top());
    CHECK(is_bottom(parse_ltl("BOT")));
}

TEST_CASE("negation is restricted to propositions") {
    CHECK(parse_ltl("!p") == Formula::neg_prop("p"));
    try {
        (void)parse_ltl("q & !(p & q)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.span().start == 4);
        CHECK(e.span().end == 6);
    }
    CHECK_THROWS_AS((void)parse_ltl("!X p"), ParseError);
}

TEST_CASE("logic-specific operators are rejected with a span") {
    CHECK_THROWS_AS((void)parse_ltl("EX p"), ParseError);
    CHECK_THROWS_AS((void)parse_ctl("X p"), ParseError);
    CHECK_THROWS_AS((void)parse_ctl("p U q"), ParseError);
    CHECK_THROWS_AS((void)parse_ctl("dep(EX p; q)"), ParseError);
    try {
        (void)parse_ltl("p & (q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.span().start == 6);
    }
}

TEST_CASE("atoms") {
    const Formula d = parse_ltl("dep(p, q; r)");
    REQUIRE(d.kind() == Kind::GenAtom);
    CHECK(d.name() == "dep");
    CHECK(d.children().size() == 3);
    CHECK(d.atom_split() == 2);
    const Formula i = parse_ltl("inc(p; q)");
    CHECK(i.atom_split() == 1);
    CHECK_THROWS_AS((void)parse_ltl("inc(p, q; r)"), ParseError);
    CHECK_THROWS_AS((void)parse_ltl("dep()"), ParseError);
    CHECK(parse_ctl("E[p U dep(p; q)]").kind() == Kind::EU);
}

TEST_CASE("comments are ignored") {
    CHECK(parse_ltl("p # trailing\n & q") == Formula::conj(Formula::prop("p"), Formula::prop("q")));
}

TEST_CASE("classify") {
    const auto dc = classify(parse_ltl("F p | dep(q; r)"));
    CHECK(dc.uses_split);
    CHECK(dc.uses_genatoms);
    CHECK(dc.downward_closed_fragment);
    CHECK_FALSE(classify(parse_ltl("inc(p; q)")).downward_closed_fragment);
    const auto neg = classify(parse_ltl("~p \\|/ q"));
    CHECK(neg.uses_cneg);
    CHECK(neg.uses_boolor);
    CHECK_FALSE(neg.downward_closed_fragment);
    // The constants hide their internal split.
    CHECK_FALSE(classify(parse_ltl("G F p")).uses_split);
}

TEST_CASE("formula length counts connectives only") {
    CHECK(formula_length(parse_ltl("p")) == 0);
    CHECK(formula_length(parse_ltl("F p")) == 1);
    CHECK(formula_length(parse_ltl("(p | q) U X r")) == 3);
    CHECK(formula_length(parse_ltl("dep(p; q & r)")) == 2);
}

TEST_CASE("structural queries") {
    const Formula f = parse_ltl("X (p & !q)");
    CHECK(is_nnf(f));
    CHECK(is_ltl(f));
    CHECK_FALSE(is_ctl(f));
    CHECK(is_pure(f));
    CHECK_FALSE(is_temporal_free(f));
    CHECK(propositions(f) == std::set<std::string>{"p", "q"});
    CHECK(postorder(f).back() == f);
}

TEST_CASE("render round-trips random formulas") {
    teamtl::check::Rng rng(7);
    for (bool ctl : {false, true}) {
        teamtl::check::FormulaShape shape;
        shape.ctl = ctl;
        shape.cneg = shape.boolor = shape.atoms = true;
        shape.max_length = 8;
        for (int i = 0; i < 2000; ++i) {
            const Formula f = teamtl::check::random_formula(rng, shape);
            const std::string text = render(f);
            INFO(text);
            CHECK((ctl ? parse_ctl(text) : parse_ltl(text)) == f);
        }
    }
}
