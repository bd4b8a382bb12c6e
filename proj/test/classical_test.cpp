#include "support.hpp"

#include "teamtl/error.hpp"
#include "teamtl/eval_classical.hpp"
#include "teamtl/parser.hpp"

#include <doctest.h>

using namespace teamtl;
using support::lasso;

namespace {

// Reference semantics on explicit suffixes with a generous witness bound.
bool reference(const LassoTrace& t, const Formula& f) {
    const std::size_t bound = 3 * t.horizon() + 2;
    switch (f.kind()) {
        case Kind::Prop: return t.at(0).count(f.name()) > 0;
        case Kind::NegProp: return t.at(0).count(f.name()) == 0;
        case Kind::And: return reference(t, f.lhs()) && reference(t, f.rhs());
        case Kind::Split: return reference(t, f.lhs()) || reference(t, f.rhs());
        case Kind::Next: return reference(suffix_trace(t, 1), f.child(0));
        case Kind::Until:
            for (std::size_t k = 0; k <= bound; ++k) {
                if (reference(suffix_trace(t, k), f.rhs())) return true;
                if (!reference(suffix_trace(t, k), f.lhs())) return false;
            }
            return false;
        case Kind::Release:
            for (std::size_t k = 0; k <= bound; ++k) {
                if (!reference(suffix_trace(t, k), f.rhs())) return false;
                if (reference(suffix_trace(t, k), f.lhs())) return true;
            }
            return true;
        default: throw InputError("reference: unsupported");
    }
}

}  // namespace

TEST_CASE("classical LTL examples") {
    const PropSet P{"p"}, E{};
    CHECK(check_ltl_classical(lasso({E, P}, {E}), parse_ltl("F p")));
    CHECK_FALSE(check_ltl_classical(lasso({E, P}, {E}), parse_ltl("G F p")));
    CHECK(check_ltl_classical(lasso({}, {E, P}), parse_ltl("G F p")));
    CHECK(check_ltl_classical(lasso({P}, {E}), parse_ltl("p | q")));
    CHECK(check_ltl_classical(lasso({}, {P}), parse_ltl("G p")));
    CHECK(check_ltl_classical(lasso({}, {E}), parse_ltl("q R !p")));
    CHECK_THROWS_AS((void)check_ltl_classical(lasso({}, {E}), parse_ltl("~p")), InputError);
    CHECK_THROWS_AS((void)check_ltl_classical(lasso({}, {E}), parse_ltl("dep(p; q)")), InputError);
}

TEST_CASE("classical LTL agrees with suffix-based reference") {
    teamtl::check::Rng rng(21);
    teamtl::check::FormulaShape shape;
    shape.max_length = 7;
    teamtl::check::TeamShape traces;
    traces.max_prefix = 3;
    traces.max_loop = 3;
    for (int i = 0; i < 2000; ++i) {
        const Formula f = teamtl::check::random_formula(rng, shape);
        const LassoTrace t = teamtl::check::random_trace(rng, traces);
        INFO(render(f));
        CHECK(check_ltl_classical(t, f) == reference(t, f));
    }
}

TEST_CASE("classical CTL examples") {
    const KripkeStructure k(KripkeDescription{{"r", "a", "b"},
                                              {{"r", "a"}, {"r", "b"}, {"a", "a"}, {"b", "r"}},
                                              {{"a", {"p"}}},
                                              "r"});
    const WorldId r = k.world("r"), a = k.world("a"), b = k.world("b");
    CHECK(check_ctl_classical(k, r, parse_ctl("EF p")));
    CHECK_FALSE(check_ctl_classical(k, r, parse_ctl("AF p")));
    CHECK(check_ctl_classical(k, r, parse_ctl("EG !p")));
    CHECK(check_ctl_classical(k, a, parse_ctl("AG p")));
    CHECK(check_ctl_classical(k, b, parse_ctl("AX !p")));
    CHECK(check_ctl_classical(k, r, parse_ctl("E[!p U p]")));
    CHECK(check_ctl_classical(k, r, parse_ctl("A[p R !p] | EX p")));
    CHECK(check_ctl_classical_multiset(k, MultiTeam::of({r, b, b}), parse_ctl("EF p")));
    CHECK_FALSE(check_ctl_classical_multiset(k, MultiTeam::of({r, a}), parse_ctl("!p")));
    CHECK_THROWS_AS((void)check_ctl_classical(k, 9, parse_ctl("p")), InputError);
}
