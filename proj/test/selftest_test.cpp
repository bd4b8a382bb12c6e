#include "support.hpp"

#include "teamtl/check/selftest.hpp"
#include "teamtl/eval_team_ltl.hpp"

#include <doctest.h>

using namespace teamtl;

TEST_CASE("selftest is deterministic per seed") {
    check::SelftestOptions o;
    o.count = 60;
    o.seed = 5;
    const auto a = check::run_selftest(o);
    const auto b = check::run_selftest(o);
    CHECK(a.ok());
    CHECK(a.instances == b.instances);
    CHECK(a.digest == b.digest);
    o.seed = 6;
    CHECK(check::run_selftest(o).digest != a.digest);
}

TEST_CASE("selftest passes with the pinned fixtures") {
    check::SelftestOptions o;
    o.count = 40;
    o.fixtures = support::fixtures();
    const auto r = check::run_selftest(o);
    CHECK(r.ok());
    CHECK(r.instances >= 16);
}

TEST_CASE("selftest catches broken evaluators") {
    check::SelftestOptions o;
    o.count = 200;
    // Splits evaluated with disjoint halves even above ~ and inclusion.
    o.team_checker = [](const TeamEncoding& t, const LtlFormula& f) {
        TeamCheckOptions c;
        c.strategy = SplitStrategy::DisjointOnly;
        return check_team(t, f, c);
    };
    o.fixtures = support::fixtures();
    const auto disjoint = check::run_selftest(o);
    CHECK(disjoint.mismatches > 0);
    CHECK_FALSE(disjoint.failures.empty());
    o.fixtures.reset();

    o.team_checker = [](const TeamEncoding& t, const LtlFormula& f) {
        return t.size() == 0 || !check_team(t, f);
    };
    CHECK(check::run_selftest(o).mismatches > 0);

    o.fixtures = support::fixtures();
    o.count = 0;
    o.team_checker = [](const TeamEncoding&, const LtlFormula&) { return true; };
    CHECK(check::run_selftest(o).mismatches > 0);  // union counterexample
}
