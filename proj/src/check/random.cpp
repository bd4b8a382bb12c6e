#include "teamtl/check/random.hpp"

#include <algorithm>
#include <functional>

namespace teamtl::check {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Formula literal(Rng& rng, const FormulaShape& shape) {
    const auto& p = shape.props[uniform(rng, 0, shape.props.size() - 1)];
    return coin(rng) ? Formula::prop(p) : Formula::neg_prop(p);
}

enum class Op { And, Split, BoolOr, CNeg, X, F, G, U, R, Atom };

Formula build(Rng& rng, const FormulaShape& shape, std::size_t budget) {
    if (budget == 0) {
        const std::size_t pick = uniform(rng, 0, 19);
        if (pick == 0) return top();
        if (pick == 1) return bottom();
        return literal(rng, shape);
    }
    std::vector<Op> ops{Op::And};
    if (shape.split) ops.push_back(Op::Split);
    if (shape.boolor) ops.push_back(Op::BoolOr);
    if (shape.cneg) ops.push_back(Op::CNeg);
    if (shape.atoms) ops.push_back(Op::Atom);
    if (shape.temporal) ops.insert(ops.end(), {Op::X, Op::F, Op::G, Op::U, Op::R});
    const Op op = ops[uniform(rng, 0, ops.size() - 1)];
    const bool ctl = shape.ctl;
    const bool exists = coin(rng);
    auto binary = [&](auto make) {
        const std::size_t left = uniform(rng, 0, budget - 1);
        Formula a = build(rng, shape, left);
        Formula b = build(rng, shape, budget - 1 - left);
        return make(std::move(a), std::move(b));
    };
    auto unary = [&] { return build(rng, shape, budget - 1); };
    switch (op) {
        case Op::And: return binary(&Formula::conj);
        case Op::Split: return binary(&Formula::split);
        case Op::BoolOr: return binary(&Formula::bool_or);
        case Op::CNeg: return Formula::cneg(unary());
        case Op::X:
            if (!ctl) return Formula::next(unary());
            return exists ? Formula::ex(unary()) : Formula::ax(unary());
        case Op::F: {
            Formula c = unary();
            if (!ctl) return expand_shorthand(Shorthand::F, {&c, 1});
            return expand_shorthand(exists ? Shorthand::EF : Shorthand::AF, {&c, 1});
        }
        case Op::G: {
            Formula c = unary();
            if (!ctl) return expand_shorthand(Shorthand::G, {&c, 1});
            return expand_shorthand(exists ? Shorthand::EG : Shorthand::AG, {&c, 1});
        }
        case Op::U:
            if (!ctl) return binary(&Formula::until);
            return exists ? binary(&Formula::eu) : binary(&Formula::au);
        case Op::R:
            if (!ctl) return binary(&Formula::release);
            return exists ? binary(&Formula::er) : binary(&Formula::ar);
        case Op::Atom: {
            // Literal parameters keep the atom at length 1 regardless of
            // the remaining budget; leftover budget is spent on a conjunct.
            const bool dep = coin(rng);
            std::vector<Formula> params;
            std::size_t split;
            if (dep) {
                split = uniform(rng, 0, 1);
                for (std::size_t i = 0; i <= split; ++i) params.push_back(literal(rng, shape));
            } else {
                split = 1;
                params = {literal(rng, shape), literal(rng, shape)};
            }
            Formula a = Formula::gen_atom(dep ? "dep" : "inc", std::move(params), split);
            if (budget == 1) return a;
            return Formula::conj(std::move(a), build(rng, shape, budget - 2));
        }
    }
    return literal(rng, shape);
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
    return build(rng, shape, uniform(rng, 0, shape.max_length));
}

LassoTrace random_trace(Rng& rng, const TeamShape& shape) {
    auto letter = [&] {
        PropSet s;
        for (const auto& p : shape.props)
            if (coin(rng)) s.insert(p);
        return s;
    };
    std::vector<PropSet> prefix(uniform(rng, 0, shape.max_prefix)), loop(uniform(rng, 1, shape.max_loop));
    for (auto& l : prefix) l = letter();
    for (auto& l : loop) l = letter();
    return LassoTrace(std::move(prefix), std::move(loop));
}

TeamEncoding random_team(Rng& rng, const TeamShape& shape) {
    const std::size_t n = uniform(rng, shape.allow_empty ? 0 : 1, shape.max_traces);
    std::vector<LassoTrace> traces;
    for (std::size_t i = 0; i < n; ++i) traces.push_back(random_trace(rng, shape));
    return TeamEncoding(std::move(traces));
}

namespace {

std::string wname(std::size_t i) { return "w" + std::to_string(i); }

void random_labels(Rng& rng, KripkeDescription& d, const std::vector<std::string>& props) {
    for (const auto& w : d.worlds) {
        PropSet s;
        for (const auto& p : props)
            if (coin(rng)) s.insert(p);
        if (!s.empty()) d.labels[w] = s;
    }
}

}  // namespace

KripkeStructure random_kripke(Rng& rng, std::size_t worlds, const std::vector<std::string>& props,
                              double edge_probability) {
    KripkeDescription d;
    for (std::size_t i = 0; i < worlds; ++i) d.worlds.push_back(wname(i));
    for (std::size_t i = 0; i < worlds; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < worlds; ++j)
            if (coin(rng, edge_probability)) {
                d.edges.emplace_back(wname(i), wname(j));
                any = true;
            }
        if (!any) d.edges.emplace_back(wname(i), wname(uniform(rng, 0, worlds - 1)));
    }
    random_labels(rng, d, props);
    d.initial = wname(0);
    return KripkeStructure(d);
}

KripkeStructure random_lasso_forest(Rng& rng, std::size_t worlds,
                                    const std::vector<std::string>& props) {
    KripkeDescription d;
    for (std::size_t i = 0; i < worlds; ++i) d.worlds.push_back(wname(i));
    const std::size_t cyclic = uniform(rng, 1, std::max<std::size_t>(1, worlds / 2));
    const std::size_t transient = worlds - cyclic;
    // Cut the cyclic tail into consecutive cycles.
    for (std::size_t start = transient; start < worlds;) {
        const std::size_t len = uniform(rng, 1, worlds - start);
        for (std::size_t i = 0; i < len; ++i)
            d.edges.emplace_back(wname(start + i), wname(start + (i + 1) % len));
        start += len;
    }
    for (std::size_t i = 0; i < transient; ++i) {
        bool any = false;
        for (std::size_t j = i + 1; j < worlds; ++j)
            if (coin(rng, 0.3)) {
                d.edges.emplace_back(wname(i), wname(j));
                any = true;
            }
        if (!any) d.edges.emplace_back(wname(i), wname(uniform(rng, i + 1, worlds - 1)));
    }
    random_labels(rng, d, props);
    d.initial = wname(0);
    return KripkeStructure(d);
}

MultiTeam random_multiteam(Rng& rng, const KripkeStructure& k, std::size_t max_size) {
    std::vector<WorldId> ws(uniform(rng, 0, max_size));
    for (auto& w : ws) w = uniform(rng, 0, k.size() - 1);
    return MultiTeam::of(ws);
}

}  // namespace teamtl::check
