#include "teamtl/tmc_splitfree.hpp"

#include "teamtl/error.hpp"
#include "teamtl/eval_classical.hpp"

#include <map>
#include <string>
#include <vector>

namespace teamtl {

std::string bar_name(const std::string& p) { return "_bar_" + p; }

FlattenedTrace flatten(const KripkeStructure& k, const FlattenOptions& options) {
    if (!k.initial()) throw InputError("structure has no initial world");
    PropSet ap = k.propositions();
    ap.insert(options.extra_props.begin(), options.extra_props.end());

    std::map<WorldSet, std::size_t> seen;
    std::vector<WorldSet> sequence;
    WorldSet current(k.size(), false);
    current[*k.initial()] = true;
    while (!seen.count(current)) {
        if (sequence.size() >= options.max_subsets)
            throw ResourceError("successor-set sequence exceeds " +
                                std::to_string(options.max_subsets) + " subsets");
        seen.emplace(current, sequence.size());
        sequence.push_back(current);
        current = successor_sets_step(k, current);
    }
    const std::size_t s = seen.at(current);

    auto letter = [&](const WorldSet& set) {
        PropSet out;
        for (const auto& p : ap) {
            bool all = true, none = true;
            for (WorldId w = 0; w < k.size(); ++w) {
                if (!set[w]) continue;
                (k.label(w).count(p) ? none : all) = false;
            }
            if (all) out.insert(p);
            if (none) out.insert(bar_name(p));
        }
        return out;
    };
    std::vector<PropSet> prefix, loop;
    for (std::size_t i = 0; i < sequence.size(); ++i)
        (i < s ? prefix : loop).push_back(letter(sequence[i]));
    FlattenedTrace out{LassoTrace(std::move(prefix), std::move(loop)), s, sequence.size() - s};
    return out;
}

LtlFormula bar_rewrite(const LtlFormula& f) {
    switch (f.kind()) {
        case Kind::Prop: return f;
        case Kind::NegProp: return Formula::prop(bar_name(f.name()));
        case Kind::And: return Formula::conj(bar_rewrite(f.lhs()), bar_rewrite(f.rhs()));
        case Kind::Split: return Formula::split(bar_rewrite(f.lhs()), bar_rewrite(f.rhs()));
        case Kind::BoolOr: return Formula::bool_or(bar_rewrite(f.lhs()), bar_rewrite(f.rhs()));
        case Kind::CNeg: return Formula::cneg(bar_rewrite(f.child(0)));
        case Kind::Next: return Formula::next(bar_rewrite(f.child(0)));
        case Kind::Until: return Formula::until(bar_rewrite(f.lhs()), bar_rewrite(f.rhs()));
        case Kind::Release: return Formula::release(bar_rewrite(f.lhs()), bar_rewrite(f.rhs()));
        default: break;
    }
    throw InputError("operator " + std::string(kind_name(f.kind())) + " is not an LTL connective");
}

namespace {

// TOP must survive the rewrite: its split is evaluated classically as
// _taut or bar(_taut), and bar(_taut) holds everywhere.
void reject_unsupported(const LtlFormula& f) {
    if (is_top(f) || is_bottom(f)) return;
    if (f.kind() == Kind::Split) throw SplitjunctionPresent();
    if (f.kind() == Kind::GenAtom) throw GenAtomPresent();
    for (const auto& c : f.children()) reject_unsupported(c);
}

}  // namespace

bool check_model_splitfree(const KripkeStructure& k, const LtlFormula& f, std::size_t max_subsets) {
    reject_unsupported(f);
    if (!is_ltl(f)) throw InputError("formula is not an LTL formula");
    FlattenOptions options;
    options.max_subsets = max_subsets;
    for (const auto& p : propositions(f)) options.extra_props.insert(p);
    const FlattenedTrace flat = flatten(k, options);
    return ltl_positions(flat.trace, bar_rewrite(f), /*allow_extensions=*/true).front();
}

}  // namespace teamtl
