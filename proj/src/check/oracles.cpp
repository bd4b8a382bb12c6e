#include "teamtl/check/oracles.hpp"

#include "teamtl/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace teamtl::check {

namespace {

using Tuple = std::vector<WorldId>;

bool contains_cneg(const Formula& f) {
    if (f.kind() == Kind::CNeg) return true;
    for (const auto& c : f.children())
        if (contains_cneg(c)) return true;
    return false;
}

bool world_satisfies(const KripkeStructure& k, WorldId w, const Formula& f) {
    switch (f.kind()) {
        case Kind::Prop: return k.label(w).count(f.name()) > 0;
        case Kind::NegProp: return k.label(w).count(f.name()) == 0;
        case Kind::And: return world_satisfies(k, w, f.lhs()) && world_satisfies(k, w, f.rhs());
        case Kind::CNeg: return !world_satisfies(k, w, f.child(0));
        default: return world_satisfies(k, w, f.lhs()) || world_satisfies(k, w, f.rhs());
    }
}

class TupleEvaluator {
public:
    TupleEvaluator(const KripkeStructure& k, const AtomRegistry& atoms) : k_(k), atoms_(atoms) {}

    bool sat(const Tuple& t, const Formula& f) {
        switch (f.kind()) {
            case Kind::Prop:
            case Kind::NegProp:
                return std::all_of(t.begin(), t.end(),
                                   [&](WorldId w) { return world_satisfies(k_, w, f); });
            case Kind::And: return sat(t, f.lhs()) && sat(t, f.rhs());
            case Kind::BoolOr: return sat(t, f.lhs()) || sat(t, f.rhs());
            case Kind::CNeg: return !sat(t, f.child(0));
            case Kind::Split: {
                const bool covers = contains_cneg(f.lhs()) || contains_cneg(f.rhs());
                const std::size_t choices = covers ? 3 : 2;
                std::size_t total = 1;
                for (std::size_t i = 0; i < t.size(); ++i) total *= choices;
                for (std::size_t code = 0; code < total; ++code) {
                    Tuple a, b;
                    std::size_t c = code;
                    for (WorldId w : t) {
                        const std::size_t side = c % choices;
                        c /= choices;
                        if (side != 1) a.push_back(w);
                        if (side != 0) b.push_back(w);
                    }
                    if (sat(a, f.lhs()) && sat(b, f.rhs())) return true;
                }
                return false;
            }
            case Kind::EX:
            case Kind::AX: {
                const bool exists = f.kind() == Kind::EX;
                for (const auto& s : successors(t))
                    if (sat(s, f.child(0)) == exists) return exists;
                return !exists;
            }
            case Kind::EU:
            case Kind::AU:
            case Kind::ER:
            case Kind::AR: return unrolled(t, f);
            case Kind::GenAtom: {
                AtomStructure s;
                s.split = f.atom_split();
                for (WorldId w : t) {
                    std::vector<bool> row;
                    for (const auto& p : f.children()) row.push_back(world_satisfies(k_, w, p));
                    s.rows.push_back(row);
                }
                return atoms_.require(f).evaluator(s);
            }
            default: break;
        }
        throw InputError("brute-force CTL: unsupported operator");
    }

private:
    // Cartesian product of member successors, index order preserved.
    std::vector<Tuple> successors(const Tuple& t) const {
        std::vector<Tuple> out{Tuple{}};
        for (WorldId w : t) {
            std::vector<Tuple> next;
            for (const auto& partial : out)
                for (WorldId v : k_.successors(w)) {
                    Tuple e = partial;
                    e.push_back(v);
                    next.push_back(std::move(e));
                }
            out = std::move(next);
        }
        return out;
    }

    std::vector<Tuple> all_tuples(std::size_t n) const {
        std::vector<Tuple> out{Tuple{}};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Tuple> next;
            for (const auto& partial : out)
                for (WorldId w = 0; w < k_.size(); ++w) {
                    Tuple e = partial;
                    e.push_back(w);
                    next.push_back(std::move(e));
                }
            out = std::move(next);
        }
        return out;
    }

    // Value after depth-many unrollings over every tuple of the same length.
    bool unrolled(const Tuple& t, const Formula& f) {
        const auto key = std::make_pair(f.id(), t.size());
        auto it = tables_.find(key);
        if (it == tables_.end()) {
            const bool exists = f.kind() == Kind::EU || f.kind() == Kind::ER;
            const bool until = f.kind() == Kind::EU || f.kind() == Kind::AU;
            const auto tuples = all_tuples(t.size());
            std::map<Tuple, bool> l, r, v;
            for (const auto& u : tuples) {
                l[u] = sat(u, f.lhs());
                r[u] = sat(u, f.rhs());
                v[u] = !until;
            }
            std::size_t depth = 1;
            for (std::size_t i = 0; i < t.size(); ++i) depth *= k_.size();
            for (std::size_t step = 0; step <= depth; ++step) {
                std::map<Tuple, bool> next;
                for (const auto& u : tuples) {
                    bool any = false, all = true;
                    for (const auto& s : successors(u)) {
                        any = any || v[s];
                        all = all && v[s];
                    }
                    const bool cont = exists ? any : all;
                    next[u] = until ? (r[u] || (l[u] && cont)) : (r[u] && (l[u] || cont));
                }
                v = std::move(next);
            }
            it = tables_.emplace(key, std::move(v)).first;
        }
        return it->second.at(t);
    }

    const KripkeStructure& k_;
    const AtomRegistry& atoms_;
    std::map<std::pair<const void*, std::size_t>, std::map<Tuple, bool>> tables_;
};

}  // namespace

bool brute_force_ctl(const KripkeStructure& k, const MultiTeam& team, const CtlFormula& f,
                     const AtomRegistry& atoms) {
    Tuple t;
    for (const auto& e : team.entries()) t.push_back(e.world);
    return TupleEvaluator(k, atoms).sat(t, f);
}

bool brute_force_successor(const KripkeStructure& k, const MultiTeam& from, const MultiTeam& to) {
    if (from.size() != to.size()) return false;
    const auto target = to.multiset();
    const auto& entries = from.entries();
    std::vector<WorldId> image(entries.size());
    auto choose = [&](auto&& self, std::size_t i) -> bool {
        if (i == entries.size()) {
            auto sorted = image;
            std::sort(sorted.begin(), sorted.end());
            return sorted == target;
        }
        for (WorldId v : k.successors(entries[i].world)) {
            image[i] = v;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return choose(choose, 0);
}

namespace {

using Assignment = std::vector<bool>;

// Teams are bitmasks over the list of all assignments; results are cached
// per (subformula, team) since nested covers revisit the same subteams.
class PlEvaluator {
public:
    PlEvaluator(std::vector<std::string> props, std::vector<Assignment> all)
        : props_(std::move(props)), all_(std::move(all)) {}

    bool sat(std::uint32_t team, const Formula& f) {
        const auto key = std::make_pair(f.id(), team);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const bool v = compute(team, f);
        memo_.emplace(key, v);
        return v;
    }

private:
    bool compute(std::uint32_t team, const Formula& f) {
        switch (f.kind()) {
            case Kind::Prop:
            case Kind::NegProp: {
                const auto it = std::find(props_.begin(), props_.end(), f.name());
                for (std::size_t i = 0; i < all_.size(); ++i) {
                    if (!((team >> i) & 1U)) continue;
                    const bool value =
                        it != props_.end() && all_[i][static_cast<std::size_t>(it - props_.begin())];
                    if (value != (f.kind() == Kind::Prop)) return false;
                }
                return true;
            }
            case Kind::And: return sat(team, f.lhs()) && sat(team, f.rhs());
            case Kind::BoolOr: return sat(team, f.lhs()) || sat(team, f.rhs());
            case Kind::CNeg: return !sat(team, f.child(0));
            case Kind::Split: {
                std::vector<std::size_t> members;
                for (std::size_t i = 0; i < all_.size(); ++i)
                    if ((team >> i) & 1U) members.push_back(i);
                std::size_t total = 1;
                for (std::size_t i = 0; i < members.size(); ++i) total *= 3;
                for (std::size_t code = 0; code < total; ++code) {
                    std::uint32_t a = 0, b = 0;
                    std::size_t c = code;
                    for (std::size_t m : members) {
                        const std::size_t side = c % 3;
                        c /= 3;
                        if (side != 1) a |= 1U << m;
                        if (side != 0) b |= 1U << m;
                    }
                    if (sat(a, f.lhs()) && sat(b, f.rhs())) return true;
                }
                return false;
            }
            default: break;
        }
        throw InputError("propositional oracle: unsupported operator");
    }

    std::vector<std::string> props_;
    std::vector<Assignment> all_;
    std::map<std::pair<const void*, std::uint32_t>, bool> memo_;
};

}  // namespace

bool brute_force_plsim(const Formula& psi) {
    std::vector<std::string> props;
    for (const auto& p : propositions(psi))
        if (p != kTautProp) props.push_back(p);
    if (props.size() > 4) throw ResourceError("propositional oracle: more than 4 variables");
    std::vector<Assignment> all;
    for (std::size_t bits = 0; bits < (std::size_t{1} << props.size()); ++bits) {
        Assignment a(props.size());
        for (std::size_t i = 0; i < props.size(); ++i) a[i] = (bits >> i) & 1U;
        all.push_back(a);
    }
    const std::uint32_t count = static_cast<std::uint32_t>(all.size());
    PlEvaluator eval(props, std::move(all));
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << count); ++subset)
        if (eval.sat(subset, psi)) return true;
    return false;
}

}  // namespace teamtl::check
