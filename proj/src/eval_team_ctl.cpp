#include "teamtl/eval_team_ctl.hpp"

#include "teamtl/error.hpp"
#include "teamtl/parser.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace teamtl {

namespace {

using Multiset = std::vector<WorldId>;  // sorted

struct MultisetHash {
    std::size_t operator()(const Multiset& m) const noexcept {
        std::size_t h = m.size();
        for (WorldId w : m) h = h * 1000003U ^ w;
        return h;
    }
};

enum class Fixpoint { EU, AU, ER, AR };

// Reachable part of the successor-team graph, explored breadth first.
class SuccessorGraph {
public:
    SuccessorGraph(const KripkeStructure& k, std::size_t max_states)
        : k_(k), max_states_(max_states) {}

    const std::vector<Multiset>& successors(const Multiset& m) {
        auto it = succ_.find(m);
        if (it != succ_.end()) return it->second;
        std::vector<Multiset> out;
        for (const auto& t : successor_teams(k_, MultiTeam::of(m))) out.push_back(t.multiset());
        return succ_.emplace(m, std::move(out)).first->second;
    }

    /// States reachable from `start` (start first) and successor index lists.
    void explore(const Multiset& start, std::vector<Multiset>& states,
                 std::vector<std::vector<std::size_t>>& edges) {
        std::unordered_map<Multiset, std::size_t, MultisetHash> index{{start, 0}};
        states = {start};
        edges.clear();
        for (std::size_t i = 0; i < states.size(); ++i) {
            std::vector<std::size_t> out;
            for (const auto& next : successors(states[i])) {
                auto [it, fresh] = index.emplace(next, states.size());
                if (fresh) {
                    if (states.size() >= max_states_)
                        throw ResourceError("successor-team graph exceeds " +
                                            std::to_string(max_states_) + " multisets");
                    states.push_back(next);
                }
                out.push_back(it->second);
            }
            edges.push_back(std::move(out));
        }
    }

private:
    const KripkeStructure& k_;
    std::size_t max_states_;
    std::unordered_map<Multiset, std::vector<Multiset>, MultisetHash> succ_;
};

bool over(const std::vector<std::size_t>& succ, const std::vector<bool>& z, bool exists) {
    for (std::size_t s : succ)
        if (z[s] == exists) return exists;
    return !exists;
}

// Standard (from step 0) until/release values on an explored graph.
std::vector<bool> solve(Fixpoint kind, const std::vector<std::vector<std::size_t>>& edges,
                        const std::vector<bool>& l, const std::vector<bool>& r) {
    const bool exists = kind == Fixpoint::EU || kind == Fixpoint::ER;
    const bool least = kind == Fixpoint::EU || kind == Fixpoint::AU;
    std::vector<bool> z = r;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < edges.size(); ++s) {
            if (least) {
                if (z[s] || !l[s] || !over(edges[s], z, exists)) continue;
                z[s] = true;
            } else {
                if (!z[s] || l[s] || over(edges[s], z, exists)) continue;
                z[s] = false;
            }
            changed = true;
        }
    }
    return z;
}

struct CtlNode {
    Formula f;
    std::vector<std::size_t> kids;
    bool has_cneg = false;
    const GenAtomDef* atom = nullptr;
};

bool propositional(const KripkeStructure& k, WorldId w, const Formula& f) {
    switch (f.kind()) {
        case Kind::Prop: return k.label(w).count(f.name()) != 0;
        case Kind::NegProp: return k.label(w).count(f.name()) == 0;
        case Kind::And: return propositional(k, w, f.lhs()) && propositional(k, w, f.rhs());
        case Kind::Split:
        case Kind::BoolOr: return propositional(k, w, f.lhs()) || propositional(k, w, f.rhs());
        case Kind::CNeg: return !propositional(k, w, f.child(0));
        default: break;
    }
    throw InputError("atom parameter '" + render(f) + "' is not propositional");
}

class CtlChecker {
public:
    CtlChecker(const KripkeStructure& k, const CtlCheckOptions& options)
        : k_(k),
          options_(options),
          atoms_(options.atoms ? *options.atoms : AtomRegistry::builtins()),
          graph_(k, options.max_states) {}

    bool check(const MultiTeam& team, const Formula& f) {
        for (const auto& e : team.entries())
            if (e.world >= k_.size())
                throw InputError("team member " + std::to_string(e.world) + " is not a world");
        if (team.size() > options_.max_team)
            throw ResourceError("team of " + std::to_string(team.size()) + " exceeds the cap of " +
                                std::to_string(options_.max_team));
        if (k_.size() > options_.max_worlds)
            throw ResourceError("structure with " + std::to_string(k_.size()) +
                                " worlds exceeds the cap of " + std::to_string(options_.max_worlds));
        const std::size_t root = intern(f);
        return eval(root, team.multiset());
    }

private:
    std::size_t intern(const Formula& f) {
        if (auto it = index_.find(f.id()); it != index_.end()) return it->second;
        if (is_ltl_temporal(f.kind()))
            throw InputError("LTL operator " + std::string(kind_name(f.kind())) +
                             " in a CTL formula");
        CtlNode node;
        node.f = f;
        if (f.kind() == Kind::GenAtom) {
            node.atom = &atoms_.require(f);
            for (const auto& p : f.children())
                if (!is_temporal_free(p))
                    throw InputError("atom parameter '" + render(p) + "' is not propositional");
        } else {
            for (const auto& c : f.children()) node.kids.push_back(intern(c));
        }
        node.has_cneg = f.kind() == Kind::CNeg;
        for (std::size_t c : node.kids) node.has_cneg |= nodes_[c].has_cneg;
        nodes_.push_back(std::move(node));
        memo_.emplace_back();
        index_.emplace(f.id(), nodes_.size() - 1);
        return nodes_.size() - 1;
    }

    bool eval(std::size_t node, const Multiset& m) {
        if (auto it = memo_[node].find(m); it != memo_[node].end()) return it->second;
        const Kind kind = nodes_[node].f.kind();
        if (kind == Kind::EU || kind == Kind::AU || kind == Kind::ER || kind == Kind::AR) {
            temporal(node, m);
            return memo_[node].at(m);
        }
        const bool v = compute(node, m);
        memo_[node].emplace(m, v);
        return v;
    }

    bool compute(std::size_t node, const Multiset& m) {
        const CtlNode& n = nodes_[node];
        switch (n.f.kind()) {
            case Kind::Prop:
            case Kind::NegProp: {
                const bool positive = n.f.kind() == Kind::Prop;
                for (WorldId w : m)
                    if ((k_.label(w).count(n.f.name()) != 0) != positive) return false;
                return true;
            }
            case Kind::And: return eval(n.kids[0], m) && eval(n.kids[1], m);
            case Kind::BoolOr: return eval(n.kids[0], m) || eval(n.kids[1], m);
            case Kind::CNeg: return !eval(n.kids[0], m);
            case Kind::Split: return split(node, m);
            case Kind::EX:
            case Kind::AX: {
                const bool exists = n.f.kind() == Kind::EX;
                const auto successors = graph_.successors(m);
                for (const auto& s : successors)
                    if (eval(n.kids[0], s) == exists) return exists;
                return !exists;
            }
            case Kind::GenAtom: {
                AtomStructure s;
                s.split = n.f.atom_split();
                for (WorldId w : m) {
                    std::vector<bool> row;
                    for (const auto& p : n.f.children()) row.push_back(propositional(k_, w, p));
                    s.rows.push_back(std::move(row));
                }
                return n.atom->evaluator(s);
            }
            default: break;
        }
        throw InputError("unsupported operator " + std::string(kind_name(n.f.kind())));
    }

    bool split(std::size_t node, const Multiset& m) {
        const CtlNode& n = nodes_[node];
        const std::size_t l = n.kids[0], r = n.kids[1];
        if (!n.has_cneg) {
            // Sub-multisets: choose how many copies of each world go left.
            std::vector<std::pair<WorldId, std::size_t>> groups;
            for (WorldId w : m) {
                if (groups.empty() || groups.back().first != w) groups.emplace_back(w, 0);
                ++groups.back().second;
            }
            std::vector<std::size_t> take(groups.size(), 0);
            while (true) {
                Multiset a, b;
                for (std::size_t g = 0; g < groups.size(); ++g) {
                    a.insert(a.end(), take[g], groups[g].first);
                    b.insert(b.end(), groups[g].second - take[g], groups[g].first);
                }
                if (eval(l, a) && eval(r, b)) return true;
                std::size_t g = 0;
                while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
                if (g == groups.size()) return false;
                ++take[g];
            }
        }
        // Covers over index positions: each entry goes left, right or both.
        std::set<std::pair<Multiset, Multiset>> tried;
        std::size_t total = 1;
        for (std::size_t i = 0; i < m.size(); ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Multiset a, b;
            std::size_t c = code;
            for (WorldId w : m) {
                const std::size_t side = c % 3;
                c /= 3;
                if (side != 1) a.push_back(w);
                if (side != 0) b.push_back(w);
            }
            if (!tried.emplace(a, b).second) continue;
            if (eval(l, a) && eval(r, b)) return true;
        }
        return false;
    }

    void temporal(std::size_t node, const Multiset& start) {
        const CtlNode& n = nodes_[node];
        const Fixpoint kind = n.f.kind() == Kind::EU   ? Fixpoint::EU
                              : n.f.kind() == Kind::AU ? Fixpoint::AU
                              : n.f.kind() == Kind::ER ? Fixpoint::ER
                                                       : Fixpoint::AR;
        std::vector<Multiset> states;
        std::vector<std::vector<std::size_t>> edges;
        graph_.explore(start, states, edges);
        std::vector<bool> l(states.size()), r(states.size());
        for (std::size_t s = 0; s < states.size(); ++s) {
            l[s] = eval(n.kids[0], states[s]);
            r[s] = eval(n.kids[1], states[s]);
        }
        const std::vector<bool> z = solve(kind, edges, l, r);
        const bool exists = kind == Fixpoint::EU || kind == Fixpoint::ER;
        for (std::size_t s = 0; s < states.size(); ++s) {
            bool v = z[s];
            if (options_.until_from_one) {
                // Step 0 needs only the right operand (until) or must pair it
                // with a continuation (release); later steps as usual.
                const bool next = over(edges[s], z, exists);
                v = (kind == Fixpoint::EU || kind == Fixpoint::AU) ? (r[s] || next)
                                                                   : (r[s] && next);
            }
            memo_[node].emplace(states[s], v);
        }
    }

    const KripkeStructure& k_;
    CtlCheckOptions options_;
    const AtomRegistry& atoms_;
    SuccessorGraph graph_;
    std::vector<CtlNode> nodes_;
    std::vector<std::unordered_map<Multiset, bool, MultisetHash>> memo_;
    std::unordered_map<const void*, std::size_t> index_;
};

}  // namespace

bool mc_ctl(const KripkeStructure& k, const MultiTeam& team, const CtlFormula& f,
            const CtlCheckOptions& options) {
    return CtlChecker(k, options).check(team, f);
}

bool successor_graph_reach(const KripkeStructure& k, const MultiTeam& t0,
                           const TeamPredicate& invariant, const TeamPredicate& target,
                           PathMode mode, std::size_t max_states) {
    for (const auto& e : t0.entries())
        if (e.world >= k.size())
            throw InputError("team member " + std::to_string(e.world) + " is not a world");
    SuccessorGraph graph(k, max_states);
    std::vector<Multiset> states;
    std::vector<std::vector<std::size_t>> edges;
    graph.explore(t0.multiset(), states, edges);
    std::vector<bool> l(states.size()), r(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        const MultiTeam t = MultiTeam::of(states[s]);
        l[s] = invariant(t);
        r[s] = target(t);
    }
    return solve(mode == PathMode::E ? Fixpoint::EU : Fixpoint::AU, edges, l, r)[0];
}

}  // namespace teamtl
