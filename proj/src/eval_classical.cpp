#include "teamtl/eval_classical.hpp"

#include "teamtl/error.hpp"

#include <string>
#include <unordered_map>

namespace teamtl {

namespace {

[[noreturn]] void unsupported(Kind kind) {
    throw InputError("classical semantics does not support " + std::string(kind_name(kind)));
}

class LassoLabeler {
public:
    LassoLabeler(const LassoTrace& t, bool extensions)
        : t_(t), n_(t.horizon()), extensions_(extensions) {}

    const std::vector<bool>& label(const Formula& f) {
        if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
        std::vector<bool> out(n_, false);
        switch (f.kind()) {
            case Kind::Prop:
            case Kind::NegProp: {
                const bool positive = f.kind() == Kind::Prop;
                for (std::size_t i = 0; i < n_; ++i)
                    out[i] = (t_.at(i).count(f.name()) != 0) == positive;
                break;
            }
            case Kind::And:
            case Kind::Split:
            case Kind::BoolOr: {
                if (f.kind() == Kind::BoolOr && !extensions_) unsupported(f.kind());
                const auto& l = label(f.lhs());
                const auto& r = label(f.rhs());
                const bool conj = f.kind() == Kind::And;
                for (std::size_t i = 0; i < n_; ++i) out[i] = conj ? (l[i] && r[i]) : (l[i] || r[i]);
                break;
            }
            case Kind::CNeg: {
                if (!extensions_) unsupported(f.kind());
                const auto& c = label(f.child(0));
                for (std::size_t i = 0; i < n_; ++i) out[i] = !c[i];
                break;
            }
            case Kind::Next: {
                const auto& c = label(f.child(0));
                for (std::size_t i = 0; i < n_; ++i) out[i] = c[step(i)];
                break;
            }
            case Kind::Until:
            case Kind::Release: {
                const auto& l = label(f.lhs());
                const auto& r = label(f.rhs());
                const bool until = f.kind() == Kind::Until;
                // Within n_ steps every position has been visited, so the
                // witness search below is exhaustive.
                for (std::size_t i = 0; i < n_; ++i) {
                    bool verdict = !until;
                    std::size_t j = i;
                    for (std::size_t k = 0; k <= n_; ++k, j = step(j)) {
                        if (until) {
                            if (r[j]) { verdict = true; break; }
                            if (!l[j]) { verdict = false; break; }
                        } else {
                            if (!r[j]) { verdict = false; break; }
                            if (l[j]) { verdict = true; break; }
                        }
                    }
                    out[i] = verdict;
                }
                break;
            }
            default: unsupported(f.kind());
        }
        return memo_.emplace(f.id(), std::move(out)).first->second;
    }

private:
    std::size_t step(std::size_t i) const { return i + 1 < n_ ? i + 1 : t_.prefix().size(); }

    const LassoTrace& t_;
    std::size_t n_;
    bool extensions_;
    std::unordered_map<const void*, std::vector<bool>> memo_;
};

}  // namespace

std::vector<bool> ltl_positions(const LassoTrace& t, const LtlFormula& f, bool allow_extensions) {
    return LassoLabeler(t, allow_extensions).label(f);
}

bool check_ltl_classical(const LassoTrace& t, const LtlFormula& f) {
    return ltl_positions(t, f, false).front();
}

namespace {

class CtlLabeler {
public:
    explicit CtlLabeler(const KripkeStructure& k) : k_(k), n_(k.size()) {}

    const WorldSet& label(const Formula& f) {
        if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
        WorldSet out(n_, false);
        switch (f.kind()) {
            case Kind::Prop:
            case Kind::NegProp: {
                const bool positive = f.kind() == Kind::Prop;
                for (WorldId w = 0; w < n_; ++w)
                    out[w] = (k_.label(w).count(f.name()) != 0) == positive;
                break;
            }
            case Kind::And:
            case Kind::Split: {
                const auto& l = label(f.lhs());
                const auto& r = label(f.rhs());
                const bool conj = f.kind() == Kind::And;
                for (WorldId w = 0; w < n_; ++w) out[w] = conj ? (l[w] && r[w]) : (l[w] || r[w]);
                break;
            }
            case Kind::EX:
            case Kind::AX: {
                const auto& c = label(f.child(0));
                for (WorldId w = 0; w < n_; ++w) out[w] = over_successors(w, c, f.kind() == Kind::EX);
                break;
            }
            case Kind::EU:
            case Kind::AU: {
                const auto& l = label(f.lhs());
                const auto& r = label(f.rhs());
                const bool exists = f.kind() == Kind::EU;
                out = r;
                for (bool changed = true; changed;) {
                    changed = false;
                    for (WorldId w = 0; w < n_; ++w) {
                        if (out[w] || !l[w] || !over_successors(w, out, exists)) continue;
                        out[w] = true;
                        changed = true;
                    }
                }
                break;
            }
            case Kind::ER:
            case Kind::AR: {
                const auto& l = label(f.lhs());
                const auto& r = label(f.rhs());
                const bool exists = f.kind() == Kind::ER;
                out = r;
                for (bool changed = true; changed;) {
                    changed = false;
                    for (WorldId w = 0; w < n_; ++w) {
                        if (!out[w] || l[w] || over_successors(w, out, exists)) continue;
                        out[w] = false;
                        changed = true;
                    }
                }
                break;
            }
            default: unsupported(f.kind());
        }
        return memo_.emplace(f.id(), std::move(out)).first->second;
    }

private:
    bool over_successors(WorldId w, const WorldSet& s, bool exists) const {
        for (WorldId v : k_.successors(w))
            if (s[v] == exists) return exists;
        return !exists;
    }

    const KripkeStructure& k_;
    std::size_t n_;
    std::unordered_map<const void*, WorldSet> memo_;
};

}  // namespace

WorldSet ctl_satisfying_worlds(const KripkeStructure& k, const CtlFormula& f) {
    return CtlLabeler(k).label(f);
}

bool check_ctl_classical(const KripkeStructure& k, WorldId w, const CtlFormula& f) {
    if (w >= k.size()) throw InputError("world " + std::to_string(w) + " is not in the structure");
    return ctl_satisfying_worlds(k, f)[w];
}

bool check_ctl_classical_multiset(const KripkeStructure& k, const MultiTeam& team,
                                  const CtlFormula& f) {
    for (const auto& e : team.entries())
        if (e.world >= k.size())
            throw InputError("world " + std::to_string(e.world) + " is not in the structure");
    const WorldSet sat = ctl_satisfying_worlds(k, f);
    for (const auto& e : team.entries())
        if (!sat[e.world]) return false;
    return true;
}

}  // namespace teamtl
