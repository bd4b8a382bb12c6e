#include "teamtl/eval_team_ltl.hpp"

#include "teamtl/error.hpp"
#include "teamtl/eval_classical.hpp"
#include "teamtl/parser.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace teamtl {

namespace {

using Mask = std::uint64_t;

std::size_t position_in(const LassoTrace& t, std::size_t offset) {
    const std::size_t p = t.prefix().size();
    return offset < p ? offset : p + (offset - p) % t.loop().size();
}

std::string members(Mask m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < 64; ++i) {
        if (!(m >> i & 1U)) continue;
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + "}";
}

struct NodeInfo {
    Formula f;
    bool downward_closed = true;  // no CNeg or non-DC atom below
    std::vector<std::size_t> kids;
    const GenAtomDef* atom = nullptr;
    // Per trace: truth of each atom parameter at every position of that trace.
    std::vector<std::vector<std::vector<bool>>> param_truth;
};

class TeamChecker {
public:
    TeamChecker(const TeamEncoding& team, const Formula& root, const TeamCheckOptions& options)
        : traces_(team.traces()),
          n_(team.size()),
          prefix_(prfx(team)),
          period_(lcm_loop(team)),
          horizon_(prefix_ + period_),
          options_(options),
          atoms_(options.atoms ? *options.atoms : AtomRegistry::builtins()) {
        if (n_ > kMaxTeamBits)
            throw ResourceError("team of " + std::to_string(n_) + " traces exceeds the limit of " +
                                std::to_string(kMaxTeamBits));
        if (n_ > options.max_team && classify(root, atoms_).uses_split)
            throw ResourceError("team of " + std::to_string(n_) +
                                " traces exceeds the split enumeration cap of " +
                                std::to_string(options.max_team));
        root_ = intern(root);
        build_representatives();
    }

    bool check() { return eval(root_, 0, full()); }

    void explain(std::ostream& out) {
        const bool verdict = check();
        out << (verdict ? "SAT" : "UNSAT") << '\n';
        explain_node(out, root_, 0, full(), 1);
    }

private:
    Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

    std::size_t norm(std::size_t o) const {
        return o < horizon_ ? o : prefix_ + (o - prefix_) % period_;
    }

    std::size_t intern(const Formula& f) {
        if (auto it = index_.find(f.id()); it != index_.end()) return it->second;
        NodeInfo info;
        info.f = f;
        for (const auto& c : f.children()) {
            // Atom parameters are evaluated classically, not as team formulas.
            if (f.kind() == Kind::GenAtom) break;
            info.kids.push_back(intern(c));
        }
        for (std::size_t k : info.kids) info.downward_closed &= nodes_[k].downward_closed;
        if (f.kind() == Kind::CNeg) info.downward_closed = false;
        if (f.kind() == Kind::GenAtom) {
            info.atom = &atoms_.require(f);
            info.downward_closed = info.atom->downward_closed;
            for (const auto& p : f.children())
                if (!is_pure(p) || !is_ltl(p))
                    throw InputError("atom parameter '" + render(p) +
                                     "' is not a classical LTL formula");
            for (const auto& t : traces_) {
                std::vector<std::vector<bool>> per_param;
                for (const auto& p : f.children()) per_param.push_back(ltl_positions(t, p));
                info.param_truth.push_back(std::move(per_param));
            }
        }
        if (is_ctl_temporal(f.kind()))
            throw InputError("CTL operator " + std::string(kind_name(f.kind())) +
                             " in an LTL formula");
        nodes_.push_back(std::move(info));
        const std::size_t id = nodes_.size() - 1;
        index_.emplace(f.id(), id);
        return id;
    }

    // rep_[o][t]: smallest trace index whose suffix at offset o equals t's.
    void build_representatives() {
        rep_.assign(horizon_, std::vector<std::uint8_t>(n_, 0));
        for (std::size_t o = 0; o < horizon_; ++o) {
            std::vector<LassoTrace> suffixes;
            suffixes.reserve(n_);
            for (const auto& t : traces_) suffixes.push_back(canonicalize(suffix_trace(t, o)));
            for (std::size_t i = 0; i < n_; ++i) {
                std::size_t r = i;
                for (std::size_t j = 0; j < i; ++j)
                    if (suffixes[j] == suffixes[i]) {
                        r = j;
                        break;
                    }
                rep_[o][i] = static_cast<std::uint8_t>(r);
            }
        }
    }

    Mask dedup(Mask m, std::size_t o) const {
        Mask out = 0;
        for (; m; m &= m - 1) out |= Mask{1} << rep_[o][static_cast<std::size_t>(std::countr_zero(m))];
        return out;
    }

    struct Key {
        Mask mask;
        std::uint64_t node_offset;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<std::uint64_t>{}(k.mask * 0x9E3779B97F4A7C15ULL ^ k.node_offset);
        }
    };

    bool eval(std::size_t node, std::size_t offset, Mask mask) {
        const std::size_t o = norm(offset);
        mask = dedup(mask, o);
        const Key key{mask, (static_cast<std::uint64_t>(node) << 32) | o};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const bool v = compute(node, o, mask);
        memo_.emplace(key, v);
        return v;
    }

    bool literal(const NodeInfo& info, std::size_t o, Mask mask) const {
        const bool positive = info.f.kind() == Kind::Prop;
        for (; mask; mask &= mask - 1) {
            const auto& t = traces_[static_cast<std::size_t>(std::countr_zero(mask))];
            if ((t.at(o).count(info.f.name()) != 0) != positive) return false;
        }
        return true;
    }

    bool atom(const NodeInfo& info, std::size_t o, Mask mask) const {
        AtomStructure s;
        s.split = info.f.atom_split();
        for (; mask; mask &= mask - 1) {
            const auto t = static_cast<std::size_t>(std::countr_zero(mask));
            const std::size_t pos = position_in(traces_[t], o);
            std::vector<bool> row;
            for (const auto& column : info.param_truth[t]) row.push_back(column[pos]);
            s.rows.push_back(std::move(row));
        }
        return info.atom->evaluator(s);
    }

    bool use_disjoint(const NodeInfo& info) const {
        if (options_.strategy) return *options_.strategy == SplitStrategy::DisjointOnly;
        return info.downward_closed;
    }

    // Calls visit(left, right) on every candidate split until it returns true.
    template <typename Visit>
    bool for_each_split(std::size_t node, std::size_t o, Mask mask, Visit visit) {
        const NodeInfo& info = nodes_[node];
        const std::size_t l = info.kids[0], r = info.kids[1];
        if (use_disjoint(info)) {
            Mask must_left = 0, must_right = 0, free = mask;
            if (nodes_[l].downward_closed && nodes_[r].downward_closed) {
                // Downward closure: a trace that fails a side on its own can
                // never be placed on that side.
                for (Mask m = mask; m; m &= m - 1) {
                    const Mask bit = m & (~m + 1);
                    const bool ok_l = eval(l, o, bit), ok_r = eval(r, o, bit);
                    if (!ok_l && !ok_r) return false;
                    if (!ok_l) must_right |= bit;
                    if (!ok_r) must_left |= bit;
                }
                free = mask & ~must_left & ~must_right;
            }
            for (Mask sub = free;; sub = (sub - 1) & free) {
                const Mask left = must_left | sub;
                if (visit(left, mask & ~left)) return true;
                if (sub == 0) break;
            }
            return false;
        }
        for (Mask a = mask;; a = (a - 1) & mask) {
            const Mask rest = mask & ~a;
            for (Mask extra = a;; extra = (extra - 1) & a) {
                if (visit(a, rest | extra)) return true;
                if (extra == 0) break;
            }
            if (a == 0) break;
        }
        return false;
    }

    bool compute(std::size_t node, std::size_t o, Mask mask) {
        const NodeInfo& info = nodes_[node];
        switch (info.f.kind()) {
            case Kind::Prop:
            case Kind::NegProp: return literal(info, o, mask);
            case Kind::And: return eval(info.kids[0], o, mask) && eval(info.kids[1], o, mask);
            case Kind::BoolOr: return eval(info.kids[0], o, mask) || eval(info.kids[1], o, mask);
            case Kind::CNeg: return !eval(info.kids[0], o, mask);
            case Kind::GenAtom: return atom(info, o, mask);
            case Kind::Split:
                return for_each_split(node, o, mask, [&](Mask a, Mask b) {
                    return eval(info.kids[0], o, a) && eval(info.kids[1], o, b);
                });
            case Kind::Next: return eval(info.kids[0], o + 1, mask);
            case Kind::Until:
            case Kind::Release: return temporal_witness(node, o, mask).first;
            default: break;
        }
        throw InputError("unsupported operator " + std::string(kind_name(info.f.kind())));
    }

    // Verdict and the deciding step k.
    std::pair<bool, std::size_t> temporal_witness(std::size_t node, std::size_t o, Mask mask) {
        const NodeInfo& info = nodes_[node];
        const bool until = info.f.kind() == Kind::Until;
        const std::size_t l = info.kids[0], r = info.kids[1];
        for (std::size_t k = 0; k <= horizon_; ++k) {
            const bool rv = eval(r, o + k, mask);
            if (until && rv) return {true, k};
            if (!until && !rv) return {false, k};
            const bool lv = eval(l, o + k, mask);
            if (until && !lv) return {false, k};
            if (!until && lv) return {true, k};
        }
        return {!until, horizon_};
    }

    void explain_node(std::ostream& out, std::size_t node, std::size_t offset, Mask mask,
                      int depth) {
        const std::size_t o = norm(offset);
        mask = dedup(mask, o);
        const NodeInfo& info = nodes_[node];
        const bool v = eval(node, o, mask);
        out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << (v ? "[+] " : "[-] ")
            << render(info.f) << "  @" << offset << " team " << members(mask);
        switch (info.f.kind()) {
            case Kind::Split: {
                Mask left = 0, right = 0;
                const bool found = for_each_split(node, o, mask, [&](Mask a, Mask b) {
                    if (eval(info.kids[0], o, a) && eval(info.kids[1], o, b)) {
                        left = a;
                        right = b;
                        return true;
                    }
                    return false;
                });
                if (!found) {
                    out << "  (no split works)\n";
                    return;
                }
                out << "  split " << members(left) << " | " << members(right) << '\n';
                explain_node(out, info.kids[0], offset, left, depth + 1);
                explain_node(out, info.kids[1], offset, right, depth + 1);
                return;
            }
            case Kind::Until:
            case Kind::Release: {
                const auto [verdict, k] = temporal_witness(node, o, mask);
                out << "  decided at step " << k << '\n';
                const bool until = info.f.kind() == Kind::Until;
                // The deciding operand at step k, plus the other operand there
                // when it contributed.
                const bool r_decides = until ? verdict : !verdict;
                explain_node(out, info.kids[r_decides ? 1 : 0], offset + k, mask, depth + 1);
                if (!r_decides) explain_node(out, info.kids[1], offset + k, mask, depth + 1);
                return;
            }
            default: break;
        }
        out << '\n';
        if (info.f.kind() == Kind::Next) {
            explain_node(out, info.kids[0], offset + 1, mask, depth + 1);
            return;
        }
        for (std::size_t k : info.kids) explain_node(out, k, offset, mask, depth + 1);
    }

    const std::vector<LassoTrace>& traces_;
    std::size_t n_;
    std::size_t prefix_;
    std::size_t period_;
    std::size_t horizon_;
    TeamCheckOptions options_;
    const AtomRegistry& atoms_;
    std::vector<NodeInfo> nodes_;
    std::unordered_map<const void*, std::size_t> index_;
    std::size_t root_ = 0;
    std::vector<std::vector<std::uint8_t>> rep_;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace

bool check_team(const TeamEncoding& team, const LtlFormula& f, const TeamCheckOptions& options) {
    return TeamChecker(team, f, options).check();
}

std::string explain_team(const TeamEncoding& team, const LtlFormula& f,
                         const TeamCheckOptions& options) {
    std::ostringstream out;
    TeamChecker(team, f, options).explain(out);
    return out.str();
}

std::vector<bool> atom_row(const LassoTrace& t, std::span<const LtlFormula> params) {
    std::vector<bool> row;
    row.reserve(params.size());
    for (const auto& p : params) {
        if (!is_pure(p) || !is_ltl(p))
            throw InputError("atom parameter '" + render(p) + "' is not a classical LTL formula");
        row.push_back(check_ltl_classical(t, p));
    }
    return row;
}

bool eval_gen_atom(const TeamEncoding& team, const GenAtomDef& atom,
                   std::span<const LtlFormula> params, std::size_t split) {
    if (atom.arity != 0 && atom.arity != params.size())
        throw InputError("atom '" + atom.name + "' expects " + std::to_string(atom.arity) +
                         " parameters");
    if (atom.check_shape) atom.check_shape(params.size(), split);
    AtomStructure s;
    s.split = split;
    for (const auto& t : team) s.rows.push_back(atom_row(t, params));
    return atom.evaluator(s);
}

}  // namespace teamtl
