#include "teamtl/kripke.hpp"

#include "teamtl/error.hpp"
#include "teamtl/parser.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace teamtl {

std::vector<std::string> validate(const KripkeDescription& desc) {
    std::vector<std::string> errors;
    std::set<std::string> declared;
    if (desc.worlds.empty()) errors.emplace_back("structure has no worlds");
    for (const auto& w : desc.worlds) {
        if (w.empty()) errors.emplace_back("empty world name");
        if (!declared.insert(w).second) errors.push_back("duplicate world '" + w + "'");
    }
    std::set<std::string> has_successor;
    for (const auto& [from, to] : desc.edges) {
        bool ok = true;
        for (const auto* end : {&from, &to}) {
            if (!declared.count(*end)) {
                errors.push_back("edge " + from + " -> " + to + " uses undeclared world '" + *end +
                                 "'");
                ok = false;
            }
        }
        if (ok) has_successor.insert(from);
    }
    for (const auto& w : desc.worlds)
        if (!w.empty() && !has_successor.count(w))
            errors.push_back("world '" + w + "' has no successor (not left-total)");
    for (const auto& [w, props] : desc.labels) {
        if (!declared.count(w)) errors.push_back("label for undeclared world '" + w + "'");
        for (const auto& p : props)
            if (!is_identifier(p))
                errors.push_back("world '" + w + "' carries invalid proposition '" + p + "'");
    }
    if (desc.initial && !declared.count(*desc.initial))
        errors.push_back("initial world '" + *desc.initial + "' is not declared");
    return errors;
}

KripkeStructure::KripkeStructure(const KripkeDescription& desc) {
    if (auto errors = validate(desc); !errors.empty()) {
        std::string msg = "invalid Kripke structure:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw InputError(msg);
    }
    names_ = desc.worlds;
    for (WorldId i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
    succ_.resize(names_.size());
    for (const auto& [from, to] : desc.edges) succ_[world(from)].push_back(world(to));
    for (auto& s : succ_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    labels_.resize(names_.size());
    for (const auto& [w, props] : desc.labels) labels_[world(w)] = props;
    if (desc.initial) initial_ = world(*desc.initial);
}

WorldId KripkeStructure::world(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("unknown world '" + name + "'");
    return it->second;
}

bool KripkeStructure::has_world(const std::string& name) const { return index_.count(name) != 0; }

bool KripkeStructure::has_edge(WorldId from, WorldId to) const {
    const auto& s = succ_.at(from);
    return std::binary_search(s.begin(), s.end(), to);
}

PropSet KripkeStructure::propositions() const {
    PropSet out;
    for (const auto& l : labels_) out.insert(l.begin(), l.end());
    return out;
}

KripkeDescription KripkeStructure::description() const {
    KripkeDescription d;
    d.worlds = names_;
    for (WorldId w = 0; w < names_.size(); ++w) {
        for (WorldId v : succ_[w]) d.edges.emplace_back(names_[w], names_[v]);
        if (!labels_[w].empty()) d.labels[names_[w]] = labels_[w];
    }
    if (initial_) d.initial = names_[*initial_];
    return d;
}

// ---------------------------------------------------------------------------

MultiTeam::MultiTeam(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::set<std::size_t> seen;
    for (const auto& e : entries_)
        if (!seen.insert(e.index).second)
            throw InputError("multiteam index " + std::to_string(e.index) + " occurs twice");
}

MultiTeam MultiTeam::of(const std::vector<WorldId>& worlds) {
    std::vector<Entry> entries;
    entries.reserve(worlds.size());
    for (std::size_t i = 0; i < worlds.size(); ++i) entries.push_back({i, worlds[i]});
    return MultiTeam(std::move(entries));
}

std::vector<WorldId> MultiTeam::multiset() const {
    std::vector<WorldId> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.world);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t MultiTeam::multiplicity(WorldId w) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [w](const Entry& e) { return e.world == w; }));
}

bool same_multiset(const MultiTeam& a, const MultiTeam& b) { return a.multiset() == b.multiset(); }

MultiTeam parse_multiteam(const KripkeStructure& k, const std::string& text) {
    std::vector<WorldId> worlds;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        worlds.push_back(k.world(item.substr(b, e - b + 1)));
    }
    return MultiTeam::of(worlds);
}

namespace {

void check_members(const KripkeStructure& k, const MultiTeam& t) {
    for (const auto& e : t.entries())
        if (e.world >= k.size())
            throw InputError("multiteam member " + std::to_string(e.world) +
                             " is not a world of the structure");
}

// Kuhn's augmenting-path matching on a dense adjacency matrix.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(std::vector<std::vector<bool>> adj)
        : adj_(std::move(adj)),
          right_size_(adj_.empty() ? 0 : adj_.front().size()),
          match_right_(right_size_, kFree) {}

    std::size_t max_matching() {
        std::size_t matched = 0;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            std::vector<bool> visited(right_size_, false);
            if (augment(u, visited)) ++matched;
        }
        return matched;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

    bool augment(std::size_t u, std::vector<bool>& visited) {
        for (std::size_t v = 0; v < right_size_; ++v) {
            if (!adj_[u][v] || visited[v]) continue;
            visited[v] = true;
            if (match_right_[v] == kFree || augment(match_right_[v], visited)) {
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<bool>> adj_;
    std::size_t right_size_;
    std::vector<std::size_t> match_right_;
};

}  // namespace

bool is_successor_team(const KripkeStructure& k, const MultiTeam& from, const MultiTeam& to) {
    check_members(k, from);
    check_members(k, to);
    if (from.size() != to.size()) return false;
    const auto& a = from.entries();
    const auto& b = to.entries();
    std::vector<std::vector<bool>> adj(a.size(), std::vector<bool>(b.size(), false));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) adj[i][j] = k.has_edge(a[i].world, b[j].world);
    return BipartiteMatcher(std::move(adj)).max_matching() == a.size();
}

std::vector<MultiTeam> successor_teams(const KripkeStructure& k, const MultiTeam& team) {
    check_members(k, team);
    // Group by world; a world of multiplicity m contributes an m-combination
    // with repetition of its successors.
    std::map<WorldId, std::size_t> mult;
    for (const auto& e : team.entries()) ++mult[e.world];
    std::vector<std::pair<WorldId, std::size_t>> groups(mult.begin(), mult.end());

    std::set<std::vector<WorldId>> results;
    std::vector<WorldId> current;
    std::function<void(std::size_t)> over_groups;
    std::function<void(std::size_t, std::size_t, std::size_t)> choose;

    over_groups = [&](std::size_t g) {
        if (g == groups.size()) {
            auto ms = current;
            std::sort(ms.begin(), ms.end());
            results.insert(std::move(ms));
            return;
        }
        choose(g, groups[g].second, 0);
    };
    choose = [&](std::size_t g, std::size_t remaining, std::size_t from_idx) {
        if (remaining == 0) {
            over_groups(g + 1);
            return;
        }
        const auto& succ = k.successors(groups[g].first);
        for (std::size_t s = from_idx; s < succ.size(); ++s) {
            current.push_back(succ[s]);
            choose(g, remaining - 1, s);
            current.pop_back();
        }
    };
    over_groups(0);

    std::vector<MultiTeam> out;
    out.reserve(results.size());
    for (const auto& ms : results) out.push_back(MultiTeam::of(ms));
    return out;
}

WorldSet successor_sets_step(const KripkeStructure& k, const WorldSet& s) {
    WorldSet next(k.size(), false);
    for (WorldId w = 0; w < s.size() && w < k.size(); ++w)
        if (s[w])
            for (WorldId v : k.successors(w)) next[v] = true;
    return next;
}

WorldSet cyclic_worlds(const KripkeStructure& k) {
    WorldSet out(k.size(), false);
    for (WorldId start = 0; start < k.size(); ++start) {
        WorldSet seen(k.size(), false);
        std::vector<WorldId> stack(k.successors(start).begin(), k.successors(start).end());
        while (!stack.empty() && !out[start]) {
            const WorldId w = stack.back();
            stack.pop_back();
            if (w == start) out[start] = true;
            if (seen[w]) continue;
            seen[w] = true;
            for (WorldId v : k.successors(w)) stack.push_back(v);
        }
    }
    return out;
}

TeamEncoding enumerate_traces(const KripkeStructure& k, std::size_t max_traces) {
    if (!k.initial()) throw InputError("structure has no initial world");
    const WorldSet cyclic = cyclic_worlds(k);

    // Every reachable world on a cycle must be deterministic.
    {
        WorldSet seen(k.size(), false);
        std::vector<WorldId> stack{*k.initial()};
        while (!stack.empty()) {
            const WorldId w = stack.back();
            stack.pop_back();
            if (seen[w]) continue;
            seen[w] = true;
            if (cyclic[w] && k.successors(w).size() != 1) throw LassoForestViolation(k.name(w));
            for (WorldId v : k.successors(w)) stack.push_back(v);
        }
    }

    std::vector<LassoTrace> traces;
    std::vector<PropSet> prefix;
    std::function<void(WorldId)> walk = [&](WorldId w) {
        if (cyclic[w]) {
            std::vector<PropSet> loop;
            WorldId v = w;
            do {
                loop.push_back(k.label(v));
                v = k.successors(v).front();
            } while (v != w);
            if (traces.size() >= max_traces)
                throw ResourceError("trace enumeration exceeds " + std::to_string(max_traces) +
                                    " traces");
            traces.emplace_back(prefix, std::move(loop));
            return;
        }
        prefix.push_back(k.label(w));
        for (WorldId v : k.successors(w)) walk(v);
        prefix.pop_back();
    };
    walk(*k.initial());
    return TeamEncoding(std::move(traces));
}

std::string to_dot(const KripkeStructure& k) {
    std::ostringstream out;
    out << "digraph kripke {\n";
    for (WorldId w = 0; w < k.size(); ++w) {
        out << "  \"" << k.name(w) << "\" [label=\"" << k.name(w);
        if (!k.label(w).empty()) {
            out << "\\n{";
            bool first = true;
            for (const auto& p : k.label(w)) {
                out << (first ? "" : ",") << p;
                first = false;
            }
            out << '}';
        }
        out << '"';
        if (k.initial() == w) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (WorldId w = 0; w < k.size(); ++w)
        for (WorldId v : k.successors(w))
            out << "  \"" << k.name(w) << "\" -> \"" << k.name(v) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace teamtl
