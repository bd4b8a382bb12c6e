#pragma once

#include "teamtl/trace.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace teamtl {

using WorldId = std::size_t;
/// Characteristic vector over the worlds of one structure.
using WorldSet = std::vector<bool>;

/// Unvalidated, name-based description of a Kripke structure (the file format).
struct KripkeDescription {
    std::vector<std::string> worlds;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, PropSet> labels;
    std::optional<std::string> initial;
};

/// Reports dangling edge endpoints, duplicate or unlabelable worlds, invalid
/// proposition names and worlds without successors. Never throws.
[[nodiscard]] std::vector<std::string> validate(const KripkeDescription& desc);

/// Kripke structure with a left-total edge relation; immutable once built.
class KripkeStructure {
public:
    /// Throws InputError listing every problem reported by validate().
    explicit KripkeStructure(const KripkeDescription& desc);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] const std::string& name(WorldId w) const { return names_.at(w); }
    [[nodiscard]] WorldId world(const std::string& name) const;
    [[nodiscard]] bool has_world(const std::string& name) const;
    [[nodiscard]] const std::vector<WorldId>& successors(WorldId w) const { return succ_.at(w); }
    [[nodiscard]] bool has_edge(WorldId from, WorldId to) const;
    [[nodiscard]] const PropSet& label(WorldId w) const { return labels_.at(w); }
    [[nodiscard]] std::optional<WorldId> initial() const noexcept { return initial_; }
    /// Every proposition occurring in some label.
    [[nodiscard]] PropSet propositions() const;

    [[nodiscard]] KripkeDescription description() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, WorldId, std::less<>> index_;
    std::vector<std::vector<WorldId>> succ_;
    std::vector<PropSet> labels_;
    std::optional<WorldId> initial_;
};

/// Indexed multiset of worlds: each entry is a distinct index carrying a world.
class MultiTeam {
public:
    struct Entry {
        std::size_t index;
        WorldId world;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    MultiTeam() = default;
    /// Indices must be pairwise distinct.
    explicit MultiTeam(std::vector<Entry> entries);
    /// Entries (0, w0), (1, w1), ...
    static MultiTeam of(const std::vector<WorldId>& worlds);

    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    /// The worlds, sorted; equal for two teams iff they are equal up to index permutation.
    [[nodiscard]] std::vector<WorldId> multiset() const;
    [[nodiscard]] std::size_t multiplicity(WorldId w) const;

private:
    std::vector<Entry> entries_;
};

[[nodiscard]] bool same_multiset(const MultiTeam& a, const MultiTeam& b);

/// Parses `r,a,a` into a multiteam of K (repetition = multiplicity).
[[nodiscard]] MultiTeam parse_multiteam(const KripkeStructure& k, const std::string& text);

/// True iff some per-entry choice of successors turns `from` into `to` up to
/// index permutation; decided by perfect bipartite matching.
[[nodiscard]] bool is_successor_team(const KripkeStructure& k, const MultiTeam& from,
                                     const MultiTeam& to);

/// Every successor team of `team`, one representative per multiset, sorted.
[[nodiscard]] std::vector<MultiTeam> successor_teams(const KripkeStructure& k,
                                                     const MultiTeam& team);

/// Image of a world set under the edge relation.
[[nodiscard]] WorldSet successor_sets_step(const KripkeStructure& k, const WorldSet& s);

/// Worlds that lie on some cycle.
[[nodiscard]] WorldSet cyclic_worlds(const KripkeStructure& k);

/// The trace team T(K) as canonical lassos. Requires an initial world and that
/// every reachable world on a cycle has exactly one successor; throws
/// LassoForestViolation otherwise, ResourceError past `max_traces`.
[[nodiscard]] TeamEncoding enumerate_traces(const KripkeStructure& k,
                                            std::size_t max_traces = 1U << 16);

/// Plain Graphviz rendering.
[[nodiscard]] std::string to_dot(const KripkeStructure& k);

}  // namespace teamtl
