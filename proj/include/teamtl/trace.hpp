#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace teamtl {

using PropSet = std::set<std::string>;

/// Ultimately periodic trace `prefix · loop^ω`; the loop is never empty.
class LassoTrace {
public:
    LassoTrace() : loop_{PropSet{}} {}
    LassoTrace(std::vector<PropSet> prefix, std::vector<PropSet> loop);

    [[nodiscard]] const std::vector<PropSet>& prefix() const noexcept { return prefix_; }
    [[nodiscard]] const std::vector<PropSet>& loop() const noexcept { return loop_; }

    /// Letter at position i of the denoted ω-word.
    [[nodiscard]] const PropSet& at(std::size_t i) const;

    /// Number of distinct suffix positions: |prefix| + |loop|.
    [[nodiscard]] std::size_t horizon() const noexcept { return prefix_.size() + loop_.size(); }

    /// Encoding equality (not denotation equality; compare canonical forms for that).
    friend bool operator==(const LassoTrace&, const LassoTrace&) = default;
    friend auto operator<=>(const LassoTrace&, const LassoTrace&) = default;

private:
    std::vector<PropSet> prefix_;
    std::vector<PropSet> loop_;
};

[[nodiscard]] inline const PropSet& trace_at(const LassoTrace& t, std::size_t i) { return t.at(i); }

/// The encoding of t[i,∞): i single steps, each dropping the prefix head or
/// rotating the loop by one once the prefix is exhausted.
[[nodiscard]] LassoTrace suffix_trace(const LassoTrace& t, std::size_t i);

/// Smallest primitive loop with the prefix tail maximally folded into it.
/// Two encodings denote the same ω-word iff their canonical forms are equal.
[[nodiscard]] LassoTrace canonicalize(const LassoTrace& t);

/// Finite set of lasso traces, stored canonical, sorted and deduplicated.
class TeamEncoding {
public:
    TeamEncoding() = default;
    explicit TeamEncoding(std::vector<LassoTrace> traces);

    [[nodiscard]] const std::vector<LassoTrace>& traces() const noexcept { return traces_; }
    [[nodiscard]] std::size_t size() const noexcept { return traces_.size(); }
    [[nodiscard]] bool empty() const noexcept { return traces_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return traces_.begin(); }
    [[nodiscard]] auto end() const noexcept { return traces_.end(); }
    [[nodiscard]] bool contains(const LassoTrace& t) const;

    friend bool operator==(const TeamEncoding&, const TeamEncoding&) = default;

private:
    std::vector<LassoTrace> traces_;
};

[[nodiscard]] TeamEncoding suffix_team(const TeamEncoding& team, std::size_t i);

/// Longest prefix in the team (0 for the empty team).
[[nodiscard]] std::size_t prfx(const TeamEncoding& team);

/// Least common multiple of the loop lengths (1 for the empty team).
[[nodiscard]] std::size_t lcm_loop(const TeamEncoding& team);

}  // namespace teamtl
