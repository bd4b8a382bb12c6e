#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/kripke.hpp"

#include <cstddef>
#include <functional>

namespace teamtl {

struct CtlCheckOptions {
    std::size_t max_team = 6;
    std::size_t max_worlds = 12;
    /// Cap on distinct multisets explored by one temporal search.
    std::size_t max_states = std::size_t{1} << 20;
    /// Literal reading of the until/release clauses where the left operand is
    /// only required from step 1 on. Off by default.
    bool until_from_one = false;
    const AtomRegistry* atoms = nullptr;
};

/// K, T ⊨ φ for a multiteam T. Throws ResourceError past the caps.
[[nodiscard]] bool mc_ctl(const KripkeStructure& k, const MultiTeam& team, const CtlFormula& f,
                          const CtlCheckOptions& options = {});

enum class PathMode { E, A };

using TeamPredicate = std::function<bool(const MultiTeam&)>;

/// Search on the successor-team graph from t0. E: some path of teams
/// satisfying `invariant` reaches a `target` team. A: every evolution does,
/// where an evolution revisiting a multiset without hitting the target fails.
[[nodiscard]] bool successor_graph_reach(const KripkeStructure& k, const MultiTeam& t0,
                                         const TeamPredicate& invariant,
                                         const TeamPredicate& target, PathMode mode,
                                         std::size_t max_states = std::size_t{1} << 20);

}  // namespace teamtl
