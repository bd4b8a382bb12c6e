#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/trace.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace teamtl {

/// How a splitjunction divides the team.
///  - DisjointOnly: T1 ⊎ T2 = T (2^|T| candidates); sound only below
///    downward-closed subformulas.
///  - Covers: T1 ∪ T2 = T (3^|T| candidates); always sound.
enum class SplitStrategy { DisjointOnly, Covers };

struct TeamCheckOptions {
    /// Unset: per split node, DisjointOnly when both operands lie in the
    /// downward-closed fragment and Covers otherwise.
    std::optional<SplitStrategy> strategy;
    /// Largest team accepted when the formula contains a splitjunction.
    std::size_t max_team = 16;
    /// Atom definitions; null means AtomRegistry::builtins().
    const AtomRegistry* atoms = nullptr;
};

/// Hard limit from the bitmask representation of subteams.
inline constexpr std::size_t kMaxTeamBits = 64;

/// Team satisfaction T ⊨ φ with synchronous semantics. Temporal witnesses are
/// searched up to prfx(T) + lcm_loop(T) steps, after which every suffix team
/// repeats. Throws ResourceError past the caps.
[[nodiscard]] bool check_team(const TeamEncoding& team, const LtlFormula& f,
                              const TeamCheckOptions& options = {});

/// Verdict followed by an indented tree naming the chosen split halves and
/// temporal witness positions (or the refuting ones).
[[nodiscard]] std::string explain_team(const TeamEncoding& team, const LtlFormula& f,
                                       const TeamCheckOptions& options = {});

/// Evaluates a generalised atom on T: one row per trace, column i is the
/// classical truth of params[i] on that trace. Parameters must be pure
/// (no CNeg, BoolOr or atoms); violations throw InputError.
[[nodiscard]] bool eval_gen_atom(const TeamEncoding& team, const GenAtomDef& atom,
                                 std::span<const LtlFormula> params, std::size_t split);

/// Row of the atom structure for one trace at one position.
[[nodiscard]] std::vector<bool> atom_row(const LassoTrace& t, std::span<const LtlFormula> params);

}  // namespace teamtl
