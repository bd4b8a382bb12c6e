#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/kripke.hpp"

#include <cstddef>

namespace teamtl::check {

/// TeamCTL by explicit member-wise successor choices: teams are index-ordered
/// world tuples, EX/AX range over the full cartesian product of successor
/// choices, and until/release are unrolled |W|^|T| + 1 times from the
/// bottom (until) or top (release). Splits: index-disjoint, or index covers
/// when the operand subtree contains ~.
[[nodiscard]] bool brute_force_ctl(const KripkeStructure& k, const MultiTeam& team,
                                   const CtlFormula& f,
                                   const AtomRegistry& atoms = AtomRegistry::builtins());

/// Successor-team check by enumerating every per-member successor choice.
[[nodiscard]] bool brute_force_successor(const KripkeStructure& k, const MultiTeam& from,
                                         const MultiTeam& to);

/// Propositional team logic with ~: does some nonempty set of assignments
/// over the formula's propositions satisfy ψ? Splits are covers.
[[nodiscard]] bool brute_force_plsim(const Formula& psi);

}  // namespace teamtl::check
