#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/kripke.hpp"
#include "teamtl/trace.hpp"

#include <vector>

namespace teamtl {

/// Classical satisfaction t ⊨ φ of a single lasso trace. Split is read as
/// ordinary disjunction; CNeg, BoolOr and atoms are rejected (InputError).
[[nodiscard]] bool check_ltl_classical(const LassoTrace& t, const LtlFormula& f);

/// Truth of φ at each of the positions 0 .. horizon()-1 of t. With
/// `allow_extensions`, CNeg is negation and BoolOr is disjunction.
[[nodiscard]] std::vector<bool> ltl_positions(const LassoTrace& t, const LtlFormula& f,
                                              bool allow_extensions = false);

/// Worlds of K satisfying φ classically (bottom-up fixpoint labeling).
[[nodiscard]] WorldSet ctl_satisfying_worlds(const KripkeStructure& k, const CtlFormula& f);

[[nodiscard]] bool check_ctl_classical(const KripkeStructure& k, WorldId w, const CtlFormula& f);

/// Flat lift: every member of the team satisfies φ classically.
[[nodiscard]] bool check_ctl_classical_multiset(const KripkeStructure& k, const MultiTeam& team,
                                                const CtlFormula& f);

}  // namespace teamtl
