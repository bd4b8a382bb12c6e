#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/kripke.hpp"
#include "teamtl/trace.hpp"

#include <cstddef>
#include <string>

namespace teamtl {

/// Name of the proposition recording "no world of the current set carries p".
[[nodiscard]] std::string bar_name(const std::string& p);

/// Single trace over AP ∪ {bar(p)} summarising the successor-set sequence
/// S_0 = {initial}, S_{i+1} = image(S_i). Position i holds p iff every world
/// of S_i carries p, and bar(p) iff none does.
struct FlattenedTrace {
    LassoTrace trace;
    /// Sequence S is S_0..S_{s-1} followed by S_s..S_{s+p-1} repeated.
    std::size_t s = 0;
    std::size_t p = 1;
};

struct FlattenOptions {
    /// Extra propositions to summarise beyond those in the labels.
    PropSet extra_props;
    std::size_t max_subsets = std::size_t{1} << 20;
};

[[nodiscard]] FlattenedTrace flatten(const KripkeStructure& k, const FlattenOptions& options = {});

/// T(K) ⊨ φ for splitjunction-free φ, decided on the flattened trace with
/// every ¬p read as bar(p). CNeg and BoolOr are allowed; splitjunctions
/// (other than inside TOP) throw SplitjunctionPresent, atoms GenAtomPresent.
[[nodiscard]] bool check_model_splitfree(const KripkeStructure& k, const LtlFormula& f,
                                         std::size_t max_subsets = std::size_t{1} << 20);

/// The formula with every negated proposition ¬p replaced by bar(p).
[[nodiscard]] LtlFormula bar_rewrite(const LtlFormula& f);

}  // namespace teamtl
