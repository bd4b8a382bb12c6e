#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/trace.hpp"

#include <cstddef>

namespace teamtl {

struct NaiveOracleLimits {
    std::size_t max_team = 4;
    std::size_t max_length = 8;
};

/// Direct transcription of the team semantics on explicit suffix teams: no
/// memo table, every split enumerated as an ordered cover, temporal
/// witnesses searched up to prfx + 2·lcm steps. At every temporal node the
/// verdict is also computed with bound prfx + lcm; a difference throws
/// std::logic_error. Instances above the limits throw ResourceError.
[[nodiscard]] bool naive_oracle(const TeamEncoding& team, const LtlFormula& f,
                                const NaiveOracleLimits& limits = {},
                                const AtomRegistry& atoms = AtomRegistry::builtins());

}  // namespace teamtl
