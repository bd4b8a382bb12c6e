#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/kripke.hpp"
#include "teamtl/trace.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace teamtl::check {

using Rng = std::mt19937_64;

struct FormulaShape {
    std::vector<std::string> props{"p", "q"};
    std::size_t max_length = 6;
    bool temporal = true;
    bool split = true;
    bool cneg = false;
    bool boolor = false;
    bool atoms = false;  // dep and inc over literal parameters
    bool ctl = false;    // CTL operators instead of LTL ones
};

/// Random formula of length at most shape.max_length (exact length drawn
/// uniformly first).
[[nodiscard]] Formula random_formula(Rng& rng, const FormulaShape& shape);

struct TeamShape {
    std::vector<std::string> props{"p", "q"};
    std::size_t max_traces = 3;
    std::size_t max_prefix = 2;
    std::size_t max_loop = 2;
    bool allow_empty = true;
};

[[nodiscard]] LassoTrace random_trace(Rng& rng, const TeamShape& shape);
[[nodiscard]] TeamEncoding random_team(Rng& rng, const TeamShape& shape);

/// Left-total structure on worlds w0..w{n-1}; initial w0.
[[nodiscard]] KripkeStructure random_kripke(Rng& rng, std::size_t worlds,
                                            const std::vector<std::string>& props,
                                            double edge_probability = 0.35);

/// Structure whose trace team is finite: transient worlds form a DAG over
/// later worlds, the remaining worlds form disjoint deterministic cycles.
[[nodiscard]] KripkeStructure random_lasso_forest(Rng& rng, std::size_t worlds,
                                                  const std::vector<std::string>& props);

[[nodiscard]] MultiTeam random_multiteam(Rng& rng, const KripkeStructure& k, std::size_t max_size);

}  // namespace teamtl::check
