#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/trace.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace teamtl::check {

using TeamChecker = std::function<bool(const TeamEncoding&, const LtlFormula&)>;

struct SelftestOptions {
    std::uint64_t seed = 1;
    /// Random instances per differential suite.
    std::size_t count = 200;
    /// Directory holding manifest.json; unset skips the pinned fixtures.
    std::optional<std::filesystem::path> fixtures;
    /// Team path checker under test; unset means check_team. Tests inject
    /// deliberately broken evaluators here.
    TeamChecker team_checker;
};

struct SelftestReport {
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    /// Hash of the rendered instance stream; equal seeds give equal digests.
    std::uint64_t digest = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return mismatches == 0; }
};

/// Differential suites (team path checking vs the naive oracle, TeamCTL vs
/// the tuple oracle, split-free vs enumerated model checking, successor
/// matching vs enumeration) plus the pinned fixtures.
[[nodiscard]] SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace teamtl::check
