#pragma once

#include "teamtl/check/random.hpp"
#include "teamtl/trace.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace support {

inline std::filesystem::path fixtures() { return FIXTURE_DIR; }

inline teamtl::LassoTrace lasso(std::vector<teamtl::PropSet> prefix,
                                std::vector<teamtl::PropSet> loop) {
    return teamtl::LassoTrace(std::move(prefix), std::move(loop));
}

/// Every subteam of a team, as bitmask-selected encodings.
inline std::vector<teamtl::TeamEncoding> subteams(const teamtl::TeamEncoding& t) {
    std::vector<teamtl::TeamEncoding> out;
    const auto& ts = t.traces();
    for (std::size_t m = 0; m < (std::size_t{1} << ts.size()); ++m) {
        std::vector<teamtl::LassoTrace> pick;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if ((m >> i) & 1U) pick.push_back(ts[i]);
        out.emplace_back(std::move(pick));
    }
    return out;
}

}  // namespace support
