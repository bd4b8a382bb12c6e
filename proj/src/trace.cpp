#include "teamtl/trace.hpp"

#include "teamtl/error.hpp"

#include <algorithm>
#include <numeric>

namespace teamtl {

LassoTrace::LassoTrace(std::vector<PropSet> prefix, std::vector<PropSet> loop)
    : prefix_(std::move(prefix)), loop_(std::move(loop)) {
    if (loop_.empty()) throw InputError("lasso trace needs a non-empty loop");
}

const PropSet& LassoTrace::at(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return loop_[(i - prefix_.size()) % loop_.size()];
}

LassoTrace suffix_trace(const LassoTrace& t, std::size_t i) {
    const auto& prefix = t.prefix();
    if (i <= prefix.size())
        return LassoTrace({prefix.begin() + static_cast<long>(i), prefix.end()}, t.loop());
    const auto& loop = t.loop();
    const std::size_t shift = (i - prefix.size()) % loop.size();
    std::vector<PropSet> rotated(loop.begin() + static_cast<long>(shift), loop.end());
    rotated.insert(rotated.end(), loop.begin(), loop.begin() + static_cast<long>(shift));
    return LassoTrace({}, std::move(rotated));
}

namespace {

std::size_t primitive_period(const std::vector<PropSet>& loop) {
    const std::size_t n = loop.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = loop[i] == loop[i - p];
        if (ok) return p;
    }
    return n;
}

}  // namespace

LassoTrace canonicalize(const LassoTrace& t) {
    std::vector<PropSet> prefix = t.prefix();
    std::vector<PropSet> loop = t.loop();
    loop.resize(primitive_period(loop));
    // Fold: p·(l0..lk) with p == lk denotes the same word as (lk l0..lk-1).
    while (!prefix.empty() && prefix.back() == loop.back()) {
        std::rotate(loop.begin(), loop.end() - 1, loop.end());
        prefix.pop_back();
    }
    return LassoTrace(std::move(prefix), std::move(loop));
}

TeamEncoding::TeamEncoding(std::vector<LassoTrace> traces) {
    traces_.reserve(traces.size());
    for (const auto& t : traces) traces_.push_back(canonicalize(t));
    std::sort(traces_.begin(), traces_.end());
    traces_.erase(std::unique(traces_.begin(), traces_.end()), traces_.end());
}

bool TeamEncoding::contains(const LassoTrace& t) const {
    return std::binary_search(traces_.begin(), traces_.end(), canonicalize(t));
}

TeamEncoding suffix_team(const TeamEncoding& team, std::size_t i) {
    std::vector<LassoTrace> out;
    out.reserve(team.size());
    for (const auto& t : team) out.push_back(suffix_trace(t, i));
    return TeamEncoding(std::move(out));
}

std::size_t prfx(const TeamEncoding& team) {
    std::size_t m = 0;
    for (const auto& t : team) m = std::max(m, t.prefix().size());
    return m;
}

std::size_t lcm_loop(const TeamEncoding& team) {
    std::size_t l = 1;
    for (const auto& t : team) l = std::lcm(l, t.loop().size());
    return l;
}

}  // namespace teamtl
