#pragma once

#include "teamtl/kripke.hpp"
#include "teamtl/trace.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace teamtl {

/// Drops `#` comments (outside string literals) so structured-text files can
/// carry annotations.
[[nodiscard]] std::string strip_comments(std::string_view text);

/// `{"traces": [{"prefix": [["p","q"], []], "loop": [["p"]]}, ...]}`
[[nodiscard]] TeamEncoding parse_team(std::string_view text);
[[nodiscard]] std::string write_team(const TeamEncoding& team);

/// `{"worlds": [...], "edges": [[a,b], ...], "labels": {"a": ["p"]}, "initial": "r"}`
[[nodiscard]] KripkeDescription parse_kripke(std::string_view text);
[[nodiscard]] std::string write_kripke(const KripkeStructure& k);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace teamtl
