#pragma once

#include "teamtl/formula.hpp"

#include <string>
#include <string_view>

namespace teamtl {

/// Parses a TeamLTL formula.
///
/// Precedence from loosest to tightest: `~` (extends as far right as
/// possible), `U` / `R` (right associative), `|` (splitjunction), `\|/`
/// (Boolean disjunction), `&`, prefix `X` `F` `G`, `!` (propositions only).
/// Atoms: identifiers, `TOP`, `BOT`, `dep(p1,..,pn; q1,..,qm)`,
/// `inc(p1,..,pn; q1,..,qn)` and `name(...)` for registered atoms.
/// `#` starts a comment running to the end of the line.
[[nodiscard]] LtlFormula parse_ltl(std::string_view text);

/// Parses a TeamCTL formula: as above, with `EX` `AX` `EF` `AF` `EG` `AG`
/// and `E[φ U ψ]`, `A[φ U ψ]`, `E[φ R ψ]`, `A[φ R ψ]`. Temporal operators
/// without a path quantifier are rejected, as are temporal atom parameters.
[[nodiscard]] CtlFormula parse_ctl(std::string_view text);

/// Concrete syntax accepted by the matching parser; `parse(render(f)) == f`.
[[nodiscard]] std::string render(const Formula& f);

/// Identifier syntax `[A-Za-z_][A-Za-z0-9_]*`, excluding keywords.
[[nodiscard]] bool is_identifier(std::string_view name);

}  // namespace teamtl
