#pragma once

#include "teamtl/formula.hpp"
#include "teamtl/kripke.hpp"
#include "teamtl/trace.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace teamtl {

enum class Quantifier { Exists, Forall };

/// Prenex CNF as written by the user: any quantifier order, clauses of any
/// nonzero width.
struct PrenexQbf {
    struct Literal {
        std::string var;
        bool positive = true;
    };
    std::vector<std::pair<Quantifier, std::string>> prefix;
    std::vector<std::vector<Literal>> clauses;
};

/// Lines `exists x1` / `forall x2 x3`, then one clause per line of
/// whitespace-separated literals, `-` marking negation. `#` comments.
[[nodiscard]] PrenexQbf parse_qbf(std::string_view text);

/// ∃x1 ∀x2 ∃x3 ... over 3-literal clauses. Variables are 0-based indices;
/// variable i is quantified existentially iff i is even.
struct QbfInstance {
    struct Literal {
        std::size_t var = 0;
        bool positive = true;
        friend bool operator==(const Literal&, const Literal&) = default;
    };
    std::vector<std::string> names;
    std::vector<std::array<Literal, 3>> clauses;

    [[nodiscard]] std::size_t num_vars() const noexcept { return names.size(); }
    [[nodiscard]] static Quantifier quantifier(std::size_t var) noexcept {
        return var % 2 == 0 ? Quantifier::Exists : Quantifier::Forall;
    }
    friend bool operator==(const QbfInstance&, const QbfInstance&) = default;
};

struct NormalizeReport {
    std::size_t padded_clauses = 0;
    std::size_t dummies = 0;
};

/// Pads clauses to width 3 by repeating their last literal and inserts fresh
/// dummy variables (d1, d2, ...) so the prefix strictly alternates starting
/// with ∃ and has at least two variables. Throws InputError on empty or
/// over-wide clauses, unquantified or doubly quantified variables.
[[nodiscard]] QbfInstance normalize_qbf(const PrenexQbf& q, NormalizeReport* report = nullptr);

/// Game evaluation over all assignments; ResourceError above 20 variables.
[[nodiscard]] bool eval_qbf(const QbfInstance& q);

[[nodiscard]] std::string render_qbf(const QbfInstance& q);

// Reserved propositions of the path-checking reduction.
inline constexpr std::string_view kDollar = "_d";
inline constexpr std::string_view kHash = "_h";

/// Trace team and formula satisfied iff q is valid.
[[nodiscard]] std::pair<TeamEncoding, LtlFormula> reduce_to_tpc(const QbfInstance& q);

struct CtlReduction {
    KripkeStructure structure;
    MultiTeam team;
    CtlFormula formula;
};

/// Structure, multiteam and TeamCTL formula satisfied iff q is valid.
[[nodiscard]] CtlReduction reduce_to_tmc_ctl(const QbfInstance& q);

/// For a temporal-free formula ψ over at most 10 propositions: the trace team
/// of the assignment tree and a formula satisfied iff some nonempty team of
/// assignments satisfies ψ.
[[nodiscard]] std::pair<TeamEncoding, LtlFormula> reduce_plsim_to_tpc(const Formula& psi);

}  // namespace teamtl
