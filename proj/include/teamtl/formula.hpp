#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teamtl {

/// Node kinds shared by TeamLTL and TeamCTL syntax trees.
///
/// Formulas are kept in negation normal form: negation only ever sits on a
/// proposition (NegProp). The contradictory negation (CNeg) is a separate
/// connective with meta-level semantics.
enum class Kind {
    Prop,
    NegProp,
    And,
    Split,   // team disjunction: the team is divided between the disjuncts
    BoolOr,  // Boolean disjunction: the whole team satisfies one disjunct
    CNeg,    // contradictory negation
    Next,
    Until,
    Release,
    EX,
    AX,
    EU,
    AU,
    ER,
    AR,
    GenAtom,
};

[[nodiscard]] std::string_view kind_name(Kind kind) noexcept;
[[nodiscard]] bool is_ltl_temporal(Kind kind) noexcept;
[[nodiscard]] bool is_ctl_temporal(Kind kind) noexcept;

/// Proposition name reserved for the constants TOP (p | !p) and BOT (p & !p).
inline constexpr std::string_view kTautProp = "_taut";

/// Immutable formula value with shared structure.
class Formula {
public:
    /// A formula default-constructs to TOP.
    Formula();

    static Formula prop(std::string name);
    static Formula neg_prop(std::string name);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula split(Formula lhs, Formula rhs);
    static Formula bool_or(Formula lhs, Formula rhs);
    static Formula cneg(Formula child);
    static Formula next(Formula child);
    static Formula until(Formula lhs, Formula rhs);
    static Formula release(Formula lhs, Formula rhs);
    static Formula ex(Formula child);
    static Formula ax(Formula child);
    static Formula eu(Formula lhs, Formula rhs);
    static Formula au(Formula lhs, Formula rhs);
    static Formula er(Formula lhs, Formula rhs);
    static Formula ar(Formula lhs, Formula rhs);
    /// Application of a generalised atom. `split` is the number of leading
    /// parameters in the first group (`dep(p1..pn; q1..qm)` has split n).
    static Formula gen_atom(std::string name, std::vector<Formula> params, std::size_t split);

    [[nodiscard]] Kind kind() const noexcept { return node_->kind; }
    /// Proposition name of a Prop / NegProp node, atom name of a GenAtom node.
    [[nodiscard]] const std::string& name() const noexcept { return node_->name; }
    [[nodiscard]] std::span<const Formula> children() const noexcept { return node_->children; }
    [[nodiscard]] const Formula& child(std::size_t i) const { return node_->children.at(i); }
    [[nodiscard]] const Formula& lhs() const { return child(0); }
    [[nodiscard]] const Formula& rhs() const { return child(1); }
    [[nodiscard]] std::size_t atom_split() const noexcept { return node_->split; }

    /// Identity of the shared node; stable for the lifetime of the value.
    [[nodiscard]] const void* id() const noexcept { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Formula> children;
        std::size_t split = 0;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Kind kind, std::string name, std::vector<Formula> children,
                        std::size_t split = 0);

    std::shared_ptr<const Node> node_;
};

using LtlFormula = Formula;
using CtlFormula = Formula;

[[nodiscard]] Formula top();
[[nodiscard]] Formula bottom();
[[nodiscard]] bool is_top(const Formula& f) noexcept;
[[nodiscard]] bool is_bottom(const Formula& f) noexcept;

enum class Shorthand { Top, Bot, F, G, EF, EG, AF, AG };

/// Looks up a shorthand by its surface name ("TOP", "BOT", "F", "G", "EF", ...).
[[nodiscard]] Shorthand shorthand_from_name(std::string_view name);

/// F φ = TOP U φ, G φ = BOT R φ, EF φ = E[TOP U φ], EG φ = E[BOT R φ], etc.
[[nodiscard]] Formula expand_shorthand(Shorthand which, std::span<const Formula> args = {});

// ---------------------------------------------------------------------------
// Generalised atoms

/// The relational structure a generalised atom is evaluated on: one row per
/// team member, one column per parameter (true iff the member satisfies the
/// parameter classically). Multiset teams contribute one row per entry.
struct AtomStructure {
    std::vector<std::vector<bool>> rows;
    std::size_t split = 0;
};

struct GenAtomDef {
    std::string name;
    /// Number of parameters, or 0 when the atom is variadic.
    std::size_t arity = 0;
    bool downward_closed = false;
    std::function<bool(const AtomStructure&)> evaluator;
    /// Optional shape check on (parameter count, split); throws InputError.
    std::function<void(std::size_t, std::size_t)> check_shape;
};

class AtomRegistry {
public:
    /// Registry holding `dep` and `inc`.
    static const AtomRegistry& builtins();

    void add(GenAtomDef def);
    [[nodiscard]] const GenAtomDef* find(std::string_view name) const;
    /// Throws InputError for unknown atoms or shape mismatches.
    const GenAtomDef& require(const Formula& application) const;

private:
    std::map<std::string, GenAtomDef, std::less<>> defs_;
};

/// Dependence atom: rows agreeing on the first `split` columns agree on the rest.
[[nodiscard]] bool eval_dependence(const AtomStructure& s);
/// Inclusion atom: every tuple of the first half occurs as a tuple of the second half.
[[nodiscard]] bool eval_inclusion(const AtomStructure& s);

// ---------------------------------------------------------------------------
// Structural queries

struct FragmentFlags {
    bool uses_split = false;
    bool uses_cneg = false;
    bool uses_boolor = false;
    bool uses_genatoms = false;
    bool downward_closed_fragment = true;
};

/// TOP/BOT constants are leaves: their internal split does not set uses_split.
[[nodiscard]] FragmentFlags classify(const Formula& f,
                                     const AtomRegistry& atoms = AtomRegistry::builtins());

/// Number of Boolean and temporal connectives; literals and TOP/BOT count 0,
/// an atom application counts 1 plus the length of its parameters.
[[nodiscard]] std::size_t formula_length(const Formula& f);

/// Negation only on propositions (structural scan of every node).
[[nodiscard]] bool is_nnf(const Formula& f);
[[nodiscard]] bool is_ltl(const Formula& f);
[[nodiscard]] bool is_ctl(const Formula& f);
/// No CNeg, BoolOr or generalised atom anywhere.
[[nodiscard]] bool is_pure(const Formula& f);
/// No temporal operator anywhere.
[[nodiscard]] bool is_temporal_free(const Formula& f);

[[nodiscard]] std::set<std::string> propositions(const Formula& f);

/// Subformulas in post-order (children before parents), shared nodes once.
[[nodiscard]] std::vector<Formula> postorder(const Formula& f);

}  // namespace teamtl
