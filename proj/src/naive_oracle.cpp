#include "teamtl/naive_oracle.hpp"

#include "teamtl/error.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace teamtl {

namespace {

class Naive {
public:
    explicit Naive(const AtomRegistry& atoms) : atoms_(atoms) {}

    bool sat(const TeamEncoding& team, const Formula& f) {
        switch (f.kind()) {
            case Kind::Prop:
            case Kind::NegProp:
                for (const auto& t : team)
                    if ((t.at(0).count(f.name()) != 0) != (f.kind() == Kind::Prop)) return false;
                return true;
            case Kind::And: return sat(team, f.lhs()) && sat(team, f.rhs());
            case Kind::BoolOr: return sat(team, f.lhs()) || sat(team, f.rhs());
            case Kind::CNeg: return !sat(team, f.child(0));
            case Kind::Split: return split(team, f);
            case Kind::Next: return sat(suffix_team(team, 1), f.child(0));
            case Kind::Until:
            case Kind::Release: {
                const std::size_t p = prfx(team), l = lcm_loop(team);
                const bool wide = temporal(team, f, p + 2 * l);
                const bool narrow = temporal(team, f, p + l);
                if (wide != narrow)
                    throw std::logic_error("temporal verdict unstable between bounds for " +
                                           std::string(kind_name(f.kind())));
                return wide;
            }
            case Kind::GenAtom: return atom(team, f);
            default: break;
        }
        throw InputError("naive oracle: unsupported operator " + std::string(kind_name(f.kind())));
    }

private:
    // Every assignment of each trace to left, right or both.
    bool split(const TeamEncoding& team, const Formula& f) {
        const auto& ts = team.traces();
        std::size_t total = 1;
        for (std::size_t i = 0; i < ts.size(); ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<LassoTrace> left, right;
            std::size_t c = code;
            for (const auto& t : ts) {
                const std::size_t side = c % 3;
                c /= 3;
                if (side != 1) left.push_back(t);
                if (side != 0) right.push_back(t);
            }
            if (sat(TeamEncoding(left), f.lhs()) && sat(TeamEncoding(right), f.rhs())) return true;
        }
        return false;
    }

    bool temporal(const TeamEncoding& team, const Formula& f, std::size_t bound) {
        const bool until = f.kind() == Kind::Until;
        for (std::size_t k = 0; k <= bound; ++k) {
            const TeamEncoding at_k = suffix_team(team, k);
            const bool rhs = sat(at_k, f.rhs());
            if (until) {
                if (rhs) return true;
                if (!sat(at_k, f.lhs())) return false;
            } else {
                if (!rhs) return false;
                if (sat(at_k, f.lhs())) return true;
            }
        }
        return !until;
    }

    // Parameters are read through singleton teams, whose team semantics is
    // the classical one.
    bool atom(const TeamEncoding& team, const Formula& f) {
        const GenAtomDef& def = atoms_.require(f);
        AtomStructure s;
        s.split = f.atom_split();
        for (const auto& t : team) {
            const TeamEncoding single({t});
            std::vector<bool> row;
            for (const auto& p : f.children()) {
                if (!is_pure(p)) throw InputError("atom parameter is not a classical formula");
                row.push_back(sat(single, p));
            }
            s.rows.push_back(std::move(row));
        }
        return def.evaluator(s);
    }

    const AtomRegistry& atoms_;
};

}  // namespace

bool naive_oracle(const TeamEncoding& team, const LtlFormula& f, const NaiveOracleLimits& limits,
                  const AtomRegistry& atoms) {
    if (team.size() > limits.max_team)
        throw ResourceError("naive oracle: team of " + std::to_string(team.size()) +
                            " traces exceeds " + std::to_string(limits.max_team));
    if (formula_length(f) > limits.max_length)
        throw ResourceError("naive oracle: formula length " + std::to_string(formula_length(f)) +
                            " exceeds " + std::to_string(limits.max_length));
    return Naive(atoms).sat(team, f);
}

}  // namespace teamtl
