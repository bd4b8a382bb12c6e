#include "teamtl/formula.hpp"

#include "teamtl/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace teamtl {

std::string_view kind_name(Kind kind) noexcept {
    switch (kind) {
        case Kind::Prop: return "Prop";
        case Kind::NegProp: return "NegProp";
        case Kind::And: return "And";
        case Kind::Split: return "Split";
        case Kind::BoolOr: return "BoolOr";
        case Kind::CNeg: return "CNeg";
        case Kind::Next: return "Next";
        case Kind::Until: return "Until";
        case Kind::Release: return "Release";
        case Kind::EX: return "EX";
        case Kind::AX: return "AX";
        case Kind::EU: return "EU";
        case Kind::AU: return "AU";
        case Kind::ER: return "ER";
        case Kind::AR: return "AR";
        case Kind::GenAtom: return "GenAtom";
    }
    return "?";
}

bool is_ltl_temporal(Kind kind) noexcept {
    return kind == Kind::Next || kind == Kind::Until || kind == Kind::Release;
}

bool is_ctl_temporal(Kind kind) noexcept {
    switch (kind) {
        case Kind::EX:
        case Kind::AX:
        case Kind::EU:
        case Kind::AU:
        case Kind::ER:
        case Kind::AR: return true;
        default: return false;
    }
}

Formula::Formula() : Formula(top()) {}

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> children,
                      std::size_t split) {
    return Formula(std::make_shared<const Node>(
        Node{kind, std::move(name), std::move(children), split}));
}

Formula Formula::prop(std::string name) {
    if (name.empty()) throw InputError("empty proposition name");
    return make(Kind::Prop, std::move(name), {});
}

Formula Formula::neg_prop(std::string name) {
    if (name.empty()) throw InputError("empty proposition name");
    return make(Kind::NegProp, std::move(name), {});
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return make(Kind::And, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::split(Formula lhs, Formula rhs) {
    return make(Kind::Split, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::bool_or(Formula lhs, Formula rhs) {
    return make(Kind::BoolOr, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::cneg(Formula child) { return make(Kind::CNeg, {}, {std::move(child)}); }
Formula Formula::next(Formula child) { return make(Kind::Next, {}, {std::move(child)}); }
Formula Formula::until(Formula lhs, Formula rhs) {
    return make(Kind::Until, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::release(Formula lhs, Formula rhs) {
    return make(Kind::Release, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::ex(Formula child) { return make(Kind::EX, {}, {std::move(child)}); }
Formula Formula::ax(Formula child) { return make(Kind::AX, {}, {std::move(child)}); }
Formula Formula::eu(Formula lhs, Formula rhs) {
    return make(Kind::EU, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::au(Formula lhs, Formula rhs) {
    return make(Kind::AU, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::er(Formula lhs, Formula rhs) {
    return make(Kind::ER, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::ar(Formula lhs, Formula rhs) {
    return make(Kind::AR, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::gen_atom(std::string name, std::vector<Formula> params, std::size_t split) {
    if (name.empty()) throw InputError("empty atom name");
    if (split > params.size()) throw InputError("atom split exceeds parameter count");
    return make(Kind::GenAtom, std::move(name), std::move(params), split);
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.atom_split() != b.atom_split())
        return false;
    auto ca = a.children();
    auto cb = b.children();
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Formula top() {
    static const Formula t = Formula::split(Formula::prop(std::string(kTautProp)),
                                            Formula::neg_prop(std::string(kTautProp)));
    return t;
}

Formula bottom() {
    static const Formula b = Formula::conj(Formula::prop(std::string(kTautProp)),
                                           Formula::neg_prop(std::string(kTautProp)));
    return b;
}

namespace {

bool is_taut_pair(const Formula& f) {
    return f.lhs().kind() == Kind::Prop && f.lhs().name() == kTautProp &&
           f.rhs().kind() == Kind::NegProp && f.rhs().name() == kTautProp;
}

}  // namespace

bool is_top(const Formula& f) noexcept { return f.kind() == Kind::Split && is_taut_pair(f); }
bool is_bottom(const Formula& f) noexcept { return f.kind() == Kind::And && is_taut_pair(f); }

Shorthand shorthand_from_name(std::string_view name) {
    if (name == "TOP") return Shorthand::Top;
    if (name == "BOT") return Shorthand::Bot;
    if (name == "F") return Shorthand::F;
    if (name == "G") return Shorthand::G;
    if (name == "EF") return Shorthand::EF;
    if (name == "EG") return Shorthand::EG;
    if (name == "AF") return Shorthand::AF;
    if (name == "AG") return Shorthand::AG;
    throw InputError("unknown shorthand '" + std::string(name) + "'");
}

Formula expand_shorthand(Shorthand which, std::span<const Formula> args) {
    const std::size_t expected = (which == Shorthand::Top || which == Shorthand::Bot) ? 0 : 1;
    if (args.size() != expected) throw InputError("shorthand arity mismatch");
    switch (which) {
        case Shorthand::Top: return top();
        case Shorthand::Bot: return bottom();
        case Shorthand::F: return Formula::until(top(), args[0]);
        case Shorthand::G: return Formula::release(bottom(), args[0]);
        case Shorthand::EF: return Formula::eu(top(), args[0]);
        case Shorthand::EG: return Formula::er(bottom(), args[0]);
        case Shorthand::AF: return Formula::au(top(), args[0]);
        case Shorthand::AG: return Formula::ar(bottom(), args[0]);
    }
    throw InputError("unknown shorthand");
}

// ---------------------------------------------------------------------------

bool eval_dependence(const AtomStructure& s) {
    for (std::size_t a = 0; a < s.rows.size(); ++a) {
        for (std::size_t b = a + 1; b < s.rows.size(); ++b) {
            const auto& ra = s.rows[a];
            const auto& rb = s.rows[b];
            if (!std::equal(ra.begin(), ra.begin() + static_cast<long>(s.split), rb.begin()))
                continue;
            if (!std::equal(ra.begin() + static_cast<long>(s.split), ra.end(),
                            rb.begin() + static_cast<long>(s.split)))
                return false;
        }
    }
    return true;
}

bool eval_inclusion(const AtomStructure& s) {
    const auto half = static_cast<long>(s.split);
    for (const auto& ra : s.rows) {
        const bool found = std::any_of(s.rows.begin(), s.rows.end(), [&](const auto& rb) {
            return std::equal(ra.begin(), ra.begin() + half, rb.begin() + half);
        });
        if (!found) return false;
    }
    return true;
}

const AtomRegistry& AtomRegistry::builtins() {
    static const AtomRegistry registry = [] {
        AtomRegistry r;
        r.add(GenAtomDef{"dep", 0, true, eval_dependence,
                         [](std::size_t n, std::size_t split) {
                             if (n == 0 || split > n)
                                 throw InputError("dep needs at least one parameter");
                         }});
        r.add(GenAtomDef{"inc", 0, false, eval_inclusion,
                         [](std::size_t n, std::size_t split) {
                             if (n == 0 || split * 2 != n)
                                 throw InputError("inc needs two tuples of equal length");
                         }});
        return r;
    }();
    return registry;
}

void AtomRegistry::add(GenAtomDef def) {
    if (!def.evaluator) throw InputError("atom '" + def.name + "' has no evaluator");
    auto name = def.name;
    defs_.insert_or_assign(std::move(name), std::move(def));
}

const GenAtomDef* AtomRegistry::find(std::string_view name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

const GenAtomDef& AtomRegistry::require(const Formula& application) const {
    const auto* def = find(application.name());
    if (def == nullptr) throw InputError("unknown generalised atom '" + application.name() + "'");
    const std::size_t n = application.children().size();
    if (def->arity != 0 && def->arity != n)
        throw InputError("atom '" + def->name + "' expects " + std::to_string(def->arity) +
                         " parameters");
    if (def->check_shape) def->check_shape(n, application.atom_split());
    return *def;
}

// ---------------------------------------------------------------------------

namespace {

void classify_into(const Formula& f, const AtomRegistry& atoms, FragmentFlags& flags) {
    if (is_top(f) || is_bottom(f)) return;
    switch (f.kind()) {
        case Kind::Split: flags.uses_split = true; break;
        case Kind::CNeg:
            flags.uses_cneg = true;
            flags.downward_closed_fragment = false;
            break;
        case Kind::BoolOr: flags.uses_boolor = true; break;
        case Kind::GenAtom: {
            flags.uses_genatoms = true;
            const auto* def = atoms.find(f.name());
            if (def == nullptr || !def->downward_closed) flags.downward_closed_fragment = false;
            break;
        }
        default: break;
    }
    for (const auto& c : f.children()) classify_into(c, atoms, flags);
}

}  // namespace

FragmentFlags classify(const Formula& f, const AtomRegistry& atoms) {
    FragmentFlags flags;
    classify_into(f, atoms, flags);
    return flags;
}

std::size_t formula_length(const Formula& f) {
    if (is_top(f) || is_bottom(f)) return 0;
    std::size_t n = (f.kind() == Kind::Prop || f.kind() == Kind::NegProp) ? 0 : 1;
    for (const auto& c : f.children()) n += formula_length(c);
    return n;
}

namespace {

template <typename Pred>
bool all_nodes(const Formula& f, Pred pred) {
    if (!pred(f)) return false;
    for (const auto& c : f.children())
        if (!all_nodes(c, pred)) return false;
    return true;
}

}  // namespace

bool is_nnf(const Formula& f) {
    return all_nodes(f, [](const Formula& g) {
        if (g.kind() == Kind::Prop || g.kind() == Kind::NegProp)
            return !g.name().empty() && g.children().empty();
        return true;
    });
}

bool is_ltl(const Formula& f) {
    return all_nodes(f, [](const Formula& g) { return !is_ctl_temporal(g.kind()); });
}

bool is_ctl(const Formula& f) {
    return all_nodes(f, [](const Formula& g) {
        if (is_ltl_temporal(g.kind())) return false;
        if (g.kind() == Kind::GenAtom) {
            for (const auto& p : g.children())
                if (!is_temporal_free(p)) return false;
        }
        return true;
    });
}

bool is_pure(const Formula& f) {
    return all_nodes(f, [](const Formula& g) {
        return g.kind() != Kind::CNeg && g.kind() != Kind::BoolOr && g.kind() != Kind::GenAtom;
    });
}

bool is_temporal_free(const Formula& f) {
    return all_nodes(f, [](const Formula& g) {
        return !is_ltl_temporal(g.kind()) && !is_ctl_temporal(g.kind());
    });
}

std::set<std::string> propositions(const Formula& f) {
    std::set<std::string> out;
    all_nodes(f, [&](const Formula& g) {
        if (g.kind() == Kind::Prop || g.kind() == Kind::NegProp) out.insert(g.name());
        return true;
    });
    return out;
}

std::vector<Formula> postorder(const Formula& f) {
    std::vector<Formula> out;
    std::unordered_set<const void*> seen;
    auto visit = [&](auto&& self, const Formula& g) -> void {
        if (!seen.insert(g.id()).second) return;
        for (const auto& c : g.children()) self(self, c);
        out.push_back(g);
    };
    visit(visit, f);
    return out;
}

}  // namespace teamtl
