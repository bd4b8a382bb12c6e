#include "teamtl/qbf.hpp"

#include "teamtl/error.hpp"
#include "teamtl/tmc_splitfree.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace teamtl {

PrenexQbf parse_qbf(std::string_view text) {
    PrenexQbf q;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (tokens.empty()) continue;
        const auto where = " (line " + std::to_string(lineno) + ")";
        if (tokens[0] == "exists" || tokens[0] == "forall") {
            if (!q.clauses.empty())
                throw InputError("quantifier after the matrix: input is not prenex" + where);
            if (tokens.size() < 2) throw InputError("quantifier without variable" + where);
            const auto quant = tokens[0] == "exists" ? Quantifier::Exists : Quantifier::Forall;
            for (std::size_t i = 1; i < tokens.size(); ++i) q.prefix.emplace_back(quant, tokens[i]);
            continue;
        }
        std::vector<PrenexQbf::Literal> clause;
        for (auto tok : tokens) {
            PrenexQbf::Literal lit;
            if (tok[0] == '-') {
                lit.positive = false;
                tok.erase(0, 1);
            }
            if (tok.empty()) throw InputError("empty literal" + where);
            for (char c : tok)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    throw InputError("invalid variable name '" + tok + "'" + where);
            lit.var = tok;
            clause.push_back(lit);
        }
        q.clauses.push_back(std::move(clause));
    }
    return q;
}

QbfInstance normalize_qbf(const PrenexQbf& q, NormalizeReport* report) {
    NormalizeReport local;
    std::set<std::string> used;
    for (const auto& [quant, name] : q.prefix)
        if (!used.insert(name).second)
            throw InputError("variable '" + name + "' is quantified twice");
    std::size_t dummy_counter = 0;
    auto fresh = [&] {
        std::string name;
        do name = "d" + std::to_string(++dummy_counter);
        while (used.count(name));
        used.insert(name);
        ++local.dummies;
        return name;
    };

    QbfInstance out;
    std::map<std::string, std::size_t> index;
    auto expected = [&] { return QbfInstance::quantifier(out.names.size()); };
    for (const auto& [quant, name] : q.prefix) {
        if (quant != expected()) out.names.push_back(fresh());
        index[name] = out.names.size();
        out.names.push_back(name);
    }
    while (out.names.size() < 2) out.names.push_back(fresh());

    for (const auto& clause : q.clauses) {
        if (clause.empty()) throw InputError("empty clause");
        if (clause.size() > 3)
            throw InputError("clause of width " + std::to_string(clause.size()) +
                             " is not 3CNF");
        if (clause.size() < 3) ++local.padded_clauses;
        std::array<QbfInstance::Literal, 3> lits{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& lit = clause[std::min(i, clause.size() - 1)];
            auto it = index.find(lit.var);
            if (it == index.end()) throw InputError("variable '" + lit.var + "' is not quantified");
            lits[i] = {it->second, lit.positive};
        }
        out.clauses.push_back(lits);
    }
    if (report) *report = local;
    return out;
}

bool eval_qbf(const QbfInstance& q) {
    if (q.num_vars() > 20) throw ResourceError("QBF with more than 20 variables");
    std::vector<bool> value(q.num_vars(), false);
    std::function<bool(std::size_t)> game = [&](std::size_t var) {
        if (var == q.num_vars()) {
            for (const auto& clause : q.clauses) {
                bool sat = false;
                for (const auto& lit : clause) sat = sat || value[lit.var] == lit.positive;
                if (!sat) return false;
            }
            return true;
        }
        const bool exists = QbfInstance::quantifier(var) == Quantifier::Exists;
        for (bool b : {false, true}) {
            value[var] = b;
            if (game(var + 1) == exists) return exists;
        }
        return !exists;
    };
    return game(0);
}

std::string render_qbf(const QbfInstance& q) {
    std::ostringstream out;
    for (std::size_t i = 0; i < q.num_vars(); ++i)
        out << (QbfInstance::quantifier(i) == Quantifier::Exists ? "exists " : "forall ")
            << q.names[i] << '\n';
    for (const auto& clause : q.clauses) {
        for (std::size_t i = 0; i < 3; ++i)
            out << (i ? " " : "") << (clause[i].positive ? "" : "-") << q.names[clause[i].var];
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

std::string xname(std::size_t i) { return "x" + std::to_string(i + 1); }
std::string qname(std::size_t i) { return "q" + std::to_string(i + 1); }
std::string cname(std::size_t j) { return "c" + std::to_string(j + 1); }

Formula eventually(Formula f) { return Formula::until(top(), std::move(f)); }

Formula fold(std::vector<Formula> parts, Formula (*op)(Formula, Formula)) {
    Formula acc = parts.at(0);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = op(acc, parts[i]);
    return acc;
}

LassoTrace loop_of(std::vector<PropSet> loop) { return LassoTrace({}, std::move(loop)); }

}  // namespace

std::pair<TeamEncoding, LtlFormula> reduce_to_tpc(const QbfInstance& q) {
    const std::string d(kDollar), h(kHash);
    const std::size_t n = q.num_vars();
    std::vector<LassoTrace> traces;
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = xname(i), qi = qname(i);
        if (QbfInstance::quantifier(i) == Quantifier::Forall)
            traces.push_back(loop_of({{}, {qi, d}, {d}, {}, {d}, {qi, d, h}}));
        traces.push_back(loop_of({{}, {x, qi, d}, {d, h}}));
        traces.push_back(loop_of({{}, {d}, {x, qi, d, h}}));
    }
    for (std::size_t j = 0; j < q.clauses.size(); ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& lit = q.clauses[j][k];
            std::vector<PropSet> loop = lit.positive
                                            ? std::vector<PropSet>{{}, {xname(lit.var), d}, {d, h}}
                                            : std::vector<PropSet>{{}, {d}, {xname(lit.var), d, h}};
            for (std::size_t pos = 0; pos < 3; ++pos)
                if (pos != k) loop[pos].insert(cname(j));
            traces.push_back(loop_of(std::move(loop)));
        }
    }

    std::vector<Formula> matrix;
    for (std::size_t i = 0; i < n; ++i) matrix.push_back(eventually(Formula::prop(xname(i))));
    for (std::size_t j = 0; j < q.clauses.size(); ++j)
        matrix.push_back(eventually(Formula::prop(cname(j))));
    Formula f = fold(std::move(matrix), &Formula::split);
    for (std::size_t i = n; i-- > 0;) {
        if (QbfInstance::quantifier(i) == Quantifier::Exists) {
            f = Formula::split(eventually(Formula::prop(qname(i))), f);
        } else {
            const Formula step = eventually(Formula::conj(Formula::prop(h), Formula::next(f)));
            const Formula wait = Formula::until(Formula::neg_prop(qname(i)), Formula::prop(qname(i)));
            f = Formula::until(Formula::split(Formula::split(Formula::prop(d), wait), step),
                               Formula::prop(h));
        }
    }
    return {TeamEncoding(std::move(traces)), f};
}

CtlReduction reduce_to_tmc_ctl(const QbfInstance& q) {
    const std::size_t n = q.num_vars();
    KripkeDescription d;
    auto world = [&](std::string name, PropSet label = {}) {
        d.worlds.push_back(name);
        if (!label.empty()) d.labels[name] = std::move(label);
        return name;
    };
    auto edge = [&](const std::string& a, const std::string& b) { d.edges.emplace_back(a, b); };
    PropSet all;
    for (std::size_t i = 0; i < n; ++i) all.insert(xname(i));
    auto all_but = [&](std::size_t var) {
        PropSet s = all;
        s.erase(xname(var));
        return s;
    };

    // Variable gadgets: chain of i+1 worlds, then two parallel chains down to
    // depth n+4 (1-based) ending in self-loops.
    std::vector<std::string> starts;
    for (std::size_t i = 0; i < n; ++i) {
        const auto base = "v" + std::to_string(i + 1) + "_";
        const std::size_t depth = i + 1;
        std::string prev;
        for (std::size_t j = 1; j <= depth; ++j) {
            auto w = world(base + std::to_string(j));
            if (j == 1) starts.push_back(w);
            if (!prev.empty()) edge(prev, w);
            prev = w;
        }
        for (std::size_t a = 1; a <= 2; ++a) {
            std::string last = prev;
            for (std::size_t j = depth + 1; j <= n + 4; ++j) {
                PropSet label;
                if (j == n + 3) label = a == 1 ? all : all_but(i);
                if (j == n + 4) label = a == 1 ? all_but(i) : all;
                auto w = world(base + std::to_string(j) + "_" + std::to_string(a), label);
                edge(last, w);
                last = w;
            }
            edge(last, last);
        }
    }

    // Clause gadget.
    std::string prev;
    for (std::size_t i = 1; i <= n + 1; ++i) {
        auto w = world("k" + std::to_string(i));
        if (i == 1) starts.push_back(w);
        if (!prev.empty()) edge(prev, w);
        prev = w;
    }
    for (std::size_t j = 0; j < q.clauses.size(); ++j) {
        auto cw = world("cl" + std::to_string(j + 1));
        edge(prev, cw);
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& lit = q.clauses[j][k];
            PropSet first = all_but(lit.var), second = all_but(lit.var);
            (lit.positive ? first : second).insert(xname(lit.var));
            const auto base = "cl" + std::to_string(j + 1) + "_" + std::to_string(k + 1) + "_";
            auto w1 = world(base + "1", first);
            auto w2 = world(base + "2", second);
            edge(cw, w1);
            edge(w1, w2);
            edge(w2, w2);
        }
    }
    if (q.clauses.empty()) {
        // Empty matrix: the clause member never blocks a goal.
        d.labels[prev] = all;
        edge(prev, prev);
    }
    d.initial = starts.front();

    KripkeStructure k(d);
    std::vector<WorldId> members;
    for (const auto& s : starts) members.push_back(k.world(s));

    std::vector<Formula> goals;
    for (std::size_t i = 0; i < n; ++i)
        goals.push_back(Formula::eu(top(), Formula::prop(xname(i))));
    Formula f = n == 0 ? top() : fold(std::move(goals), &Formula::conj);
    f = Formula::ax(Formula::ex(f));
    for (std::size_t i = n; i-- > 0;)
        f = QbfInstance::quantifier(i) == Quantifier::Exists ? Formula::ex(f) : Formula::ax(f);
    return {std::move(k), MultiTeam::of(members), f};
}

namespace {

Formula plsim_star(const Formula& f) {
    if (is_top(f) || is_bottom(f)) return f;
    switch (f.kind()) {
        case Kind::Prop: return eventually(f);
        case Kind::NegProp: return eventually(Formula::prop(bar_name(f.name())));
        case Kind::And: return Formula::conj(plsim_star(f.lhs()), plsim_star(f.rhs()));
        case Kind::Split: return Formula::split(plsim_star(f.lhs()), plsim_star(f.rhs()));
        case Kind::BoolOr: return Formula::bool_or(plsim_star(f.lhs()), plsim_star(f.rhs()));
        case Kind::CNeg: return Formula::cneg(plsim_star(f.child(0)));
        default: break;
    }
    throw InputError("operator " + std::string(kind_name(f.kind())) +
                     " is not allowed in a propositional formula");
}

}  // namespace

std::pair<TeamEncoding, LtlFormula> reduce_plsim_to_tpc(const Formula& psi) {
    std::vector<std::string> props;
    for (const auto& p : propositions(psi))
        if (p != kTautProp) props.push_back(p);
    if (props.size() > 10)
        throw ResourceError("propositional formula over more than 10 variables");
    const Formula star = plsim_star(psi);

    KripkeDescription d;
    d.worlds.push_back("r");
    d.initial = "r";
    std::vector<std::string> layer{"r"};
    for (std::size_t i = 0; i < props.size(); ++i) {
        const auto a = "a" + std::to_string(i + 1), b = "b" + std::to_string(i + 1);
        d.worlds.push_back(a);
        d.worlds.push_back(b);
        d.labels[a] = {props[i]};
        d.labels[b] = {bar_name(props[i])};
        for (const auto& w : layer) {
            d.edges.emplace_back(w, a);
            d.edges.emplace_back(w, b);
        }
        layer = {a, b};
    }
    for (const auto& w : layer) d.edges.emplace_back(w, w);
    const TeamEncoding team = enumerate_traces(KripkeStructure(d));
    return {team, Formula::split(top(), Formula::conj(Formula::cneg(bottom()), star))};
}

}  // namespace teamtl
