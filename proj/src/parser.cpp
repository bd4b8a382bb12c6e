#include "teamtl/parser.hpp"

#include "teamtl/error.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <vector>

namespace teamtl {

namespace {

enum class Tok {
    Ident,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Tilde,
    Bang,
    Bar,
    BoolOr,
    Amp,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

constexpr std::array kKeywords = {"X",  "F",  "G",  "U",  "R",  "E",   "A",  "EX",
                                  "AX", "EF", "AF", "EG", "AG", "TOP", "BOT"};

bool is_keyword(std::string_view s) {
    for (const auto* k : kKeywords)
        if (s == k) return true;
    return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(text.substr(i, len)), {i, i + len}});
        i += len;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) ++j;
            push(Tok::Ident, j - i);
            continue;
        }
        switch (c) {
            case '(': push(Tok::LParen, 1); continue;
            case ')': push(Tok::RParen, 1); continue;
            case '[': push(Tok::LBracket, 1); continue;
            case ']': push(Tok::RBracket, 1); continue;
            case ',': push(Tok::Comma, 1); continue;
            case ';': push(Tok::Semicolon, 1); continue;
            case '~': push(Tok::Tilde, 1); continue;
            case '!': push(Tok::Bang, 1); continue;
            case '|': push(Tok::Bar, 1); continue;
            case '&': push(Tok::Amp, 1); continue;
            case '\\':
                if (text.substr(i, 3) == "\\|/") {
                    push(Tok::BoolOr, 3);
                    continue;
                }
                break;
            default: break;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", {i, i + 1});
    }
    out.push_back({Tok::End, "", {text.size(), text.size()}});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, bool ctl) : tokens_(tokenize(text)), ctl_(ctl) {}

    Formula parse_all() {
        Formula f = parse_expr();
        if (peek().kind != Tok::End) fail("unexpected token '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool at_ident(std::string_view s) const {
        return peek().kind == Tok::Ident && peek().text == s;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().span); }
    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what);
        ++pos_;
    }

    // expr := unary-chain ( (U|R) expr )?
    Formula parse_expr() {
        Formula lhs = parse_split();
        if (at_ident("U") || at_ident("R")) {
            if (ctl_) fail("temporal operator '" + peek().text + "' needs a path quantifier");
            const bool until = take().text == "U";
            Formula rhs = parse_expr();
            return until ? Formula::until(std::move(lhs), std::move(rhs))
                         : Formula::release(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Formula parse_split() {
        Formula lhs = parse_boolor();
        while (peek().kind == Tok::Bar) {
            ++pos_;
            lhs = Formula::split(std::move(lhs), parse_boolor());
        }
        return lhs;
    }

    Formula parse_boolor() {
        Formula lhs = parse_and();
        while (peek().kind == Tok::BoolOr) {
            ++pos_;
            lhs = Formula::bool_or(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (peek().kind == Tok::Amp) {
            ++pos_;
            lhs = Formula::conj(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Tilde: ++pos_; return Formula::cneg(parse_expr());
            case Tok::Bang: {
                ++pos_;
                const Token& p = peek();
                if (p.kind != Tok::Ident || is_keyword(p.text) ||
                    tokens_[pos_ + 1].kind == Tok::LParen)
                    throw ParseError("'!' may only negate a proposition (negation normal form)",
                                     {t.span.start, p.span.end});
                return Formula::neg_prop(take().text);
            }
            case Tok::LParen: {
                ++pos_;
                Formula f = parse_expr();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident: return parse_word();
            default: fail(t.kind == Tok::End ? "unexpected end of input"
                                             : "unexpected token '" + t.text + "'");
        }
    }

    Formula parse_word() {
        const Token t = take();
        const std::string& w = t.text;
        if (w == "TOP") return top();
        if (w == "BOT") return bottom();
        if (w == "X" || w == "F" || w == "G") {
            if (ctl_) {
                --pos_;
                fail("temporal operator '" + w + "' needs a path quantifier");
            }
            Formula child = parse_unary();
            if (w == "X") return Formula::next(std::move(child));
            return expand_shorthand(shorthand_from_name(w), std::span(&child, 1));
        }
        if (w == "EX" || w == "AX" || w == "EF" || w == "AF" || w == "EG" || w == "AG") {
            if (!ctl_) {
                --pos_;
                fail("path quantifier '" + w + "' in an LTL formula");
            }
            Formula child = parse_unary();
            if (w == "EX") return Formula::ex(std::move(child));
            if (w == "AX") return Formula::ax(std::move(child));
            return expand_shorthand(shorthand_from_name(w), std::span(&child, 1));
        }
        if (w == "E" || w == "A") {
            if (!ctl_) {
                --pos_;
                fail("path quantifier '" + w + "' in an LTL formula");
            }
            expect(Tok::LBracket, "'[' after path quantifier");
            Formula lhs = parse_split();
            if (!(at_ident("U") || at_ident("R"))) fail("expected 'U' or 'R'");
            const bool until = take().text == "U";
            Formula rhs = parse_expr();
            expect(Tok::RBracket, "']'");
            if (w == "E")
                return until ? Formula::eu(std::move(lhs), std::move(rhs))
                             : Formula::er(std::move(lhs), std::move(rhs));
            return until ? Formula::au(std::move(lhs), std::move(rhs))
                         : Formula::ar(std::move(lhs), std::move(rhs));
        }
        if (w == "U" || w == "R") {
            --pos_;
            fail(ctl_ ? "temporal operator '" + w + "' needs a path quantifier"
                      : "missing left operand of '" + w + "'");
        }
        if (peek().kind == Tok::LParen) return parse_atom(t);
        return Formula::prop(w);
    }

    Formula parse_atom(const Token& name) {
        expect(Tok::LParen, "'('");
        std::vector<Formula> params;
        std::optional<std::size_t> split;
        bool expect_param = true;
        while (peek().kind != Tok::RParen) {
            if (peek().kind == Tok::Semicolon) {
                if (split) fail("more than one ';' in atom");
                split = params.size();
                ++pos_;
                expect_param = true;
                continue;
            }
            if (!expect_param) fail("expected ',' or ';' between atom parameters");
            Formula p = parse_expr();
            if (ctl_ && !is_temporal_free(p))
                fail("atom parameters must be temporal-free in CTL");
            params.push_back(std::move(p));
            expect_param = false;
            if (peek().kind == Tok::Comma) {
                ++pos_;
                expect_param = true;
                if (peek().kind == Tok::RParen || peek().kind == Tok::Semicolon)
                    fail("expected atom parameter");
            }
        }
        const SourceSpan span{name.span.start, peek().span.end};
        ++pos_;
        const std::size_t s = split.value_or(0);
        if (name.text == "inc" && (!split || s * 2 != params.size() || s == 0))
            throw ParseError("inc needs two tuples of equal length separated by ';'", span);
        if (name.text == "dep" && params.empty())
            throw ParseError("dep needs at least one parameter", span);
        return Formula::gen_atom(name.text, std::move(params), s);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool ctl_;
};

// Rendering --------------------------------------------------------------

enum Prec : int { kCNeg = 0, kTemporal = 1, kSplit = 2, kBoolOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

int precedence(const Formula& f) {
    if (is_top(f) || is_bottom(f)) return kAtom;
    switch (f.kind()) {
        case Kind::CNeg: return kCNeg;
        case Kind::Until:
            return is_top(f.lhs()) ? kUnary : kTemporal;
        case Kind::Release:
            return is_bottom(f.lhs()) ? kUnary : kTemporal;
        case Kind::Split: return kSplit;
        case Kind::BoolOr: return kBoolOr;
        case Kind::And: return kAnd;
        case Kind::Next:
        case Kind::EX:
        case Kind::AX: return kUnary;
        case Kind::EU:
        case Kind::AU: return is_top(f.lhs()) ? kUnary : kAtom;
        case Kind::ER:
        case Kind::AR: return is_bottom(f.lhs()) ? kUnary : kAtom;
        default: return kAtom;
    }
}

// `rightmost` is true when nothing follows the rendered text before the end of
// the enclosing group, so a wide-scope prefix (`~`) needs no parentheses.
void render_into(const Formula& f, int min_prec, bool rightmost, std::string& out);

void render_child(const Formula& f, int min_prec, bool rightmost, std::string& out) {
    const int p = precedence(f);
    if (p >= min_prec || (p == kCNeg && rightmost)) {
        render_into(f, min_prec, rightmost, out);
    } else {
        out += '(';
        render_into(f, 0, true, out);
        out += ')';
    }
}

void render_binary(const Formula& f, const char* op, int lhs_prec, int rhs_prec, bool rightmost,
                   std::string& out) {
    render_child(f.lhs(), lhs_prec, false, out);
    out += op;
    render_child(f.rhs(), rhs_prec, rightmost, out);
}

void render_prefix(const char* op, const Formula& child, bool rightmost, std::string& out) {
    out += op;
    render_child(child, kUnary, rightmost, out);
}

void render_into(const Formula& f, int /*min_prec*/, bool rightmost, std::string& out) {
    if (is_top(f)) {
        out += "TOP";
        return;
    }
    if (is_bottom(f)) {
        out += "BOT";
        return;
    }
    switch (f.kind()) {
        case Kind::Prop: out += f.name(); return;
        case Kind::NegProp:
            out += '!';
            out += f.name();
            return;
        case Kind::And: render_binary(f, " & ", kAnd, kUnary, rightmost, out); return;
        case Kind::BoolOr: render_binary(f, " \\|/ ", kBoolOr, kAnd, rightmost, out); return;
        case Kind::Split: render_binary(f, " | ", kSplit, kBoolOr, rightmost, out); return;
        case Kind::CNeg:
            out += '~';
            render_child(f.child(0), kCNeg, rightmost, out);
            return;
        case Kind::Next: render_prefix("X ", f.child(0), rightmost, out); return;
        case Kind::Until:
            if (is_top(f.lhs())) return render_prefix("F ", f.rhs(), rightmost, out);
            render_binary(f, " U ", kSplit, kCNeg, rightmost, out);
            return;
        case Kind::Release:
            if (is_bottom(f.lhs())) return render_prefix("G ", f.rhs(), rightmost, out);
            render_binary(f, " R ", kSplit, kCNeg, rightmost, out);
            return;
        case Kind::EX: render_prefix("EX ", f.child(0), rightmost, out); return;
        case Kind::AX: render_prefix("AX ", f.child(0), rightmost, out); return;
        case Kind::EU:
        case Kind::AU:
        case Kind::ER:
        case Kind::AR: {
            const bool exists = f.kind() == Kind::EU || f.kind() == Kind::ER;
            const bool until = f.kind() == Kind::EU || f.kind() == Kind::AU;
            if (until && is_top(f.lhs()))
                return render_prefix(exists ? "EF " : "AF ", f.rhs(), rightmost, out);
            if (!until && is_bottom(f.lhs()))
                return render_prefix(exists ? "EG " : "AG ", f.rhs(), rightmost, out);
            out += exists ? "E[" : "A[";
            render_child(f.lhs(), kSplit, false, out);
            out += until ? " U " : " R ";
            render_child(f.rhs(), kCNeg, true, out);
            out += ']';
            return;
        }
        case Kind::GenAtom: {
            out += f.name();
            out += '(';
            const auto params = f.children();
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i == f.atom_split() && i != 0) out += "; ";
                else if (i != 0) out += ", ";
                render_child(params[i], kCNeg, true, out);
            }
            if (f.atom_split() == params.size() && !params.empty()) out += ';';
            out += ')';
            return;
        }
    }
}

}  // namespace

LtlFormula parse_ltl(std::string_view text) { return Parser(text, false).parse_all(); }

CtlFormula parse_ctl(std::string_view text) { return Parser(text, true).parse_all(); }

std::string render(const Formula& f) {
    std::string out;
    render_into(f, 0, true, out);
    return out;
}

bool is_identifier(std::string_view name) {
    if (name.empty() || !ident_start(name[0])) return false;
    for (char c : name)
        if (!ident_char(c)) return false;
    return !is_keyword(name);
}

}  // namespace teamtl
