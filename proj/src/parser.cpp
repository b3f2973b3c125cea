#include "ctseq/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace ctseq {

namespace {

enum class Tok {
    Ident, Number, LParen, RParen, LBracket, RBracket, Comma, Star, Plus,
    Minus, Tilde, Amp, Pipe, Implies, Iff, Eq, Ne, Lt, Le, Gt, Ge, At,
    Dollar, Colon, Quote, Question, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::uint64_t number = 0;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                advance();
            t.kind = Tok::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
            t.kind = Tok::Number;
            t.text = std::string(src_.substr(start, pos_ - start));
            t.number = std::stoull(t.text);
            return t;
        }
        if (match("<=>")) { t.kind = Tok::Iff; return t; }
        if (match("<=")) { t.kind = Tok::Le; return t; }
        if (match("=>")) { t.kind = Tok::Implies; return t; }
        if (match("!=")) { t.kind = Tok::Ne; return t; }
        if (match(">=")) { t.kind = Tok::Ge; return t; }
        advance();
        switch (c) {
            case '(': t.kind = Tok::LParen; return t;
            case ')': t.kind = Tok::RParen; return t;
            case '[': t.kind = Tok::LBracket; return t;
            case ']': t.kind = Tok::RBracket; return t;
            case ',': t.kind = Tok::Comma; return t;
            case '*': t.kind = Tok::Star; return t;
            case '+': t.kind = Tok::Plus; return t;
            case '-': t.kind = Tok::Minus; return t;
            case '~': t.kind = Tok::Tilde; return t;
            case '&': t.kind = Tok::Amp; return t;
            case '|': t.kind = Tok::Pipe; return t;
            case '<': t.kind = Tok::Lt; return t;
            case '>': t.kind = Tok::Gt; return t;
            case '=': t.kind = Tok::Eq; return t;
            case '@': t.kind = Tok::At; return t;
            case '$': t.kind = Tok::Dollar; return t;
            case ':': t.kind = Tok::Colon; return t;
            case '"': t.kind = Tok::Quote; return t;
            case '?': t.kind = Tok::Question; return t;
            case '\\':
                throw ParseError("unknown escape", t.line, t.col);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 t.line, t.col);
        }
    }

    /// Raw scan of a quoted string body (after the opening quote).
    /// Returns the content; positions keep advancing through it.
    std::pair<std::string, std::pair<int, int>> quoted_body() {
        std::string out;
        const int bline = line_, bcol = col_;
        while (pos_ < src_.size() && src_[pos_] != '"') {
            if (src_[pos_] == '\\')
                throw ParseError("unknown escape", line_, col_);
            out.push_back(src_[pos_]);
            advance();
        }
        if (pos_ >= src_.size())
            throw ParseError("unterminated string", bline, bcol);
        advance();  // closing quote
        return {out, {bline, bcol}};
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool match(std::string_view s) {
        if (src_.substr(pos_).starts_with(s)) {
            for (std::size_t i = 0; i < s.size(); ++i) advance();
            return true;
        }
        return false;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

bool plain_lower(std::string_view s) {
    for (char c : s)
        if (!(std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return !s.empty();
}

/// Parses one formula body (with its '?lsd_k' header) from text.
class FormulaParser {
  public:
    FormulaParser(std::string_view src, int base_line, int base_col)
        : lexer_(src), base_line_(base_line), base_col_(base_col) {
        shift();
    }

    std::pair<std::uint32_t, FormulaPtr> parse() {
        // Header '?lsd_k'.
        if (cur_.kind != Tok::Question) fail("missing base header '?lsd_k'");
        shift();
        if (cur_.kind != Tok::Ident || !cur_.text.starts_with("lsd_"))
            fail("missing base header '?lsd_k'");
        const std::string digits = cur_.text.substr(4);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            fail("malformed base header");
        const std::uint64_t base = std::stoull(digits);
        if (base < 2 || base > 36) fail("unsupported base " + digits);
        shift();
        FormulaPtr f = parse_body();
        if (cur_.kind != Tok::End) fail("unexpected trailing input in formula");
        return {static_cast<std::uint32_t>(base), f};
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        // Map the in-formula position onto the enclosing source.
        int line = base_line_ + cur_.line - 1;
        int col = cur_.line == 1 ? base_col_ + cur_.col - 1 : cur_.col;
        throw ParseError(msg, line, col);
    }

    void shift() { cur_ = lexer_.next(); }

    bool accept(Tok k) {
        if (cur_.kind != k) return false;
        shift();
        return true;
    }

    void expect(Tok k, const std::string& what) {
        if (!accept(k)) fail("expected " + what);
    }

    // ---- formulas ----------------------------------------------------
    FormulaPtr parse_body() {
        FormulaPtr f = parse_implies();
        while (accept(Tok::Iff))
            f = Formula::binary(Formula::Kind::Iff, f, parse_implies());
        return f;
    }

    FormulaPtr parse_implies() {
        FormulaPtr f = parse_or();
        if (accept(Tok::Implies))
            return Formula::binary(Formula::Kind::Implies, f, parse_implies());
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (accept(Tok::Pipe))
            f = Formula::binary(Formula::Kind::Or, f, parse_and());
        return f;
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (accept(Tok::Amp))
            f = Formula::binary(Formula::Kind::And, f, parse_unary());
        return f;
    }

    FormulaPtr parse_unary() {
        if (accept(Tok::Tilde)) return Formula::negate(parse_unary());
        if (auto q = try_quantifier()) return q;
        return parse_atom();
    }

    // 'E'/'A' or a fused token such as 'Ei' / 'At'.  The body extends to
    // the end of the enclosing parenthesized group.
    FormulaPtr try_quantifier() {
        if (cur_.kind != Tok::Ident) return nullptr;
        const std::string& w = cur_.text;
        if (w[0] != 'E' && w[0] != 'A') return nullptr;
        const bool bare = w.size() == 1;
        if (!bare && !plain_lower(std::string_view(w).substr(1)))
            return nullptr;
        if (!bare && peek_is_lbracket()) return nullptr;  // sequence name
        const Formula::Kind kind =
            w[0] == 'E' ? Formula::Kind::Exists : Formula::Kind::Forall;

        std::vector<std::string> vars;
        if (!bare) vars.push_back(w.substr(1));
        shift();
        if (bare) {
            if (cur_.kind != Tok::Ident) fail("expected quantified variable");
            vars.push_back(cur_.text);
            shift();
        }
        while (accept(Tok::Comma)) {
            if (cur_.kind != Tok::Ident) fail("expected quantified variable");
            vars.push_back(cur_.text);
            shift();
        }
        for (const auto& v : vars) {
            if (scope_.contains(v))
                fail("variable '" + v + "' already bound by an enclosing quantifier");
            scope_.insert(v);
        }
        FormulaPtr body = parse_body();
        for (const auto& v : vars) scope_.erase(v);
        return Formula::quantifier(kind, std::move(vars), std::move(body));
    }

    bool peek_is_lbracket() {
        // One-token lookahead: emulate by lexing a copy.  The lexer is
        // cheap, so keep a shadow copy of the stream state instead of a
        // full token buffer.
        Lexer copy = lexer_;
        return copy.next().kind == Tok::LBracket;
    }

    FormulaPtr parse_atom() {
        if (accept(Tok::LParen)) {
            FormulaPtr f = parse_body();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (accept(Tok::Dollar)) {
            if (cur_.kind != Tok::Ident) fail("expected predicate name after '$'");
            std::string name = cur_.text;
            shift();
            expect(Tok::LParen, "'(' after predicate name");
            std::vector<TermPtr> args;
            if (cur_.kind != Tok::RParen) {
                args.push_back(parse_term());
                while (accept(Tok::Comma)) args.push_back(parse_term());
            }
            expect(Tok::RParen, "')'");
            return Formula::call(std::move(name), std::move(args));
        }
        // Sequence atom: IDENT '[' ... ']' rel (@v | IDENT '[' ... ']').
        if (cur_.kind == Tok::Ident && peek_is_lbracket()) {
            std::string seq = cur_.text;
            shift();
            expect(Tok::LBracket, "'['");
            TermPtr index = parse_term();
            expect(Tok::RBracket, "']'");
            CmpRel rel;
            if (accept(Tok::Eq)) rel = CmpRel::Eq;
            else if (accept(Tok::Ne)) rel = CmpRel::Ne;
            else { fail("sequence comparison requires '=' or '!='"); }
            if (accept(Tok::At)) {
                if (cur_.kind != Tok::Number) fail("expected output literal after '@'");
                const std::uint64_t v = cur_.number;
                shift();
                return Formula::seq_literal(std::move(seq), std::move(index), rel, v);
            }
            if (cur_.kind != Tok::Ident) fail("expected '@literal' or sequence name");
            std::string seq2 = cur_.text;
            shift();
            expect(Tok::LBracket, "'['");
            TermPtr index2 = parse_term();
            expect(Tok::RBracket, "']'");
            return Formula::seq_pair(std::move(seq), std::move(index), rel,
                                     std::move(seq2), std::move(index2));
        }
        // Plain comparison.
        TermPtr t1 = parse_term();
        CmpRel rel;
        if (accept(Tok::Eq)) rel = CmpRel::Eq;
        else if (accept(Tok::Ne)) rel = CmpRel::Ne;
        else if (accept(Tok::Le)) rel = CmpRel::Le;
        else if (accept(Tok::Lt)) rel = CmpRel::Lt;
        else if (accept(Tok::Ge)) rel = CmpRel::Ge;
        else if (accept(Tok::Gt)) rel = CmpRel::Gt;
        else { fail("expected comparison operator"); }
        TermPtr t2 = parse_term();
        return Formula::compare(std::move(t1), rel, std::move(t2));
    }

    // ---- terms -------------------------------------------------------
    TermPtr parse_term() {
        TermPtr t = parse_factor();
        for (;;) {
            if (accept(Tok::Plus)) t = Term::sum(t, parse_factor());
            else if (accept(Tok::Minus)) t = Term::diff(t, parse_factor());
            else return t;
        }
    }

    // factor := primary ('*' primary)*, at most one non-constant operand.
    TermPtr parse_factor() {
        std::uint64_t coeff = 1;
        TermPtr varpart;
        bool have_const = false;
        for (;;) {
            if (cur_.kind == Tok::Number) {
                coeff *= cur_.number;
                have_const = true;
                shift();
            } else if (cur_.kind == Tok::Ident) {
                if (varpart)
                    fail("product of two variables is not allowed");
                varpart = Term::make_var(cur_.text);
                shift();
            } else {
                fail("expected a number or variable");
            }
            if (!accept(Tok::Star)) break;
        }
        if (!varpart) return Term::make_const(coeff);
        if (!have_const && coeff == 1) return varpart;
        return Term::mul(coeff, varpart);
    }

    Lexer lexer_;
    Token cur_;
    int base_line_, base_col_;
    std::set<std::string> scope_;
};

}  // namespace

std::vector<Command> parse_script(std::string_view src) {
    Lexer lex(src);
    std::vector<Command> out;
    for (;;) {
        Token t = lex.next();
        if (t.kind == Tok::End) break;
        if (t.kind != Tok::Ident || (t.text != "def" && t.text != "eval"))
            throw ParseError("expected 'def' or 'eval'", t.line, t.col);
        Command cmd;
        cmd.kind = t.text == "def" ? Command::Kind::Def : Command::Kind::Eval;
        cmd.line = t.line;
        cmd.col = t.col;
        Token name = lex.next();
        if (name.kind != Tok::Ident)
            throw ParseError("expected command name", name.line, name.col);
        cmd.name = name.text;
        Token quote = lex.next();
        if (quote.kind != Tok::Quote)
            throw ParseError("expected quoted formula", quote.line, quote.col);
        auto [body, bodypos] = lex.quoted_body();
        FormulaParser fp(body, bodypos.first, bodypos.second);
        auto [base, formula] = fp.parse();
        cmd.base = base;
        cmd.formula = formula;
        Token colon = lex.next();
        if (colon.kind != Tok::Colon)
            throw ParseError("expected ':' after command", colon.line, colon.col);
        out.push_back(std::move(cmd));
    }
    return out;
}

std::pair<std::uint32_t, FormulaPtr> parse_formula(std::string_view src) {
    FormulaParser fp(src, 1, 1);
    return fp.parse();
}

}  // namespace ctseq
