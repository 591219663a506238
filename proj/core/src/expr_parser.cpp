#include "framecalc/expr_parser.hpp"

#include "framecalc/errors.hpp"

#include <cctype>

namespace framecalc {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text; // number literal (possibly "p/q") or identifier
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            // A '/' directly followed by digits extends the literal to a rational.
            if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
            current_.kind = Tok::Number;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::Ident;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        switch (c) {
        case '+': current_.kind = Tok::Plus; break;
        case '-': current_.kind = Tok::Minus; break;
        case '*': current_.kind = Tok::Star; break;
        case '^': current_.kind = Tok::Caret; break;
        case '(': current_.kind = Tok::LParen; break;
        case ')': current_.kind = Tok::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        current_.text = std::string(1, c);
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(const std::string& text, SymbolContext& ctx) : lex_(text), ctx_(ctx) {}

    Expr parse() {
        Expr e = parse_sum();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("trailing input after expression", lex_.peek().offset);
        return e;
    }

private:
    Expr parse_sum() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        } else if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        }
        Expr acc = parse_product();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Expr rhs = parse_product();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Expr parse_product() {
        Expr acc = parse_power();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc *= parse_power();
        }
        return acc;
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token t = lex_.peek();
            if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a nonnegative integer", t.offset);
            lex_.take();
            unsigned long exponent = std::stoul(t.text);
            return pow(base, static_cast<unsigned>(exponent));
        }
        return base;
    }

    Expr parse_primary() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::Number: {
            lex_.take();
            auto r = parse_rational(t.text);
            if (!r) throw ParseError("malformed rational literal '" + t.text + "'", t.offset);
            return Expr::from_rational(*r);
        }
        case Tok::Ident:
            lex_.take();
            if (t.text == "exp") return parse_exp(t.offset);
            return Expr::from_symbol(ctx_.resolve(t.text));
        case Tok::LParen: {
            lex_.take();
            Expr inner = parse_sum();
            expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            throw ParseError("expected a number, symbol or '('", t.offset);
        }
    }

    Expr parse_exp(std::size_t call_offset) {
        expect(Tok::LParen, "'(' after exp");
        Expr inner = parse_sum();
        expect(Tok::RParen, "')'");
        // The argument must be a homogeneous linear form over coordinates.
        Term out(rat(1));
        for (const auto& term : inner.terms()) {
            if (!term.expo.empty())
                throw ParseError("nested exp() is outside the expression grammar", call_offset);
            if (term.powers.size() != 1 || term.powers.begin()->second != 1 ||
                !term.powers.begin()->first.is_coordinate())
                throw ParseError(
                    "exp() takes a linear form in coordinates with rational coefficients",
                    call_offset);
            out.expo[term.powers.begin()->first] += term.coeff;
        }
        return Expr::from_term(std::move(out));
    }

    void expect(Tok kind, const std::string& what) {
        Token t = lex_.peek();
        if (t.kind != kind) throw ParseError("expected " + what, t.offset);
        lex_.take();
    }

    Lexer lex_;
    SymbolContext& ctx_;
};

} // namespace

Expr parse_expr(const std::string& text, SymbolContext& ctx) {
    Parser p(text, ctx);
    return p.parse();
}

} // namespace framecalc
