#include "cojac/parser.hpp"

#include <cctype>
#include <optional>

#include "cojac/error.hpp"

namespace cojac {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(&s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        const std::string& s = *s_;
        while (pos_ < s.size() && std::isspace(static_cast<unsigned char>(s[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= s.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = s[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s.size() && std::isdigit(static_cast<unsigned char>(s[pos_])))
                ++pos_;
            tok_ = {Tok::Integer, s.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos_])) || s[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::Ident, s.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, "+", start}; return;
            case '-': tok_ = {Tok::Minus, "-", start}; return;
            case '*': tok_ = {Tok::Star, "*", start}; return;
            case '/': tok_ = {Tok::Slash, "/", start}; return;
            case '^': tok_ = {Tok::Caret, "^", start}; return;
            case '(': tok_ = {Tok::LParen, "(", start}; return;
            case ')': tok_ = {Tok::RParen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string* s_;
    std::size_t pos_ = 0;
    Token tok_{Tok::End, "", 0};
};

std::optional<Func> lookup_func(const std::string& name) {
    if (name == "sin") return Func::Sin;
    if (name == "cos") return Func::Cos;
    if (name == "exp") return Func::Exp;
    return std::nullopt;
}

class Parser {
  public:
    Parser(const std::string& text, const Chart& chart) : lex_(text), chart_(chart) {}

    Expr parse() {
        Expr e = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.offset);
        return e;
    }

  private:
    Expr parse_sum() {
        Expr e = parse_term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                e = e + parse_term();
            } else if (k == Tok::Minus) {
                lex_.take();
                e = e - parse_term();
            } else {
                return e;
            }
        }
    }

    Expr parse_term() {
        Expr e = parse_factor();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                e = e * parse_factor();
            } else if (k == Tok::Slash) {
                Token slash = lex_.take();
                Expr d = parse_factor();
                if (d.is_syntactic_zero())
                    throw ParseError("division by the zero expression", slash.offset);
                e = Expr::div(e, d);
            } else {
                return e;
            }
        }
    }

    Expr parse_factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return Expr::neg(parse_factor());
        }
        Expr atom = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            long e = parse_exponent(caret.offset);
            return Expr::int_pow(atom, e);
        }
        return atom;
    }

    long parse_exponent(std::size_t caret_offset) {
        bool negative = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negative = true;
        }
        const Token& t = lex_.peek();
        if (t.kind != Tok::Integer)
            throw NonIntegerExponentError("exponent must be an integer literal",
                                          t.kind == Tok::End ? caret_offset : t.offset);
        Token num = lex_.take();
        long v;
        try {
            v = std::stol(num.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", num.offset);
        }
        return negative ? -v : v;
    }

    Expr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Integer: {
                // greedy rational literal: integer '/' positive-integer
                if (lex_.peek().kind == Tok::Slash) {
                    Lexer save = lex_;
                    lex_.take();
                    if (lex_.peek().kind == Tok::Integer &&
                        lex_.peek().text.find_first_not_of('0') != std::string::npos) {
                        Token den = lex_.take();
                        return Expr::constant(
                            Rational::from_string(t.text + "/" + den.text));
                    }
                    lex_ = save;  // a division follows, not a rational literal
                }
                return Expr::constant(Rational::from_string(t.text));
            }
            case Tok::Ident: {
                if (lex_.peek().kind == Tok::LParen) {
                    auto f = lookup_func(t.text);
                    if (!f)
                        throw UnknownIdentifierError("unknown function '" + t.text + "'",
                                                     t.offset);
                    lex_.take();
                    Expr arg = parse_sum();
                    expect(Tok::RParen, ")");
                    return Expr::call(*f, arg);
                }
                int idx = chart_.index_of(t.text);
                if (idx < 0)
                    throw UnknownIdentifierError("unknown identifier '" + t.text + "'",
                                                 t.offset);
                return Expr::coordinate(idx);
            }
            case Tok::LParen: {
                Expr e = parse_sum();
                expect(Tok::RParen, ")");
                return e;
            }
            default:
                throw ParseError("expected an atom, got '" + t.text + "'", t.offset);
        }
    }

    void expect(Tok kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind)
            throw ParseError("expected '" + what + "'", t.offset);
        lex_.take();
    }

    Lexer lex_;
    const Chart& chart_;
};

}  // namespace

Expr parse_expr(const std::string& text, const Chart& chart) {
    return Parser(text, chart).parse();
}

}  // namespace cojac
