#include "fano/expr.hpp"

#include <cctype>
#include <string>

#include "fano/errors.hpp"

namespace fano {

namespace {

enum class Tok { Int, Symbol, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;  // digits or symbol name
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::End, i_, "end of input"};
            return;
        }
        const char c = src_[i_];
        switch (c) {
            case '+': tok_ = {Tok::Plus, i_++, "+"}; return;
            case '-': tok_ = {Tok::Minus, i_++, "-"}; return;
            case '*': tok_ = {Tok::Star, i_++, "*"}; return;
            case '^': tok_ = {Tok::Caret, i_++, "^"}; return;
            case '(': tok_ = {Tok::LParen, i_++, "("}; return;
            case ')': tok_ = {Tok::RParen, i_++, ")"}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            tok_ = {Tok::Int, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[i_]))) ++i_;
            tok_ = {Tok::Symbol, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        throw ParseError(i_, "a token", std::string("'") + c + "'");
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, 0, ""};
};

class Parser {
public:
    Parser(std::string_view src, Model m) : lex_(src), model_(m) {}

    ChowClass run() {
        ChowClass value = expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().pos, "'+', '-', '*', '^' or end of input",
                             describe(lex_.peek()));
        return value;
    }

private:
    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    ChowClass expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        ChowClass value = term();
        if (negate) value = -value;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const bool minus = lex_.take().kind == Tok::Minus;
            ChowClass rhs = term();
            value = minus ? value - rhs : value + rhs;
        }
        return value;
    }

    ChowClass term() {
        ChowClass value = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            value = value * factor();
        }
        return value;
    }

    ChowClass factor() {
        ChowClass base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.take();
        const Token exp = lex_.peek();
        if (exp.kind == Tok::Minus)
            throw ParseError(exp.pos, "a nonnegative exponent", describe(exp));
        if (exp.kind != Tok::Int)
            throw ParseError(exp.pos, "a nonnegative exponent", describe(exp));
        lex_.take();
        unsigned long n = std::stoul(exp.text);
        return base.pow(static_cast<unsigned>(n));
    }

    ChowClass atom() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                lex_.take();
                return model_.unit() * Int(t.text);
            }
            case Tok::Symbol: {
                lex_.take();
                if (t.text == "xi") return model_.xi();
                if (t.text == "f") return model_.f();
                if (t.text == "h") return model_.h();
                if (t.text == "E") {
                    if (model_.e() != 1)
                        throw ParseError(t.pos, "a symbol valid on this model",
                                         "'E' (only defined when e=1)");
                    return model_.exceptional();
                }
                throw ParseError(t.pos, "'xi', 'f', 'h' or 'E'", describe(t));
            }
            case Tok::LParen: {
                lex_.take();
                ChowClass inner = expr();
                if (lex_.peek().kind != Tok::RParen)
                    throw ParseError(lex_.peek().pos, "')'", describe(lex_.peek()));
                lex_.take();
                return inner;
            }
            default:
                throw ParseError(t.pos, "an integer, symbol or '('", describe(t));
        }
    }

    Lexer lex_;
    Model model_;
};

}  // namespace

ChowClass parse_expr(std::string_view text, Model m) { return Parser(text, m).run(); }

}  // namespace fano
