#include "lewiskit/parser.hpp"

#include <cctype>

namespace lewiskit {

namespace {

enum class Tok { End, LParen, RParen, And, Or, Imp, Strictif, Neg, Box, Bot, Top, Ident, Meta };

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    Tok tok() const { return tok_; }
    const std::string& ident() const { return ident_; }
    std::size_t pos() const { return tok_pos_; }

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_pos_ = i_;
        if (i_ >= text_.size()) {
            tok_ = Tok::End;
            return;
        }
        char c = text_[i_];
        switch (c) {
            case '(': ++i_; tok_ = Tok::LParen; return;
            case ')': ++i_; tok_ = Tok::RParen; return;
            case '/':
                expect_next('\\', "'/\\'");
                tok_ = Tok::And;
                return;
            case '\\':
                expect_next('/', "'\\/'");
                tok_ = Tok::Or;
                return;
            case '-':
                expect_next('>', "'->'");
                tok_ = Tok::Imp;
                return;
            case '~':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
                    i_ += 2;
                    tok_ = Tok::Strictif;
                } else {
                    ++i_;
                    tok_ = Tok::Neg;
                }
                return;
            case '[':
                expect_next(']', "'[]'");
                tok_ = Tok::Box;
                return;
            case '#':
                if (i_ + 1 < text_.size() && (text_[i_ + 1] == 'f' || text_[i_ + 1] == 't')) {
                    tok_ = text_[i_ + 1] == 'f' ? Tok::Bot : Tok::Top;
                    i_ += 2;
                    // reject identifier characters glued onto the constant, e.g. "#five"
                    if (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                                              text_[i_] == '_'))
                        throw ParseError("expected '#f' or '#t'", tok_pos_);
                    return;
                }
                throw ParseError("expected '#f' or '#t'", tok_pos_);
            case '?':
                ++i_;
                ident_ = lex_name("metavariable name");
                tok_ = Tok::Meta;
                return;
            default:
                if (std::isalpha(static_cast<unsigned char>(c))) {
                    ident_ = lex_name("atom name");
                    tok_ = Tok::Ident;
                    return;
                }
                throw ParseError(std::string("unexpected character '") + c + "'", tok_pos_);
        }
    }

private:
    void expect_next(char want, const char* what) {
        if (i_ + 1 >= text_.size() || text_[i_ + 1] != want)
            throw ParseError(std::string("expected ") + what, tok_pos_);
        i_ += 2;
    }

    std::string lex_name(const char* what) {
        std::size_t start = i_;
        if (i_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[i_])))
            throw ParseError(std::string("expected ") + what, tok_pos_);
        while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                                     text_[i_] == '_'))
            ++i_;
        return std::string(text_.substr(start, i_ - start));
    }

    std::string_view text_;
    std::size_t i_ = 0;
    std::size_t tok_pos_ = 0;
    Tok tok_ = Tok::End;
    std::string ident_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Fm run() {
        if (lex_.tok() == Tok::End) throw ParseError("empty input", 0);
        Fm f = imp();
        if (lex_.tok() != Tok::End) throw ParseError("trailing input", lex_.pos());
        return f;
    }

private:
    Fm imp() {  // right-associative, loosest
        Fm l = disj();
        if (lex_.tok() == Tok::Imp) {
            lex_.advance();
            return mk_imp(l, imp());
        }
        return l;
    }

    Fm disj() {
        Fm l = conj();
        while (lex_.tok() == Tok::Or) {
            lex_.advance();
            l = mk_or(l, conj());
        }
        return l;
    }

    Fm conj() {
        Fm l = strict();
        while (lex_.tok() == Tok::And) {
            lex_.advance();
            l = mk_and(l, strict());
        }
        return l;
    }

    Fm strict() {  // non-associative: a ~> b ~> c is rejected
        Fm l = unary();
        if (lex_.tok() != Tok::Strictif) return l;
        lex_.advance();
        Fm r = unary();
        if (lex_.tok() == Tok::Strictif)
            throw ParseError("'~>' is non-associative; parenthesize the chain", lex_.pos());
        return mk_strictif(l, r);
    }

    Fm unary() {
        switch (lex_.tok()) {
            case Tok::Neg: {
                lex_.advance();
                return mk_neg(unary());
            }
            case Tok::Box: {
                lex_.advance();
                return mk_box(unary());
            }
            default:
                return primary();
        }
    }

    Fm primary() {
        switch (lex_.tok()) {
            case Tok::Bot:
                lex_.advance();
                return bot();
            case Tok::Top:
                lex_.advance();
                return top();
            case Tok::Ident: {
                Fm f = atom(lex_.ident());
                lex_.advance();
                return f;
            }
            case Tok::Meta: {
                Fm f = meta(lex_.ident());
                lex_.advance();
                return f;
            }
            case Tok::LParen: {
                lex_.advance();
                Fm f = imp();
                if (lex_.tok() != Tok::RParen) throw ParseError("expected ')'", lex_.pos());
                lex_.advance();
                return f;
            }
            default:
                throw ParseError("expected a formula", lex_.pos());
        }
    }

    Lexer lex_;
};

}  // namespace

Fm parse(std::string_view text) { return Parser(text).run(); }

Fm parse_normalized(std::string_view text) { return normalize(parse(text)); }

}  // namespace lewiskit
