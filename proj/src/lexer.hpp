// Shared token scanner for the presentation format and the identity DSL.
// Private to the parsers; not installed with the public headers.
#pragma once

#include <cctype>
#include <string>

#include "wedgelab/presentation.hpp"

namespace wedgelab::detail {

enum class Tok {
    Ident,
    Integer,
    Semi,      // ;
    Comma,     // ,
    LBrack,    // [
    RBrack,    // ]
    LParen,    // (
    RParen,    // )
    Caret,     // ^
    Star,      // *
    Plus,      // +
    Minus,     // -
    Assign,    // =
    EqEq,      // ==
    Ge,        // >=
    End,
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    Tok kind() const { return kind_; }
    const std::string& text() const { return tok_text_; }
    int line() const { return tok_line_; }
    int col() const { return tok_col_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_line_, tok_col_);
    }

    bool at(Tok t) const { return kind_ == t; }

    // True and consume when the current token matches.
    bool accept(Tok t) {
        if (kind_ != t) return false;
        advance();
        return true;
    }

    void expect(Tok t, const std::string& what) {
        if (kind_ != t) fail("expected " + what);
        advance();
    }

    std::string expect_ident(const std::string& what) {
        if (kind_ != Tok::Ident) fail("expected " + what);
        std::string s = tok_text_;
        advance();
        return s;
    }

    // Keyword = identifier with fixed spelling.
    bool accept_keyword(const std::string& kw) {
        if (kind_ == Tok::Ident && tok_text_ == kw) {
            advance();
            return true;
        }
        return false;
    }

    void expect_keyword(const std::string& kw) {
        if (!accept_keyword(kw)) fail("expected '" + kw + "'");
    }

    void advance() {
        skip_space();
        tok_line_ = line_;
        tok_col_ = col_;
        tok_text_.clear();
        if (pos_ >= text_.size()) {
            kind_ = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // Dots allow namespaced identity names like cube.pair_comm.
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'' ||
                    d == '.') {
                    tok_text_ += d;
                    step();
                } else {
                    break;
                }
            }
            kind_ = Tok::Ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok_text_ += text_[pos_];
                step();
            }
            kind_ = Tok::Integer;
            return;
        }
        step();
        switch (c) {
            case ';': kind_ = Tok::Semi; return;
            case ',': kind_ = Tok::Comma; return;
            case '[': kind_ = Tok::LBrack; return;
            case ']': kind_ = Tok::RBrack; return;
            case '(': kind_ = Tok::LParen; return;
            case ')': kind_ = Tok::RParen; return;
            case '^': kind_ = Tok::Caret; return;
            case '*': kind_ = Tok::Star; return;
            case '+': kind_ = Tok::Plus; return;
            case '-': kind_ = Tok::Minus; return;
            case '=':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    step();
                    kind_ = Tok::EqEq;
                } else {
                    kind_ = Tok::Assign;
                }
                return;
            case '>':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    step();
                    kind_ = Tok::Ge;
                    return;
                }
                throw ParseError("stray '>'", tok_line_, tok_col_);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", tok_line_,
                                 tok_col_);
        }
    }

  private:
    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {  // line comment
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Tok kind_ = Tok::End;
    std::string tok_text_;
    int tok_line_ = 1, tok_col_ = 1;
};

}  // namespace wedgelab::detail
