#pragma once

// Expressions over loop elements, e.g. "assoc(comm(a, b), c, d)".
//
//   expr    := factor [ '*' factor ]          a third factor needs parentheses
//   factor  := primary { '^' ['-'] digits }   '^-1' is the inverse
//   primary := '(' expr ')' | dense tuple | '[' sparse sum ']'
//            | 'comm' '(' expr ',' expr ')' | 'assoc' '(' expr ',' expr ',' expr ')'
//            | 'inv' '(' expr ')' | 'e'digits | 'a' | 'b' | 'c' | 'd' | 'id' | '0'

#include <cctype>
#include <string>
#include <string_view>

#include "moufang/errors.hpp"
#include "moufang/loop.hpp"

namespace moufang {

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, const Loop& loop) : text_(text), loop_(loop) {}

    LoopElement parse() {
        LoopElement v = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected input");
        return v;
    }

private:
    LoopElement expr() {
        LoopElement lhs = factor();
        skip_space();
        if (peek() != '*') return lhs;
        ++pos_;
        LoopElement rhs = factor();
        skip_space();
        if (peek() == '*') throw AmbiguousBracketing(pos_);
        return loop_.mul(lhs, rhs);
    }

    LoopElement factor() {
        LoopElement v = primary();
        while (true) {
            skip_space();
            if (peek() != '^') return v;
            ++pos_;
            skip_space();
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected an exponent");
            long long n = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                n = n * 10 + (text_[pos_++] - '0');
                if (n > 1'000'000'000) throw ParseError(pos_, "exponent too large");
            }
            v = loop_.power(v, negative ? -n : n);
        }
    }

    LoopElement primary() {
        skip_space();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '(') {
            if (looks_dense()) return dense();
            ++pos_;
            LoopElement v = expr();
            expect(')');
            return v;
        }
        if (c == '[') {
            const std::size_t close = text_.find(']', pos_);
            if (close == std::string_view::npos) throw ParseError(pos_, "unterminated '['");
            LoopElement v = ElementParser(text_.substr(pos_ + 1, close - pos_ - 1), pos_ + 1).any();
            pos_ = close + 1;
            return v;
        }
        if (c == '0') {
            ++pos_;
            return identity();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (std::isalpha(static_cast<unsigned char>(peek()))) word += text_[pos_++];
            if (word == "e") {
                pos_ = start;
                ElementParser atom(text_.substr(start), start);
                LoopElement v = atom.basis_atom();
                pos_ = start + atom.position();
                return v;
            }
            if (word == "a") return basis(1);
            if (word == "b") return basis(2);
            if (word == "c") return basis(3);
            if (word == "d") return basis(4);
            if (word == "id") return identity();
            if (word == "inv") {
                expect('(');
                LoopElement x = expr();
                expect(')');
                return loop_.inverse(x);
            }
            if (word == "comm") {
                expect('(');
                LoopElement x = expr();
                expect(',');
                LoopElement y = expr();
                expect(')');
                return loop_.commutator(x, y);
            }
            if (word == "assoc") {
                expect('(');
                LoopElement x = expr();
                expect(',');
                LoopElement y = expr();
                expect(',');
                LoopElement z = expr();
                expect(')');
                return loop_.associator(x, y, z);
            }
            throw ParseError(start, "unknown name '" + word + "'");
        }
        throw ParseError(pos_, c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
    }

    bool looks_dense() const {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) return false;
        ++p;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && text_[p] == ',';
    }

    LoopElement dense() {
        const std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) throw ParseError(pos_, "unterminated tuple");
        ElementParser p(text_.substr(pos_, close - pos_ + 1), pos_);
        LoopElement v = p.dense();
        pos_ = close + 1;
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view text_;
    const Loop& loop_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Evaluates an expression; throws ParseError or AmbiguousBracketing.
inline LoopElement evaluate_expression(std::string_view text, const Loop& loop = Loop::standard()) {
    return detail::ExprParser(text, loop).parse();
}

}  // namespace moufang
