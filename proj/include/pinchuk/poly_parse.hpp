#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"

namespace pinchuk {

namespace detail {

/// Recursive-descent parser for the textual polynomial grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom
///   atom   := base ('^' integer)?
///   base   := '(' expr ')' | integer ('/' integer)? | variable
///
/// `^` binds tighter than `*`, which binds tighter than `+`/`-`; unary minus
/// is allowed; whitespace is insignificant; there is no implicit
/// multiplication and no general division (the only `/` is inside a rational
/// literal).  Errors carry the byte offset of the offending character.
class PolyParser {
public:
    PolyParser(std::string_view text, std::vector<std::string> vars)
        : text_(text), vars_(std::move(vars)) {}

    MultiPoly parse() {
        skip_ws();
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        return atom();
    }

    MultiPoly atom() {
        MultiPoly b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned long e = integer_literal("expected exponent after '^'");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    MultiPoly base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt n = bignum_literal("expected number");
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t dat = pos_;
                BigInt d = bignum_literal("expected denominator after '/'");
                if (sgn(d) == 0) throw parse_error("zero denominator", dat);
                return MultiPoly::constant(vars_, make_rational(n, d));
            }
            return MultiPoly::constant(vars_, Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(at, pos_ - at));
            for (const auto& v : vars_)
                if (v == name) return MultiPoly::variable(vars_, name);
            throw parse_error("unknown variable '" + name + "'", at);
        }
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        throw parse_error("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    /// Nonnegative integer literal small enough for an exponent.
    unsigned long integer_literal(const char* msg) {
        std::size_t at = pos_;
        std::string digits = digit_run(msg);
        if (digits.size() > 9) throw parse_error("exponent too large", at);
        return std::stoul(digits);
    }

    /// Nonnegative integer literal of arbitrary size (coefficients).
    BigInt bignum_literal(const char* msg) { return BigInt(digit_run(msg), 10); }

    std::string digit_run(const char* msg) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error(msg, pos_);
        std::size_t at = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(at, pos_ - at));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse a polynomial over the given variables.  Throws parse_error (with
/// offset) on malformed input or unknown variable names.
inline MultiPoly parse_poly(std::string_view text, std::vector<std::string> variables) {
    return detail::PolyParser(text, std::move(variables)).parse();
}

} // namespace pinchuk
