#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pinchuk {

using BigInt = mpz_class;

/// Exact rational scalar.  Always canonical: denominator > 0, fraction fully
/// reduced, zero stored as 0/1.  This is GMP's mpq_class; every constructor
/// used in this library goes through make_rational() or a small-integer
/// constructor, both of which preserve canonical form.
using Rational = mpq_class;

/// Sign of a rational: -1, 0, or +1.
inline int sign(const Rational& a) { return sgn(a); }

inline Rational rational_abs(const Rational& a) { return Rational(abs(a)); }

/// Canonicalizing num/den constructor (mpq_class's own does not reduce).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// a^e for e >= 0.  Exact; canonical form is preserved (powers of coprime
/// integers stay coprime).
inline Rational rational_pow(const Rational& a, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
    return r;
}

/// "n" or "n/d", exactly.
inline std::string to_string(const Rational& a) { return a.get_str(); }

inline double to_double(const Rational& a) { return a.get_d(); }

/// Strict parser for "[+-]digits" or "[+-]digits/digits".  Anything else is a
/// parse_error carrying the offset of the offending character.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&](const std::string& msg, std::size_t at) -> Rational {
        throw parse_error(msg, at);
    };
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return fail("expected digits in rational", i);
    BigInt num(std::string(text.substr(num_begin, i - num_begin)), 10);
    BigInt den(1);
    if (i < n && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) return fail("expected digits after '/'", i);
        den = BigInt(std::string(text.substr(den_begin, i - den_begin)), 10);
        if (sgn(den) == 0) return fail("zero denominator", den_begin);
    }
    if (i != n) return fail("trailing characters after rational", i);
    if (negative) num = -num;
    return make_rational(num, den);
}

/// If a is a square of a rational, store its nonnegative square root in *root
/// and return true.  (Canonical form means numerator and denominator must
/// each be perfect squares.)
inline bool rational_sqrt(const Rational& a, Rational* root) {
    if (sgn(a) < 0) return false;
    if (!mpz_perfect_square_p(a.get_num_mpz_t()) ||
        !mpz_perfect_square_p(a.get_den_mpz_t()))
        return false;
    if (root) {
        Rational r;
        mpz_sqrt(r.get_num_mpz_t(), a.get_num_mpz_t());
        mpz_sqrt(r.get_den_mpz_t(), a.get_den_mpz_t());
        *root = r;
    }
    return true;
}

} // namespace pinchuk
