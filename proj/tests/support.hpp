#pragma once

/// Deterministic inputs for the property tests.  Every generator is driven by
/// an explicitly seeded xorshift64 state so a failing case reproduces
/// bit-for-bit; nothing here touches std::random_device or global state.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/elimination.hpp"
#include "pinchuk/multipoly.hpp"
#include "pinchuk/rational.hpp"
#include "pinchuk/unipoly.hpp"

namespace testsupport {

/// Marsaglia's xorshift64 scrambler: tiny, fast, and plenty random for
/// generating test inputs.
struct Xorshift64 {
    std::uint64_t state;

    explicit Xorshift64(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
};

/// Integer in [lo, hi]; modulo bias is irrelevant at test ranges.
inline long rand_int(Xorshift64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline pinchuk::Rational rand_rational(Xorshift64& rng, long num_bound, long den_bound) {
    return pinchuk::make_rational(rand_int(rng, -num_bound, num_bound),
                                  rand_int(rng, 1, den_bound));
}

inline pinchuk::Rational rand_nonzero_rational(Xorshift64& rng, long num_bound,
                                               long den_bound) {
    for (;;) {
        pinchuk::Rational v = rand_rational(rng, num_bound, den_bound);
        if (pinchuk::sign(v) != 0) return v;
    }
}

/// Integer-coefficient univariate polynomial of exactly the given degree.
inline pinchuk::UniPoly rand_int_poly(Xorshift64& rng, int degree, long coeff_bound) {
    std::vector<pinchuk::Rational> c(static_cast<std::size_t>(degree) + 1,
                                     pinchuk::Rational(0));
    for (int i = 0; i < degree; ++i)
        c[static_cast<std::size_t>(i)] = pinchuk::Rational(rand_int(rng, -coeff_bound, coeff_bound));
    long lead = 0;
    while (lead == 0) lead = rand_int(rng, -coeff_bound, coeff_bound);
    c[static_cast<std::size_t>(degree)] = pinchuk::Rational(lead);
    return pinchuk::UniPoly(std::move(c));
}

/// Square-free integer polynomial: redraw until the discriminant is nonzero.
inline pinchuk::UniPoly rand_squarefree_int_poly(Xorshift64& rng, int degree,
                                                 long coeff_bound) {
    for (;;) {
        pinchuk::UniPoly p = rand_int_poly(rng, degree, coeff_bound);
        if (degree <= 1 || pinchuk::sign(pinchuk::discriminant(p)) != 0) return p;
    }
}

/// Sparse random multivariate polynomial: `terms` draws of c * prod v^e with
/// exponents in [0, max_exp] (coincident draws merge, so the result may have
/// fewer terms, possibly zero).
inline pinchuk::MultiPoly rand_mpoly(Xorshift64& rng, std::vector<std::string> vars,
                                     unsigned max_exp, int terms, long coeff_bound) {
    pinchuk::MultiPoly acc(vars);
    for (int k = 0; k < terms; ++k) {
        pinchuk::MultiPoly::Exponents e(vars.size(), 0u);
        for (auto& ei : e)
            ei = static_cast<unsigned>(rand_int(rng, 0, static_cast<long>(max_exp)));
        acc = acc + pinchuk::MultiPoly::monomial(vars, std::move(e),
                                                 rand_rational(rng, coeff_bound, 4));
    }
    return acc;
}

} // namespace testsupport
