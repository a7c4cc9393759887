#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "pinchuk/rational.hpp"
#include "pinchuk/sturm.hpp"
#include "pinchuk/unipoly.hpp"
#include "support.hpp"

using pinchuk::count_real_roots;
using pinchuk::IsolatingInterval;
using pinchuk::isolate_real_roots;
using pinchuk::make_rational;
using pinchuk::Rational;
using pinchuk::refine;
using pinchuk::sign_at_root;
using pinchuk::UniPoly;
using testsupport::Xorshift64;

namespace {

UniPoly linear_root(const Rational& r) {
    return UniPoly({Rational(-r), Rational(1)}); // x - r
}

/// True iff the certificate locates v: either exactly, or v lies strictly
/// inside the bracket.
bool locates(const IsolatingInterval& iv, const Rational& v) {
    if (iv.exact) return iv.lo == v;
    return iv.lo < v && v < iv.hi;
}

} // namespace

TEST_CASE("chain and counts for x^2 - 2", "[roots]") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)});
    auto chain = pinchuk::sturm_sequence(p);
    REQUIRE(chain.size() == 3);
    // Entries are primitive-scaled: content is stripped, signs preserved.
    CHECK(chain[0] == p);
    CHECK(chain[1] == UniPoly({Rational(0), Rational(1)})); // from 2x
    CHECK(chain[2].degree() == 0); // nonzero constant: p is square-free

    // The raw chain refuses repeated roots; the counting entry points below
    // strip them first instead.
    UniPoly sq = UniPoly({Rational(-1), Rational(1)});
    CHECK_THROWS_AS(pinchuk::sturm_sequence(sq * sq), std::invalid_argument);

    CHECK(count_real_roots(p) == 2);
    CHECK(count_real_roots(p, Rational(0), Rational(2)) == 1);
    CHECK(count_real_roots(p, Rational(-2), Rational(2)) == 2);

    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    for (int side = 0; side < 2; ++side) {
        IsolatingInterval iv = refine(roots[static_cast<std::size_t>(side)],
                                      make_rational(1, 1 << 20));
        double approx = pinchuk::to_double(iv.midpoint());
        double expect = side == 0 ? -1.4142135623730951 : 1.4142135623730951;
        CHECK(std::abs(approx - expect) < 1e-5);
    }
}

TEST_CASE("known root counts", "[roots]") {
    CHECK(count_real_roots(UniPoly({Rational(1), Rational(0), Rational(1)})) == 0); // x^2+1
    CHECK(count_real_roots(UniPoly({Rational(0), Rational(-1), Rational(0), Rational(1)})) ==
          3); // x^3 - x
    CHECK(count_real_roots(UniPoly::constant(Rational(5))) == 0);
    CHECK_THROWS_AS(count_real_roots(UniPoly()), std::invalid_argument);
    CHECK_THROWS_AS(isolate_real_roots(UniPoly()), std::invalid_argument);
}

TEST_CASE("repeated factors collapse to distinct roots", "[roots]") {
    // (x-1)^2 (x+2): isolation works through the square-free part.
    UniPoly p = linear_root(Rational(1)) * linear_root(Rational(1)) * linear_root(Rational(-2));
    CHECK(count_real_roots(p) == 2);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(locates(roots[0], Rational(-2)));
    CHECK(locates(roots[1], Rational(1)));
}

TEST_CASE("open-interval count semantics exclude endpoint roots", "[roots]") {
    UniPoly p = linear_root(Rational(0)) * linear_root(Rational(1)); // x(x-1)
    CHECK(count_real_roots(p, Rational(0), Rational(1)) == 0);
    CHECK(count_real_roots(p, make_rational(-1, 2), Rational(1)) == 1);
    CHECK(count_real_roots(p, Rational(-1), Rational(2)) == 2);
    CHECK(count_real_roots(p, Rational(1), Rational(1)) == 0); // empty interval
}

TEST_CASE("products of distinct linear factors isolate to their roots", "[roots][property]") {
    Xorshift64 rng(0x5eed0101);
    for (int trial = 0; trial < 20; ++trial) {
        // Draw 2..6 distinct rational roots.
        std::vector<Rational> expected;
        int k = static_cast<int>(testsupport::rand_int(rng, 2, 6));
        while (static_cast<int>(expected.size()) < k) {
            Rational r = testsupport::rand_rational(rng, 12, 4);
            if (std::find(expected.begin(), expected.end(), r) == expected.end())
                expected.push_back(r);
        }
        std::sort(expected.begin(), expected.end());
        UniPoly p = UniPoly::constant(Rational(testsupport::rand_int(rng, 1, 5)));
        for (const Rational& r : expected) p = p * linear_root(r);

        auto roots = isolate_real_roots(p);
        REQUIRE(roots.size() == expected.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            INFO("trial " << trial << " root " << i);
            CHECK(locates(roots[i], expected[i]));
        }
    }
}

TEST_CASE("isolation count always matches the whole-line count", "[roots][property]") {
    Xorshift64 rng(0x5eed0102);
    for (int trial = 0; trial < 60; ++trial) {
        int degree = static_cast<int>(testsupport::rand_int(rng, 1, 8));
        UniPoly p = testsupport::rand_int_poly(rng, degree, 9);
        if (p.degree() < 1) continue;
        CHECK(static_cast<int>(isolate_real_roots(p).size()) == count_real_roots(p));
    }
}

TEST_CASE("refinement shrinks brackets without losing the root", "[roots]") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)}); // x^2 - 2
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    Rational eps = make_rational(1, 4096);
    for (const IsolatingInterval& iv : roots) {
        IsolatingInterval tight = refine(iv, eps);
        if (!tight.exact) {
            CHECK(tight.width() <= eps);
            CHECK(count_real_roots(p, tight.lo, tight.hi) == 1);
            CHECK(iv.lo <= tight.lo);
            CHECK(tight.hi <= iv.hi);
        }
    }
    // A rational root hit by a bisection midpoint upgrades to an exact point,
    // and exact certificates are fixed points of refinement.
    UniPoly q = linear_root(make_rational(1, 2)) * linear_root(Rational(3));
    auto qroots = isolate_real_roots(q);
    REQUIRE(qroots.size() == 2);
    IsolatingInterval ex = refine(qroots[0], make_rational(1, 1 << 24));
    CHECK(ex.exact);
    CHECK(ex.lo == make_rational(1, 2));
    CHECK(refine(ex, Rational(1)).exact);
    CHECK_THROWS_AS(refine(qroots[0], Rational(0)), std::invalid_argument);
}

TEST_CASE("sign of a second polynomial at an isolated root", "[roots]") {
    UniPoly p({Rational(-2), Rational(0), Rational(1)}); // x^2 - 2
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    const IsolatingInterval& neg = roots[0]; // -sqrt(2)
    const IsolatingInterval& pos = roots[1]; // +sqrt(2)

    UniPoly x({Rational(0), Rational(1)});
    CHECK(sign_at_root(x, pos) == 1);
    CHECK(sign_at_root(x, neg) == -1);
    CHECK(sign_at_root(linear_root(Rational(1)), pos) == 1);  // sqrt(2) - 1 > 0
    CHECK(sign_at_root(linear_root(Rational(2)), pos) == -1); // sqrt(2) - 2 < 0

    // Shared algebraic root: decided exactly through the gcd, not numerically.
    UniPoly shared = p * linear_root(Rational(5));
    CHECK(sign_at_root(shared, pos) == 0);
    CHECK(sign_at_root(shared, neg) == 0);
    CHECK(sign_at_root(UniPoly(), pos) == 0);

    // Exact certificates reduce to direct evaluation.
    IsolatingInterval at3 = IsolatingInterval::exact_point(linear_root(Rational(3)), Rational(3));
    CHECK(sign_at_root(linear_root(Rational(1)), at3) == 1);
}

TEST_CASE("every root lies within the coefficient bound", "[roots][property]") {
    Xorshift64 rng(0x5eed0103);
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly p = testsupport::rand_squarefree_int_poly(
            rng, static_cast<int>(testsupport::rand_int(rng, 1, 6)), 9);
        Rational bound = p.cauchy_root_bound();
        // All real roots live in (-bound - 1, bound + 1); the isolation
        // brackets themselves may be wider (they are dyadic), so compare
        // counts rather than endpoints.
        CHECK(count_real_roots(p, Rational(-bound - 1), Rational(bound + 1)) ==
              count_real_roots(p));
    }
}
