#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elimination.hpp"
#include "interval.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace pinchuk {

/// A certificate locating one real algebraic number: either an exact rational
/// value, or an open interval (lo, hi) with non-root endpoints containing
/// exactly one real root of a square-free polynomial (Sturm count 1).
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    UniPoly poly;
    bool exact = false; ///< true: lo == hi is itself the root

    static IsolatingInterval bracket(UniPoly p, Rational a, Rational b) {
        IsolatingInterval iv;
        iv.poly = std::move(p);
        iv.lo = std::move(a);
        iv.hi = std::move(b);
        iv.exact = false;
        return iv;
    }

    static IsolatingInterval exact_point(UniPoly p, Rational v) {
        IsolatingInterval iv;
        iv.poly = std::move(p);
        iv.lo = v;
        iv.hi = std::move(v);
        iv.exact = true;
        return iv;
    }

    Rational midpoint() const { return Rational((lo + hi) / 2); }
    Rational width() const { return Rational(hi - lo); }
    QInterval box() const { return QInterval(lo, hi); }
};

namespace detail {

inline int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& m : chain) signs.push_back(sign(m(x)));
    return sign_variations(signs);
}

/// Signs as x -> +inf (dir = +1) or x -> -inf (dir = -1).
inline int variations_at_infinity(const std::vector<UniPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& m : chain) {
        int s = sign(m.lc());
        if (dir < 0 && (m.degree() & 1)) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

} // namespace detail

/// Sturm chain p, p', -rem(p, p'), ... with each member scaled to a positive
/// integer-primitive representative (positive scaling preserves the sign
/// variations the chain is read for).  The input must be square-free: a chain
/// that bottoms out in a nonconstant gcd is rejected.
inline std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm sequence of zero polynomial");
    std::vector<UniPoly> chain;
    chain.push_back(p.primitive_scaled());
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative().primitive_scaled());
    while (chain.back().degree() > 0) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = a.divrem(b).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_scaled());
    }
    if (chain.back().degree() > 0)
        throw std::invalid_argument(
            "sturm sequence requires a square-free polynomial (repeated roots detected)");
    return chain;
}

/// Number of distinct real roots of p (square-free part is taken internally).
inline int count_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    UniPoly v = squarefree_part(p);
    if (v.degree() <= 0) return 0;
    auto chain = sturm_sequence(v);
    return detail::variations_at_infinity(chain, -1) - detail::variations_at_infinity(chain, +1);
}

/// Number of distinct real roots of p in the OPEN interval (lo, hi).
inline int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    if (!(lo < hi)) return 0;
    UniPoly v = squarefree_part(p);
    // Endpoint roots are excluded by the open-interval semantics; divide them
    // out so the Sturm counts are taken at non-root endpoints.
    if (sign(v(lo)) == 0) v = v.divexact(UniPoly({Rational(-lo), Rational(1)}));
    if (sign(v(hi)) == 0) v = v.divexact(UniPoly({Rational(-hi), Rational(1)}));
    if (v.degree() <= 0) return 0;
    auto chain = sturm_sequence(v);
    return detail::variations_at(chain, lo) - detail::variations_at(chain, hi);
}

/// One certificate per distinct real root of p, in increasing root order.
/// Bracket endpoints are dyadic (bisection from a power-of-two Cauchy bound);
/// rational roots hit by a bisection midpoint come back as exact points.
inline std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
    UniPoly v = squarefree_part(p);
    std::vector<IsolatingInterval> out;
    if (v.degree() <= 0) return out;

    Rational bound = v.cauchy_root_bound();
    Rational M(1);
    while (M < bound) M *= 2;

    auto chain = sturm_sequence(v);
    auto rec = [&out](auto&& self, const UniPoly& w, const std::vector<UniPoly>& wchain,
                      const Rational& lo, const Rational& hi, int vlo, int vhi) -> void {
        int nroots = vlo - vhi;
        if (nroots <= 0) return;
        if (nroots == 1) {
            out.push_back(IsolatingInterval::bracket(w, lo, hi));
            return;
        }
        Rational mid((lo + hi) / 2);
        if (sign(w(mid)) == 0) {
            // The midpoint is itself a root: record it exactly, divide it out,
            // and continue on both halves with a fresh chain.
            out.push_back(IsolatingInterval::exact_point(w, mid));
            UniPoly w2 = w.divexact(UniPoly({Rational(-mid), Rational(1)}));
            auto chain2 = sturm_sequence(w2);
            int wlo = detail::variations_at(chain2, lo);
            int wmid = detail::variations_at(chain2, mid);
            int whi = detail::variations_at(chain2, hi);
            self(self, w2, chain2, lo, mid, wlo, wmid);
            self(self, w2, chain2, mid, hi, wmid, whi);
        } else {
            int vmid = detail::variations_at(wchain, mid);
            self(self, w, wchain, lo, mid, vlo, vmid);
            self(self, w, wchain, mid, hi, vmid, vhi);
        }
    };
    Rational lo(-M);
    rec(rec, v, chain, lo, M, detail::variations_at(chain, lo), detail::variations_at(chain, M));

    std::sort(out.begin(), out.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.exact && !b.exact;
    });
    return out;
}

/// Shrink a bracket to width <= eps by sign-preserving bisection.  The
/// certified root never changes; a midpoint that lands on the root upgrades
/// the certificate to an exact point.
inline IsolatingInterval refine(const IsolatingInterval& iv, const Rational& eps) {
    if (!(eps > 0)) throw std::invalid_argument("refinement width must be positive");
    if (iv.exact) return iv;
    Rational lo = iv.lo, hi = iv.hi;
    int slo = sign(iv.poly(lo));
    while (hi - lo > eps) {
        Rational mid((lo + hi) / 2);
        int smid = sign(iv.poly(mid));
        if (smid == 0) return IsolatingInterval::exact_point(iv.poly, mid);
        if (smid == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return IsolatingInterval::bracket(iv.poly, lo, hi);
}

/// Exact sign of q at the algebraic number certified by iv.  Zero is decided
/// algebraically (gcd carries the shared root); a nonzero sign is reached by
/// refining until interval evaluation of q is sign-definite.
inline int sign_at_root(const UniPoly& q, const IsolatingInterval& iv) {
    if (iv.exact) return sign(q(iv.lo));
    if (q.is_zero()) return 0;
    UniPoly g = gcd(iv.poly, q);
    if (g.degree() >= 1 && count_real_roots(g, iv.lo, iv.hi) >= 1) return 0;
    Rational lo = iv.lo, hi = iv.hi;
    int slo = sign(iv.poly(lo));
    for (int step = 0; step < 10000; ++step) {
        QInterval value = q.eval_interval(QInterval(lo, hi));
        if (!value.contains_zero()) return sign(value.lo);
        Rational mid((lo + hi) / 2);
        int smid = sign(iv.poly(mid));
        if (smid == 0) return sign(q(mid));
        if (smid == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    throw std::logic_error("sign_at_root: interval refinement failed to separate from zero");
}

} // namespace pinchuk
