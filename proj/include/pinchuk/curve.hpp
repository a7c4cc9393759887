#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "sturm.hpp"
#include "system.hpp"
#include "unipoly.hpp"

namespace pinchuk {

/// The image curve traced by s -> (phi1(s), phi2(s)) over real s, together
/// with the two exceptional points sitting on it and the reduction data used
/// for fast membership/side tests.
///
/// The reduction: phi2(s) mod (s^2 + 2s - a) == lin(a)*s + cst(a) over the
/// rationals in a.  The resultant of s^2+2s-a and phi2(s)-b then collapses
/// to the closed form
///     R(a, b) = (cst - b)^2 - 2*lin*(cst - b) - a*lin^2,
/// which vanishes exactly on the curve plus its single extra Zariski point,
/// is positive off the curve at even side parity and negative at odd parity.
struct CurveC {
    UniPoly phi1; ///< s^2 + 2s
    UniPoly phi2; ///< degree 8
    std::array<std::pair<Rational, Rational>, 2> K; ///< empty-fiber points, on the curve
    UniPoly lin; ///< linear s-coefficient of phi2 mod (s^2+2s-a), in a
    UniPoly cst; ///< constant part of the same reduction, in a
};

namespace detail {

inline CurveC construct_curve() {
    CurveC c;
    c.phi1 = curve_phi1();
    c.phi2 = curve_phi2();
    c.K = {{{Rational(-1), Rational(0)}, {Rational(0), Rational(0)}}};

    // Reduce s^k == pk(a) + qk(a)*s modulo s^2 = a - 2s and accumulate phi2.
    UniPoly a_var({Rational(0), Rational(1)});
    UniPoly pk = UniPoly::constant(Rational(1));
    UniPoly qk; // zero
    UniPoly cst, lin;
    for (int k = 0; k <= c.phi2.degree(); ++k) {
        cst = cst + pk * UniPoly::constant(c.phi2.coeff(k));
        lin = lin + qk * UniPoly::constant(c.phi2.coeff(k));
        UniPoly pk_next = a_var * qk;
        UniPoly qk_next = pk - UniPoly::constant(Rational(2)) * qk;
        pk = std::move(pk_next);
        qk = std::move(qk_next);
    }
    c.lin = std::move(lin);
    c.cst = std::move(cst);
    if (c.lin.degree() != 2 || c.cst.degree() != 4)
        throw std::logic_error("curve construction: unexpected reduction degrees");
    return c;
}

} // namespace detail

inline const CurveC& curve_c() {
    static const CurveC c = detail::construct_curve();
    return c;
}

/// Exact curve point at a rational parameter.
inline std::pair<Rational, Rational> phi(const Rational& s0) {
    const CurveC& c = curve_c();
    return {c.phi1(s0), c.phi2(s0)};
}

/// Resultant of (s^2 + 2s - a0, phi2(s) - b0) in closed form: zero exactly
/// when (a0, b0) lies on the curve or equals the extra Zariski point;
/// otherwise its sign encodes the side parity (positive <-> even).
inline Rational curve_membership_value(const Rational& a0, const Rational& b0) {
    const CurveC& c = curve_c();
    Rational lin = c.lin(a0);
    Rational beta(c.cst(a0) - b0);
    return Rational(beta * beta - 2 * lin * beta - a0 * lin * lin);
}

/// All real parameters s with phi(s) = (a0, b0), as exact points or certified
/// brackets; empty when the target is off the curve.  Rational targets on the
/// curve always have rational parameters (conjugate quadratic parameters
/// would both map to b0 and break injectivity), so the bracket branch is the
/// decision procedure for completeness, not a path rational targets exercise.
inline std::vector<IsolatingInterval> on_curve(const Rational& a0, const Rational& b0) {
    std::vector<IsolatingInterval> params;
    if (a0 < Rational(-1)) return params; // phi1 = (s+1)^2 - 1 >= -1
    const CurveC& c = curve_c();
    UniPoly d({Rational(-a0), Rational(2), Rational(1)}); // s^2 + 2s - a0
    Rational disc(1 + a0);
    Rational delta;
    if (rational_sqrt(disc, &delta)) {
        Rational s_hi(-1 + delta), s_lo(-1 - delta);
        if (c.phi2(s_lo) == b0) params.push_back(IsolatingInterval::exact_point(d, s_lo));
        if (sign(delta) != 0 && c.phi2(s_hi) == b0)
            params.push_back(IsolatingInterval::exact_point(d, s_hi));
        return params;
    }
    UniPoly shifted = c.phi2 - UniPoly::constant(b0);
    UniPoly common = gcd(d, shifted);
    if (common.degree() >= 1) params = isolate_real_roots(common);
    return params;
}

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Parity of the number of real parameters s of s^2+2s = a0, counted with
/// multiplicity, whose curve ordinate phi2(s) exceeds b0.  Constant on the
/// connected components of the curve's complement; the two sides of the
/// curve carry opposite parities.  Undefined on the curve itself.
inline Parity side_of_curve(const Rational& a0, const Rational& b0) {
    if (!on_curve(a0, b0).empty())
        throw std::domain_error("side_of_curve is undefined on the curve");
    if (a0 < Rational(-1)) return Parity::Even; // no real parameters
    const CurveC& c = curve_c();
    Rational disc(1 + a0);
    int above = 0;
    Rational delta;
    if (rational_sqrt(disc, &delta)) {
        if (sign(delta) == 0) {
            // Tangential slice: the double parameter s = -1 counts twice.
            above = c.phi2(Rational(-1)) > b0 ? 2 : 0;
        } else {
            if (c.phi2(Rational(-1 + delta)) > b0) ++above;
            if (c.phi2(Rational(-1 - delta)) > b0) ++above;
        }
    } else {
        UniPoly d({Rational(-a0), Rational(2), Rational(1)});
        UniPoly shifted = c.phi2 - UniPoly::constant(b0);
        for (const IsolatingInterval& iv : isolate_real_roots(d))
            if (sign_at_root(shifted, iv) > 0) ++above;
    }
    return (above % 2) ? Parity::Odd : Parity::Even;
}

/// The one extra real point in the Zariski closure of the curve, coming from
/// the conjugate complex parameters killed by 75s^2 + 150s + 104.  Both
/// coordinates are forced to constants by reduction modulo that quadratic.
inline std::pair<Rational, Rational> zariski_extra_point() {
    static const std::pair<Rational, Rational> pt = [] {
        const CurveC& c = curve_c();
        UniPoly m({Rational(104), Rational(150), Rational(75)});
        auto [q1, r1] = c.phi1.divrem(m);
        auto [q2, r2] = c.phi2.divrem(m);
        if (r1.degree() > 0 || r2.degree() > 0)
            throw std::logic_error(
                "zariski closure: reduction left a nonconstant remainder, not a point");
        return std::pair<Rational, Rational>{r1.coeff(0), r2.coeff(0)};
    }();
    return pt;
}

} // namespace pinchuk
