#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multipoly.hpp"
#include "poly_parse.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace pinchuk {

/// The expanded polynomials of Pinchuk's map F = (p, q): a degree-(10, 40)
/// polynomial map of the real plane with everywhere-positive Jacobian
/// determinant that is not injective.  Built once and cached; all fields are
/// fully expanded and canonical.
struct PinchukSystem {
    // Over (x, y):
    MultiPoly t;   ///< t = x*y - 1
    MultiPoly h;   ///< h = t*(x*t + 1), degree 5
    MultiPoly f;   ///< f = (x*t + 1)^2 * (t^2 + y), degree 10
    MultiPoly g;   ///< g = f - h*(h + 1) = (x*t + 1)*(t^2 + y), degree 7
    MultiPoly p;   ///< p = f + h, degree 10
    MultiPoly q;   ///< q = -t^2 - 6*t*h*(h+1) + u(f, h), degree 40
    MultiPoly jac; ///< dp/dx * dq/dy - dp/dy * dq/dx
    // Over (f, h):
    MultiPoly u; ///< the quartic gluing polynomial defining q
};

namespace detail {

inline PinchukSystem construct_system() {
    const std::vector<std::string> xy{"x", "y"};
    MultiPoly x = MultiPoly::variable(xy, "x");
    MultiPoly y = MultiPoly::variable(xy, "y");
    MultiPoly one = MultiPoly::constant(xy, Rational(1));

    PinchukSystem sys;
    sys.t = x * y - one;
    MultiPoly xt1 = x * sys.t + one;
    sys.h = sys.t * xt1;
    sys.f = xt1.pow(2) * (sys.t * sys.t + y);
    sys.p = sys.f + sys.h;
    sys.g = sys.f - sys.h * (sys.h + one);

    const std::vector<std::string> fh{"f", "h"};
    MultiPoly fb = MultiPoly::variable(fh, "f");
    MultiPoly hb = MultiPoly::variable(fh, "h");
    sys.u = Rational(1, 4) * fb *
            (Rational(75) * fb.pow(3) + Rational(300) * fb.pow(2) * hb +
             Rational(450) * fb * hb.pow(2) + Rational(276) * fb.pow(2) +
             Rational(828) * fb * hb + Rational(48) * hb.pow(2) + Rational(364) * fb +
             Rational(48) * hb);

    MultiPoly u_xy = sys.u.substitute({{"f", sys.f}, {"h", sys.h}});
    sys.q = -(sys.t * sys.t) - Rational(6) * sys.t * sys.h * (sys.h + one) + u_xy;

    sys.jac = sys.p.partial_derivative("x") * sys.q.partial_derivative("y") -
              sys.p.partial_derivative("y") * sys.q.partial_derivative("x");

    auto expect_degree = [](const MultiPoly& poly, long d, const char* name) {
        if (poly.total_degree() != d)
            throw std::logic_error(std::string("system construction: wrong degree for ") + name);
    };
    expect_degree(sys.t, 2, "t");
    expect_degree(sys.h, 5, "h");
    expect_degree(sys.f, 10, "f");
    expect_degree(sys.g, 7, "g");
    expect_degree(sys.p, 10, "p");
    expect_degree(sys.q, 40, "q");
    expect_degree(sys.u, 4, "u");
    if (sys.jac.is_zero())
        throw std::logic_error("system construction: Jacobian determinant is zero");
    return sys;
}

} // namespace detail

/// The cached, immutable system.  Thread-safe after first call.
inline const PinchukSystem& build_system() {
    static const PinchukSystem sys = detail::construct_system();
    return sys;
}

/// Exact evaluation of F = (p, q) at a rational point.
inline std::pair<Rational, Rational> apply_F(const Rational& x0, const Rational& y0) {
    const PinchukSystem& sys = build_system();
    std::map<std::string, Rational> at{{"x", x0}, {"y", y0}};
    return {sys.p.evaluate(at), sys.q.evaluate(at)};
}

inline const MultiPoly& jacobian_determinant() { return build_system().jac; }

/// Result of an exact sign sweep of the Jacobian determinant over a square
/// grid of rational points.
struct GridPositivityReport {
    bool all_positive = false;
    long points_checked = 0;
    std::optional<std::pair<Rational, Rational>> first_nonpositive;
};

/// Evaluate jac at every node lo, lo+step, ..., hi on both axes and verify
/// positivity.  Exact arithmetic throughout; a sampling check only.
inline GridPositivityReport jacobian_positive_on_grid(const Rational& lo, const Rational& hi,
                                                      const Rational& step) {
    if (!(step > 0) || !(lo < hi))
        throw std::invalid_argument("grid check requires lo < hi and step > 0");
    const MultiPoly& jac = jacobian_determinant();
    GridPositivityReport report;
    report.all_positive = true;
    for (Rational xv = lo; xv <= hi; xv += step) {
        // One column at a time: jac(xv, y) collapses to a univariate in y.
        UniPoly col = specialize_to_unipoly(jac, "y", {{"x", xv}});
        for (Rational yv = lo; yv <= hi; yv += step) {
            ++report.points_checked;
            if (sign(col(yv)) <= 0) {
                report.all_positive = false;
                if (!report.first_nonpositive) report.first_nonpositive = {xv, yv};
            }
        }
    }
    return report;
}

/// One of the two parameterized curves making up f^{-1}(0): rational
/// functions x(t), y(t) over the parameter t, with t = 0 excluded from the
/// domain.  Curve 1 carries h = 0, curve 2 carries h = -1; q restricts to
/// -t^2 on both, which is what makes their points escape to infinity over
/// the negative b-axis.
struct ACurve {
    int index;       ///< 1 or 2
    RationalMap x_t; ///< x as a rational function of t
    RationalMap y_t; ///< y as a rational function of t
    const std::vector<std::string>& param_vars() const { return x_t.num.vars(); }

    /// Exact point at a rational parameter value (t0 != 0).
    std::pair<Rational, Rational> at(const Rational& t0) const {
        if (sign(t0) == 0) throw std::domain_error("curve parameter t = 0 is excluded");
        std::map<std::string, Rational> bind{{"t", t0}};
        Rational xn = x_t.num.evaluate(bind), xd = x_t.den.evaluate(bind);
        Rational yn = y_t.num.evaluate(bind), yd = y_t.den.evaluate(bind);
        return {Rational(xn / xd), Rational(yn / yd)};
    }
};

namespace detail {

inline std::array<ACurve, 2> construct_a_curves() {
    const std::vector<std::string> tv{"t"};
    MultiPoly t = MultiPoly::variable(tv, "t");
    MultiPoly one = MultiPoly::constant(tv, Rational(1));
    ACurve a1;
    a1.index = 1;
    a1.x_t = {-one, t};                 // x = -1/t
    a1.y_t = {-(t * (t + one)), one};   // y = -t(t+1)
    ACurve a2;
    a2.index = 2;
    a2.x_t = {-(t + one), t * t};       // x = -(t+1)/t^2
    a2.y_t = {-(t * t), one};           // y = -t^2
    return {a1, a2};
}

} // namespace detail

inline const std::array<ACurve, 2>& a_curves() {
    static const std::array<ACurve, 2> curves = detail::construct_a_curves();
    return curves;
}

/// Exact inverse of the auxiliary map (x,y) -> (f,h) away from the bad locus
/// B = { fbar * (fbar - hbar*(hbar+1)) = 0 }.
inline std::pair<Rational, Rational> psi(const Rational& fbar, const Rational& hbar) {
    if (sign(fbar) == 0)
        throw std::domain_error("psi undefined: factor fbar vanishes (point lies in B)");
    Rational rv(fbar - hbar * (hbar + 1));
    if (sign(rv) == 0)
        throw std::domain_error(
            "psi undefined: factor fbar - hbar*(hbar+1) vanishes (point lies in B)");
    Rational r2(rv * rv);
    Rational xv((hbar + 1) * fbar / r2);
    Rational yv((fbar - hbar * hbar) * r2 / (fbar * fbar));
    return {xv, yv};
}

/// The target-side factor of F: G(fbar, hbar) = (a, b) with F = G o (f, h)
/// wherever fbar != 0.  Satisfies W(fbar, a, b) = 0 identically.
inline std::pair<Rational, Rational> G_map(const Rational& fbar, const Rational& hbar) {
    if (sign(fbar) == 0) throw std::domain_error("G undefined at fbar = 0");
    const PinchukSystem& sys = build_system();
    Rational a(fbar + hbar);
    Rational uval = sys.u.evaluate({{"f", fbar}, {"h", hbar}});
    Rational num(hbar * hbar * (fbar - hbar * (hbar + 1)) *
                 (fbar + (6 * fbar - hbar) * (hbar + 1)));
    Rational b(uval - num / (fbar * fbar));
    return {a, b};
}

/// The eliminated system: Q ties (f, h, q) together off B; W = Q with
/// h -> a - f, q -> b is the degree-6 polynomial whose roots in fbar
/// enumerate candidate fiber solutions over a target (a, b); r carries the
/// second branch of B in fiber coordinates.
struct EliminationData {
    MultiPoly Q; ///< over (f, h, q); Q(f(x,y), h(x,y), q(x,y)) == 0
    MultiPoly W; ///< over (f, a, b); degree 6 in f, leading coefficient -197/4
    MultiPoly r; ///< over (f, a); r = f - (a-f)*(a-f+1)
};

namespace detail {

inline EliminationData construct_elimination_data() {
    const PinchukSystem& sys = build_system();
    const std::vector<std::string> fhq{"f", "h", "q"};
    MultiPoly fb = MultiPoly::variable(fhq, "f");
    MultiPoly hb = MultiPoly::variable(fhq, "h");
    MultiPoly qb = MultiPoly::variable(fhq, "q");
    MultiPoly one = MultiPoly::constant(fhq, Rational(1));
    MultiPoly u3 = sys.u.substitute({{"f", fb}, {"h", hb}});

    EliminationData ed;
    ed.Q = fb.pow(2) * (qb - u3) +
           hb.pow(2) * (fb - hb * (hb + one)) * (fb + (Rational(6) * fb - hb) * (hb + one));

    const std::vector<std::string> fab{"f", "a", "b"};
    MultiPoly wf = MultiPoly::variable(fab, "f");
    MultiPoly wa = MultiPoly::variable(fab, "a");
    MultiPoly wb = MultiPoly::variable(fab, "b");
    ed.W = ed.Q.substitute({{"h", wa - wf}, {"q", wb}});

    const std::vector<std::string> fa{"f", "a"};
    MultiPoly rf = MultiPoly::variable(fa, "f");
    MultiPoly ra = MultiPoly::variable(fa, "a");
    MultiPoly rone = MultiPoly::constant(fa, Rational(1));
    ed.r = rf - (ra - rf) * (ra - rf + rone);

    if (ed.W.degree_in("f") != 6)
        throw std::logic_error("elimination data: W does not have degree 6 in f");
    auto wcoeffs = ed.W.coefficients_in("f");
    if (wcoeffs.back() != MultiPoly::constant(fab, Rational(-197, 4)))
        throw std::logic_error("elimination data: leading f-coefficient of W is not -197/4");
    return ed;
}

} // namespace detail

inline const EliminationData& elimination_data() {
    static const EliminationData data = detail::construct_elimination_data();
    return data;
}

/// First coordinate of the curve parameterization: a(s) = s^2 + 2s.
inline const UniPoly& curve_phi1() {
    static const UniPoly phi1({Rational(0), Rational(2), Rational(1)});
    return phi1;
}

/// Second coordinate: b(s) = u(s^2 + s, s), a degree-8 polynomial in s.
inline const UniPoly& curve_phi2() {
    static const UniPoly phi2 = [] {
        const PinchukSystem& sys = build_system();
        const std::vector<std::string> sv{"s"};
        MultiPoly s = MultiPoly::variable(sv, "s");
        MultiPoly composed = sys.u.substitute({{"f", s * s + s}, {"h", s}});
        UniPoly result = to_unipoly(composed);
        if (result.degree() != 8)
            throw std::logic_error("curve construction: second coordinate is not degree 8");
        return result;
    }();
    return phi2;
}

/// One named identity checked by exact expansion; `detail` carries either a
/// computed constant (when the identity determines one) or a truncated
/// residual for failures.
struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

namespace detail {

inline std::string truncated_residual(const MultiPoly& residual) {
    std::string s = residual.to_string();
    if (s.size() > 160) s = s.substr(0, 160) + "...";
    return "nonzero residual: " + s;
}

inline void record(IdentityReport& report, std::string name, bool pass,
                   std::string note = std::string()) {
    report.checks.push_back({std::move(name), pass, std::move(note)});
    if (!pass) report.all_pass = false;
}

inline void check_zero(IdentityReport& report, std::string name, const MultiPoly& residual) {
    bool pass = residual.is_zero();
    record(report, std::move(name), pass, pass ? std::string() : truncated_residual(residual));
}

} // namespace detail

/// Verify the structural identities of the system by exact polynomial
/// expansion: every check reduces a claimed identity to the zero polynomial.
inline IdentityReport verify_identities() {
    const PinchukSystem& sys = build_system();
    const EliminationData& ed = elimination_data();
    IdentityReport report;

    // The multiplicative relation tying h and t to f.
    {
        const std::vector<std::string> xy{"x", "y"};
        MultiPoly one = MultiPoly::constant(xy, Rational(1));
        detail::check_zero(report, "(h - t)*f == h^2*(h + 1)",
                           (sys.h - sys.t) * sys.f - sys.h.pow(2) * (sys.h + one));
    }

    // Q annihilates the map components identically.
    detail::check_zero(report, "Q(f(x,y), h(x,y), q(x,y)) == 0",
                       ed.Q.substitute({{"f", sys.f}, {"h", sys.h}, {"q", sys.q}}));

    // Restriction of t, f, h, q to the two parameterized curves in f^{-1}(0).
    for (const ACurve& curve : a_curves()) {
        std::string tag = "A" + std::to_string(curve.index);
        const std::vector<std::string>& tv = curve.param_vars();
        MultiPoly tpoly = MultiPoly::variable(tv, "t");
        std::map<std::string, RationalMap> subs{{"x", curve.x_t}, {"y", curve.y_t}};

        MultiPoly den;
        MultiPoly tn = compose_cleared(sys.t, subs, &den);
        detail::check_zero(report, "t(" + tag + "(t)) == t", tn - tpoly * den);

        detail::check_zero(report, "f(" + tag + "(t)) == 0", compose_cleared(sys.f, subs));

        MultiPoly hn = compose_cleared(sys.h, subs, &den);
        if (curve.index == 1) {
            detail::check_zero(report, "h(" + tag + "(t)) == 0", hn);
        } else {
            detail::check_zero(report, "h(" + tag + "(t)) == -1", hn + den);
        }

        MultiPoly qn = compose_cleared(sys.q, subs, &den);
        detail::check_zero(report, "q(" + tag + "(t)) == -t^2", qn + tpoly.pow(2) * den);
    }

    // The symmetry defect of the curve's second coordinate about s = -1
    // factors exactly through the quadratic with no real roots; the constant
    // is computed, not assumed.
    {
        const UniPoly& phi2 = curve_phi2();
        const std::vector<std::string> sv{"s"};
        MultiPoly s = MultiPoly::variable(sv, "s");
        MultiPoly reflected = to_multipoly(phi2, "s").substitute(
            {{"s", MultiPoly::constant(sv, Rational(-2)) - s}});
        UniPoly defect = to_unipoly(to_multipoly(phi2, "s") - reflected);
        UniPoly quad({Rational(104), Rational(150), Rational(75)});
        UniPoly splus1({Rational(1), Rational(1)});
        UniPoly cube = splus1 * splus1 * splus1;
        auto [quot, rem] = defect.divrem(quad * cube);
        bool pass = rem.is_zero() && quot.degree() == 0 && !quot.is_zero();
        detail::record(report, "phi2(s) - phi2(-2-s) == c*(75s^2+150s+104)*(s+1)^3", pass,
                       pass ? "c = " + to_string(quot.coeff(0))
                            : "division leaves remainder " + rem.to_string());
    }

    // Shape of W: constant leading coefficient, and the full display at a=0.
    {
        auto wcoeffs = ed.W.coefficients_in("f");
        bool pass = ed.W.degree_in("f") == 6 &&
                    wcoeffs.back() == MultiPoly::constant(ed.W.vars(), Rational(-197, 4));
        detail::record(report, "leading f-coefficient of W == -197/4", pass);

        MultiPoly w0 = ed.W.specialize("a", Rational(0)); // over (f, b)
        MultiPoly expected =
            parse_poly("f^2*(-197/4*f^4 + 104*f^3 - 63*f^2 + b)", {"f", "b"});
        detail::check_zero(report, "W(f, 0, b) == f^2*(-197/4*f^4+104*f^3-63*f^2+b)",
                           w0 - expected);
    }

    // Q collapses on the f = 0 slice.
    {
        MultiPoly q0 = ed.Q.specialize("f", Rational(0)); // over (h, q)
        MultiPoly expected = parse_poly("h^4*(h + 1)^2", {"h", "q"});
        detail::check_zero(report, "Q(0, h, b) == h^4*(h+1)^2", q0 - expected);
    }

    return report;
}

} // namespace pinchuk
