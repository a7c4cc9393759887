#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "elimination.hpp"
#include "interval.hpp"
#include "rational.hpp"
#include "sturm.hpp"
#include "system.hpp"
#include "unipoly.hpp"

namespace pinchuk {

/// Default reporting width for preimage enclosures: 2^-30.
inline const Rational& default_enclosure_eps() {
    static const Rational eps = rational_pow(Rational(1, 2), 30);
    return eps;
}

/// How a preimage point was found: through the rational inverse psi off the
/// bad locus, or as a boundary point on one of the two parameterized curves
/// in f^{-1}(0).
enum class PreimageSource { Regular, A1, A2 };

inline const char* to_string(PreimageSource s) {
    switch (s) {
        case PreimageSource::Regular: return "regular";
        case PreimageSource::A1: return "A1";
        case PreimageSource::A2: return "A2";
    }
    return "?";
}

/// One solution of F(x, y) = (a, b): an exact rational point or a rational
/// box of width <= eps around it.
struct FiberPreimage {
    QInterval x{Rational(0), Rational(0)};
    QInterval y{Rational(0), Rational(0)};
    bool exact = false;
    PreimageSource source = PreimageSource::Regular;
};

/// Full accounting of a fiber F^{-1}(a, b).
struct FiberReport {
    Rational a, b;
    int real_count = 0;        ///< number of distinct real preimages
    int complex_count = 0;     ///< number of distinct complex preimages
    int zero_multiplicity = 0; ///< multiplicity of the root f = 0 in W
    int escaping_roots = 0;    ///< real W-roots on the branch f = h(h+1) != 0
    int boundary_contribution = 0; ///< preimages contributed through f = 0 (0 or 2)
    std::vector<IsolatingInterval> genuine_roots;      ///< f-roots carrying preimages
    std::vector<IsolatingInterval> escaping_intervals; ///< f-roots carrying none
    std::vector<FiberPreimage> preimages;
};

/// The degree-6 fiber polynomial in f over a rational target, by exact
/// specialization of the cached symbolic W.
inline UniPoly build_W(const Rational& a0, const Rational& b0) {
    static const std::vector<MultiPoly> wcoeffs = elimination_data().W.coefficients_in("f");
    std::vector<Rational> c;
    c.reserve(wcoeffs.size());
    for (const MultiPoly& wc : wcoeffs)
        c.push_back(wc.evaluate({{"f", Rational(0)}, {"a", a0}, {"b", b0}}));
    return UniPoly(std::move(c));
}

/// The branch-2 locus polynomial r(f, a0) = f - (a0-f)*(a0-f+1), expanded:
/// -f^2 + (2*a0+2)*f - a0*(a0+1).
inline UniPoly branch2_polynomial(const Rational& a0) {
    return UniPoly(
        {Rational(-a0 * (a0 + 1)), Rational(2 * a0 + 2), Rational(-1)});
}

namespace detail {

/// Enclose the psi-image of a genuine root to width <= eps, refining the
/// f-root bracket until the interval quotients are defined and tight.
inline FiberPreimage enclose_psi_preimage(IsolatingInterval root, const Rational& a0,
                                          const Rational& eps) {
    FiberPreimage pre;
    pre.source = PreimageSource::Regular;
    if (root.exact) {
        auto [xv, yv] = psi(root.lo, Rational(a0 - root.lo));
        pre.x = QInterval::point(xv);
        pre.y = QInterval::point(yv);
        pre.exact = true;
        return pre;
    }
    // With h = a0 - f on the fiber:
    //   x = (h+1)*f / r^2  and  y = (f - h^2)*r^2 / f^2,  r = f - h*(h+1).
    UniPoly xnum({Rational(0), Rational(a0 + 1), Rational(-1)}); // (a0-f+1)*f
    UniPoly r = branch2_polynomial(a0);
    UniPoly xden = r * r;
    UniPoly ynum = UniPoly({Rational(-a0 * a0), Rational(2 * a0 + 1), Rational(-1)}) * xden;
    UniPoly yden({Rational(0), Rational(0), Rational(1)}); // f^2

    Rational width(eps < root.width() ? eps : root.width());
    for (int attempt = 0; attempt < 200; ++attempt) {
        root = refine(root, width);
        if (root.exact) return enclose_psi_preimage(root, a0, eps);
        QInterval box = root.box();
        try {
            QInterval xI = interval_div(xnum.eval_interval(box), xden.eval_interval(box));
            QInterval yI = interval_div(ynum.eval_interval(box), yden.eval_interval(box));
            if (xI.width() <= eps && yI.width() <= eps) {
                pre.x = xI;
                pre.y = yI;
                pre.exact = false;
                return pre;
            }
        } catch (const std::domain_error&) {
            // Denominator interval still straddles zero; keep shrinking.
        }
        width /= 2;
    }
    throw std::logic_error("fiber enclosure did not converge");
}

/// Enclose the boundary preimage at parameter interval t (a bracket of
/// +-sqrt(-b0)) on the given parameterized curve.
inline FiberPreimage enclose_boundary_preimage(IsolatingInterval t, int curve_index,
                                               const Rational& eps) {
    FiberPreimage pre;
    pre.source = curve_index == 1 ? PreimageSource::A1 : PreimageSource::A2;
    if (t.exact) {
        auto [xv, yv] = a_curves()[static_cast<std::size_t>(curve_index - 1)].at(t.lo);
        pre.x = QInterval::point(xv);
        pre.y = QInterval::point(yv);
        pre.exact = true;
        return pre;
    }
    // Curve 1: x = -1/t, y = -t(t+1).  Curve 2: x = -(t+1)/t^2, y = -t^2.
    UniPoly xnum = curve_index == 1 ? UniPoly::constant(Rational(-1))
                                    : UniPoly({Rational(-1), Rational(-1)});
    UniPoly xden = curve_index == 1 ? UniPoly({Rational(0), Rational(1)})
                                    : UniPoly({Rational(0), Rational(0), Rational(1)});
    UniPoly ypoly = curve_index == 1 ? UniPoly({Rational(0), Rational(-1), Rational(-1)})
                                     : UniPoly({Rational(0), Rational(0), Rational(-1)});
    Rational width(eps < t.width() ? eps : t.width());
    for (int attempt = 0; attempt < 200; ++attempt) {
        t = refine(t, width);
        if (t.exact) return enclose_boundary_preimage(t, curve_index, eps);
        QInterval box = t.box();
        try {
            QInterval xI = interval_div(xnum.eval_interval(box), xden.eval_interval(box));
            QInterval yI = ypoly.eval_interval(box);
            if (xI.width() <= eps && yI.width() <= eps) {
                pre.x = xI;
                pre.y = yI;
                pre.exact = false;
                return pre;
            }
        } catch (const std::domain_error&) {
        }
        width /= 2;
    }
    throw std::logic_error("boundary enclosure did not converge");
}

} // namespace detail

/// Solve the fiber over (a0, b0) exactly:
///   1. Build W, strip the f^m0 factor, reduce to the square-free core V.
///   2. Split V's roots into escaping roots (shared with the branch-2 locus;
///      they carry no preimage) and genuine roots (one preimage each via psi).
///   3. Add the boundary pair on A1/A2 when a0 picks out the f = 0 slice
///      (a0 in {0, -1}) and b0 < 0 supplies real parameters +-sqrt(-b0).
/// Every step is exact; enclosures are rational boxes of width <= eps.
inline FiberReport real_fiber(const Rational& a0, const Rational& b0,
                              const Rational& eps = default_enclosure_eps()) {
    if (!(eps > 0)) throw std::invalid_argument("enclosure width must be positive");
    FiberReport report;
    report.a = a0;
    report.b = b0;

    UniPoly W = build_W(a0, b0);
    report.zero_multiplicity = W.trailing_zero_exponent();
    UniPoly V = squarefree_part(W.shift_down(report.zero_multiplicity));
    UniPoly g1 = gcd(V, branch2_polynomial(a0));
    if (g1.degree() >= 1) {
        report.escaping_intervals = isolate_real_roots(g1);
        V = V.divexact(g1);
    }
    report.escaping_roots = static_cast<int>(report.escaping_intervals.size());
    if (V.degree() >= 1) report.genuine_roots = isolate_real_roots(V);
    // Tighten the reported enclosures; dyadic bisection also promotes roots
    // it lands on exactly.
    for (IsolatingInterval& iv : report.escaping_intervals) iv = refine(iv, eps);
    for (IsolatingInterval& iv : report.genuine_roots) iv = refine(iv, eps);
    for (const IsolatingInterval& root : report.genuine_roots)
        report.preimages.push_back(detail::enclose_psi_preimage(root, a0, eps));

    bool zero_slice = a0 == Rational(0) || a0 == Rational(-1);
    int curve_index = a0 == Rational(0) ? 1 : 2;
    if (zero_slice && b0 < 0) {
        report.boundary_contribution = 2;
        Rational tval;
        if (rational_sqrt(Rational(-b0), &tval)) {
            UniPoly tpoly({b0, Rational(0), Rational(1)});
            for (const Rational& t0 : {tval, Rational(-tval)})
                report.preimages.push_back(detail::enclose_boundary_preimage(
                    IsolatingInterval::exact_point(tpoly, t0), curve_index, eps));
        } else {
            for (const IsolatingInterval& t :
                 isolate_real_roots(UniPoly({b0, Rational(0), Rational(1)})))
                report.preimages.push_back(
                    detail::enclose_boundary_preimage(t, curve_index, eps));
        }
    }

    report.real_count =
        static_cast<int>(report.genuine_roots.size()) + report.boundary_contribution;
    // Complex roots: all of V (already divided by g1), plus the boundary
    // double point over the f = 0 slice whenever b0 != 0.
    report.complex_count = V.degree() + (zero_slice && sign(b0) != 0 ? 2 : 0);
    return report;
}

/// Distinct complex preimages over (a0, b0), by degree bookkeeping alone.
inline int complex_fiber_count(const Rational& a0, const Rational& b0) {
    UniPoly W = build_W(a0, b0);
    int m0 = W.trailing_zero_exponent();
    UniPoly V = squarefree_part(W.shift_down(m0));
    UniPoly g1 = gcd(V, branch2_polynomial(a0));
    bool zero_slice = a0 == Rational(0) || a0 == Rational(-1);
    return V.degree() - g1.degree() + (zero_slice && sign(b0) != 0 ? 2 : 0);
}

enum class ClassifyKind { OffCurve, OnCurveRegular, Exceptional };

inline const char* to_string(ClassifyKind k) {
    switch (k) {
        case ClassifyKind::OffCurve: return "OFF_CURVE";
        case ClassifyKind::OnCurveRegular: return "ON_CURVE_REGULAR";
        case ClassifyKind::Exceptional: return "EXCEPTIONAL";
    }
    return "?";
}

/// Trichotomy label for a target point: one of the two empty-fiber points,
/// a regular curve point (fiber size 1), or off the curve (fiber size 2)
/// with a side parity.
struct ClassifyResult {
    ClassifyKind kind = ClassifyKind::OffCurve;
    std::optional<Parity> side;                 ///< off-curve only
    std::vector<IsolatingInterval> curve_params; ///< on-curve only
};

/// Classify a target and (optionally but by default) cross-check the label
/// against the actual fiber count.
inline ClassifyResult classify(const Rational& a0, const Rational& b0,
                               bool crosscheck = true) {
    ClassifyResult result;
    const auto& K = curve_c().K;
    if (std::make_pair(a0, b0) == K[0] || std::make_pair(a0, b0) == K[1]) {
        result.kind = ClassifyKind::Exceptional;
    } else {
        result.curve_params = on_curve(a0, b0);
        if (!result.curve_params.empty()) {
            result.kind = ClassifyKind::OnCurveRegular;
        } else {
            result.kind = ClassifyKind::OffCurve;
            result.side = side_of_curve(a0, b0);
        }
    }
    if (crosscheck) {
        int count = real_fiber(a0, b0).real_count;
        int expected = result.kind == ClassifyKind::OffCurve          ? 2
                       : result.kind == ClassifyKind::OnCurveRegular ? 1
                                                                     : 0;
        if (count != expected)
            throw std::logic_error("fiber count contradicts classification label");
    }
    return result;
}

/// The two points with empty fibers, each verified by an actual fiber solve.
inline const std::array<std::pair<Rational, Rational>, 2>& exceptional_set() {
    static const std::array<std::pair<Rational, Rational>, 2> points = [] {
        auto K = curve_c().K;
        for (const auto& [a0, b0] : K)
            if (real_fiber(a0, b0).real_count != 0)
                throw std::logic_error("exceptional point has a nonempty fiber");
        return K;
    }();
    return points;
}

} // namespace pinchuk
