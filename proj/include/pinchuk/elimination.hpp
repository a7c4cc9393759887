#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace pinchuk {
namespace detail {

/// Coefficient-domain operations for the generic subresultant machinery.
/// Instantiated for Rational (univariate over Q) and MultiPoly (univariate in
/// one variable with polynomial coefficients).  The "model" argument supplies
/// context (the variable list) for MultiPoly constants.
template <class C>
struct coeff_ops;

template <>
struct coeff_ops<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& a) { return sign(a) == 0; }
    static Rational mul(const Rational& a, const Rational& b) { return Rational(a * b); }
    static Rational sub(const Rational& a, const Rational& b) { return Rational(a - b); }
    static Rational neg(const Rational& a) { return Rational(-a); }
    static Rational divexact(const Rational& a, const Rational& b) { return Rational(a / b); }
    static Rational pow(const Rational& a, unsigned e) { return rational_pow(a, e); }
};

template <>
struct coeff_ops<MultiPoly> {
    static MultiPoly zero(const MultiPoly& model) { return MultiPoly(model.vars()); }
    static MultiPoly one(const MultiPoly& model) {
        return MultiPoly::constant(model.vars(), Rational(1));
    }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
    static MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
    static MultiPoly neg(const MultiPoly& a) { return -a; }
    static MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) { return a.divexact(b); }
    static MultiPoly pow(const MultiPoly& a, unsigned e) { return a.pow(e); }
};

/// Dense polynomial over coefficient domain C, lowest degree first, trimmed.
template <class C>
using DensePoly = std::vector<C>;

template <class C>
void dp_trim(DensePoly<C>& p) {
    using ops = coeff_ops<C>;
    while (!p.empty() && ops::is_zero(p.back())) p.pop_back();
}

template <class C>
int dp_degree(const DensePoly<C>& p) {
    return static_cast<int>(p.size()) - 1;
}

/// Pseudo-remainder R with lc(B)^(degA-degB+1) * A = Q*B + R.
template <class C>
DensePoly<C> pseudo_rem(DensePoly<C> A, const DensePoly<C>& B, const C& model) {
    using ops = coeff_ops<C>;
    int dB = dp_degree(B);
    if (dB < 0) throw std::invalid_argument("pseudo-division by zero");
    const C& lb = B.back();
    int e = dp_degree(A) - dB + 1;
    while (dp_degree(A) >= dB) {
        int dA = dp_degree(A);
        C la = A.back();
        // A <- lb*A - la * x^(dA-dB) * B
        DensePoly<C> next(static_cast<std::size_t>(dA), ops::zero(model));
        for (int i = 0; i < dA; ++i) next[static_cast<std::size_t>(i)] = ops::mul(lb, A[static_cast<std::size_t>(i)]);
        for (int i = 0; i < dB; ++i) {
            std::size_t k = static_cast<std::size_t>(dA - dB + i);
            next[k] = ops::sub(next[k], ops::mul(la, B[static_cast<std::size_t>(i)]));
        }
        dp_trim(next);
        A = std::move(next);
        --e;
    }
    // Normalize to the full-power convention.
    if (e > 0) {
        C f = ops::pow(B.back(), static_cast<unsigned>(e));
        for (auto& a : A) a = ops::mul(f, a);
    }
    return A;
}

/// Subresultant polynomial remainder sequence starting from (A, B), each
/// member divided by the subresultant factor g*h^d.  Controls coefficient
/// growth; every division is exact in the coefficient domain.  Returns the
/// sequence A, B, R1, R2, ... down to (and including) the last nonzero
/// member.
template <class C>
std::vector<DensePoly<C>> subresultant_prs(DensePoly<C> A, DensePoly<C> B, const C& model) {
    using ops = coeff_ops<C>;
    dp_trim(A);
    dp_trim(B);
    std::vector<DensePoly<C>> chain;
    if (dp_degree(A) < dp_degree(B)) std::swap(A, B);
    chain.push_back(A);
    if (dp_degree(B) < 0) return chain;
    chain.push_back(B);
    C g = ops::one(model), h = ops::one(model);
    while (true) {
        int d = dp_degree(A) - dp_degree(B);
        DensePoly<C> R = pseudo_rem(A, B, model);
        if (dp_degree(R) < 0) return chain;
        C divisor = ops::mul(g, ops::pow(h, static_cast<unsigned>(d)));
        for (auto& a : R) a = ops::divexact(a, divisor);
        chain.push_back(R);
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (d >= 1) h = ops::divexact(ops::pow(g, static_cast<unsigned>(d)), ops::pow(h, static_cast<unsigned>(d - 1)));
        if (dp_degree(B) == 0) return chain;
    }
}

/// Resultant via the subresultant PRS (matches the Sylvester determinant,
/// including sign).
template <class C>
C subresultant_resultant(DensePoly<C> A, DensePoly<C> B, const C& model) {
    using ops = coeff_ops<C>;
    dp_trim(A);
    dp_trim(B);
    int dA = dp_degree(A), dB = dp_degree(B);
    if (dA < 0 || dB < 0) return ops::zero(model); // resultant with zero polynomial
    bool negate = false;
    if (dA < dB) {
        std::swap(A, B);
        std::swap(dA, dB);
        if ((dA & 1) && (dB & 1)) negate = !negate;
    }
    if (dB == 0) {
        // res(A, b0) = b0^degA (and 1 when both are constants).
        C r = ops::pow(B[0], static_cast<unsigned>(dA));
        return negate ? ops::neg(r) : r;
    }
    C g = ops::one(model), h = ops::one(model);
    int s = 1;
    while (true) {
        dA = dp_degree(A);
        dB = dp_degree(B);
        int d = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        DensePoly<C> R = pseudo_rem(A, B, model);
        A = std::move(B);
        if (dp_degree(R) < 0) {
            if (dp_degree(A) > 0) return ops::zero(model); // common factor
            break;
        }
        C divisor = ops::mul(g, ops::pow(h, static_cast<unsigned>(d)));
        for (auto& a : R) a = ops::divexact(a, divisor);
        B = std::move(R);
        g = A.back();
        if (d >= 1)
            h = ops::divexact(ops::pow(g, static_cast<unsigned>(d)), ops::pow(h, static_cast<unsigned>(d - 1)));
        if (dp_degree(B) == 0) {
            // Final step: res = s * lc(B)^degA / h^(degA-1).
            int da = dp_degree(A);
            C num = ops::pow(B[0], static_cast<unsigned>(da));
            C r = ops::divexact(num, ops::pow(h, static_cast<unsigned>(da - 1)));
            if (s < 0) r = ops::neg(r);
            return negate ? ops::neg(r) : r;
        }
    }
    throw std::logic_error("subresultant resultant: unreachable termination");
}

inline DensePoly<Rational> dp_from_unipoly(const UniPoly& p) { return p.coefficients(); }

inline UniPoly dp_to_unipoly(const DensePoly<Rational>& p) {
    return UniPoly(std::vector<Rational>(p.begin(), p.end()));
}

} // namespace detail

/// Monic greatest common divisor via the subresultant PRS.  gcd(p, 0) is p
/// made monic; gcd(0, 0) is rejected.
inline UniPoly gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.degree() == 0 || q.degree() == 0) return UniPoly::constant(Rational(1));
    // Integer-primitive inputs keep the PRS divisions exact and fast.
    auto chain = detail::subresultant_prs<Rational>(
        p.primitive_scaled().coefficients(), q.primitive_scaled().coefficients(), Rational(0));
    return detail::dp_to_unipoly(chain.back()).monic();
}

/// p / gcd(p, p'), monic: same distinct roots as p, all simple.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(p, p.derivative());
    return p.divexact(g).monic();
}

/// Resultant of two univariate polynomials (Sylvester-determinant value,
/// computed by the subresultant PRS).
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    return detail::subresultant_resultant<Rational>(p.coefficients(), q.coefficients(),
                                                    Rational(0));
}

/// Resultant with respect to one variable of two multivariate polynomials;
/// the result lives in the remaining variables (same variable list, with v
/// absent from every term).  Both inputs must have positive degree in v.
inline MultiPoly resultant_in(const MultiPoly& p, const MultiPoly& q, const std::string& v) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("resultant of polynomials over different variable lists");
    if (p.degree_in(v) < 1 || q.degree_in(v) < 1)
        throw std::invalid_argument("resultant requires positive degree in '" + v + "'");
    MultiPoly model(p.vars());
    return detail::subresultant_resultant<MultiPoly>(p.coefficients_in(v), q.coefficients_in(v),
                                                     model);
}

/// Discriminant of a univariate polynomial:
/// disc = (-1)^(n(n-1)/2) * res(p, p') / lc(p).  Requires degree >= 2.
inline Rational discriminant(const UniPoly& p) {
    int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant requires degree >= 2");
    Rational r = resultant(p, p.derivative());
    Rational d(r / p.lc());
    return (static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2) % 2 ? Rational(-d) : d;
}

/// Discriminant with respect to one variable (symbolic slow path).
inline MultiPoly discriminant_in(const MultiPoly& p, const std::string& v) {
    long n = p.degree_in(v);
    if (n < 2) throw std::invalid_argument("discriminant requires degree >= 2 in '" + v + "'");
    MultiPoly r = resultant_in(p, p.partial_derivative(v), v);
    MultiPoly lead = p.coefficients_in(v).back();
    MultiPoly d = r.divexact(lead);
    return (static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) / 2) % 2
               ? -d
               : d;
}

namespace detail {

/// Fraction-free Gaussian elimination (Bareiss) determinant over an integral
/// domain; used as the cross-validation route for resultants.
template <class C>
C bareiss_determinant(std::vector<std::vector<C>> m, const C& model) {
    using ops = coeff_ops<C>;
    const std::size_t n = m.size();
    if (n == 0) return ops::one(model);
    C prev = ops::one(model);
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ops::is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && ops::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return ops::zero(model);
            std::swap(m[k], m[swap_row]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                C t = ops::sub(ops::mul(m[k][k], m[i][j]), ops::mul(m[i][k], m[k][j]));
                m[i][j] = ops::divexact(t, prev);
            }
            m[i][k] = ops::zero(model);
        }
        prev = m[k][k];
    }
    C det = m[n - 1][n - 1];
    return sign_flip < 0 ? ops::neg(det) : det;
}

template <class C>
C sylvester_det(const DensePoly<C>& a, const DensePoly<C>& b, const C& model) {
    using ops = coeff_ops<C>;
    int da = dp_degree(a), db = dp_degree(b);
    if (da < 1 || db < 1) throw std::invalid_argument("sylvester matrix requires positive degrees");
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<C>> m(n, std::vector<C>(n, ops::zero(model)));
    // db rows of a's coefficients (highest first), then da rows of b's.
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                a[static_cast<std::size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + k)] =
                b[static_cast<std::size_t>(db - k)];
    return bareiss_determinant(std::move(m), model);
}

} // namespace detail

/// Sylvester-determinant resultant (cross-validation path for tests).
inline Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
    if (p.degree() < 1 || q.degree() < 1)
        throw std::invalid_argument("sylvester resultant requires positive degrees");
    return detail::sylvester_det<Rational>(p.coefficients(), q.coefficients(), Rational(0));
}

inline MultiPoly sylvester_resultant_in(const MultiPoly& p, const MultiPoly& q,
                                        const std::string& v) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("resultant of polynomials over different variable lists");
    if (p.degree_in(v) < 1 || q.degree_in(v) < 1)
        throw std::invalid_argument("sylvester resultant requires positive degree in '" + v + "'");
    MultiPoly model(p.vars());
    return detail::sylvester_det<MultiPoly>(p.coefficients_in(v), q.coefficients_in(v), model);
}

} // namespace pinchuk
