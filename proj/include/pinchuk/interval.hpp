#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace pinchuk {

/// Closed rational interval [lo, hi] with exact endpoint arithmetic.  Used
/// for certified enclosures: every operation returns an interval containing
/// the exact image of the inputs.
struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    static QInterval point(const Rational& v) { return QInterval(v, v); }

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    Rational width() const { return Rational(hi - lo); }
    Rational midpoint() const { return Rational((lo + hi) / 2); }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(Rational(a.lo + b.lo), Rational(a.hi + b.hi));
}

inline QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(Rational(a.lo - b.hi), Rational(a.hi - b.lo));
}

inline QInterval operator-(const QInterval& a) {
    return QInterval(Rational(-a.hi), Rational(-a.lo));
}

inline QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1(a.lo * b.lo), p2(a.lo * b.hi), p3(a.hi * b.lo), p4(a.hi * b.hi);
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return QInterval(lo, hi);
}

inline QInterval operator*(const Rational& c, const QInterval& a) {
    return QInterval::point(c) * a;
}

inline QInterval operator+(const QInterval& a, const Rational& c) {
    return QInterval(Rational(a.lo + c), Rational(a.hi + c));
}

/// num / den; requires 0 not in den.
inline QInterval interval_div(const QInterval& num, const QInterval& den) {
    if (den.contains_zero())
        throw std::domain_error("interval division by an interval containing zero");
    Rational p1(num.lo / den.lo), p2(num.lo / den.hi), p3(num.hi / den.lo), p4(num.hi / den.hi);
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return QInterval(lo, hi);
}

inline QInterval interval_pow(const QInterval& a, unsigned e) {
    QInterval r = QInterval::point(Rational(1));
    for (unsigned k = 0; k < e; ++k) r = r * a;
    return r;
}

inline QInterval hull(const QInterval& a, const QInterval& b) {
    return QInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline std::string to_string(const QInterval& a) {
    if (a.is_point()) return to_string(a.lo);
    return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

} // namespace pinchuk
