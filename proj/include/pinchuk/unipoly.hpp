#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace pinchuk {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first.  Invariant: the vector is empty for the zero
/// polynomial, otherwise its last entry (the leading coefficient) is nonzero.
class UniPoly {
public:
    UniPoly() = default; // zero

    explicit UniPoly(std::vector<Rational> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
        trim();
    }

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }

    /// c * x^k.
    static UniPoly term(const Rational& c, unsigned k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    const Rational& lc() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        std::vector<Rational> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(Rational(-a));
        return UniPoly(std::move(v));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
        return UniPoly(std::move(v));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(v));
    }

    UniPoly operator*(const Rational& k) const {
        if (sign(k) == 0) return UniPoly();
        std::vector<Rational> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(Rational(a * k));
        return UniPoly(std::move(v));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(Rational(c_[i] * static_cast<long>(i)));
        return UniPoly(std::move(v));
    }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    /// Certified interval evaluation (Horner with interval arithmetic).
    QInterval eval_interval(const QInterval& x) const {
        QInterval acc = QInterval::point(Rational(0));
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + c_[i];
        }
        return acc;
    }

    /// Field division: returns (quotient, remainder) with
    /// *this == quotient * d + remainder, deg remainder < deg d.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        std::vector<Rational> rem(c_);
        std::vector<Rational> quo;
        int dd = d.degree();
        int rd = static_cast<int>(rem.size()) - 1;
        if (rd >= dd) quo.assign(static_cast<std::size_t>(rd - dd + 1), Rational(0));
        while (rd >= dd) {
            // trim any cancelled leading entries
            while (rd >= 0 && sign(rem[static_cast<std::size_t>(rd)]) == 0) --rd;
            if (rd < dd) break;
            Rational q(rem[static_cast<std::size_t>(rd)] / d.c_.back());
            quo[static_cast<std::size_t>(rd - dd)] = q;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<std::size_t>(rd - dd + i)] -= q * d.c_[static_cast<std::size_t>(i)];
            --rd;
        }
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    /// Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) throw std::invalid_argument("inexact univariate division");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        return *this * Rational(1 / lc());
    }

    /// Scale by a positive rational so all coefficients become integers with
    /// content 1.  Signs (and hence Sturm variations and root sets) are
    /// preserved.
    UniPoly primitive_scaled() const {
        if (is_zero()) return UniPoly();
        BigInt l(1);
        for (const auto& a : c_) {
            BigInt d(a.get_den());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        BigInt g(0);
        for (const auto& a : c_) {
            BigInt scaled_num(a.get_num() * l / a.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled_num.get_mpz_t());
        }
        Rational scale = make_rational(l, g); // positive: l > 0, g > 0
        return *this * scale;
    }

    /// Multiplicity of the root 0 (number of leading zero coefficients).
    unsigned trailing_zero_exponent() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no root multiplicity");
        unsigned m = 0;
        while (m < c_.size() && sign(c_[m]) == 0) ++m;
        return m;
    }

    /// Divide by x^m (requires x^m to divide exactly).
    UniPoly shift_down(unsigned m) const {
        if (m == 0) return *this;
        if (trailing_zero_exponent() < m)
            throw std::invalid_argument("shift_down: x^m does not divide polynomial");
        return UniPoly(std::vector<Rational>(c_.begin() + m, c_.end()));
    }

    /// Cauchy root bound: all real roots lie strictly inside
    /// (-B, B) with B = 1 + max_i |c_i / c_n|.
    Rational cauchy_root_bound() const {
        if (is_zero()) throw std::invalid_argument("root bound of zero polynomial");
        Rational m(0);
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            Rational r = rational_abs(Rational(c_[i] / c_.back()));
            if (r > m) m = r;
        }
        return Rational(m + 1);
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (sign(c_[i]) == 0) continue;
            Rational ac = rational_abs(c_[i]);
            if (first) {
                if (sign(c_[i]) < 0) out += "-";
                first = false;
            } else {
                out += (sign(c_[i]) < 0) ? " - " : " + ";
            }
            if (i == 0) {
                out += pinchuk::to_string(ac);
            } else {
                std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
                out += (ac == 1) ? mono : pinchuk::to_string(ac) + "*" + mono;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& k, const UniPoly& p) { return p * k; }

/// Conversion from a single-variable MultiPoly.
inline UniPoly to_unipoly(const MultiPoly& p) {
    if (p.vars().size() != 1)
        throw std::invalid_argument("to_unipoly requires exactly one variable");
    long d = p.total_degree();
    std::vector<Rational> v(static_cast<std::size_t>(std::max(0L, d + 1)), Rational(0));
    for (const auto& [e, c] : p.terms()) v[e[0]] = c;
    return UniPoly(std::move(v));
}

inline MultiPoly to_multipoly(const UniPoly& p, const std::string& var) {
    MultiPoly out({var});
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        out.add_term({static_cast<unsigned>(i)}, p.coeff(i));
    return out;
}

/// Bind every variable except `var` to rationals and collect the result as a
/// univariate polynomial in `var`.  This is the workhorse for column sweeps
/// (grid rendering) and for specializing symbolic families like W(f,a,b) at
/// a target point.
inline UniPoly specialize_to_unipoly(const MultiPoly& p, const std::string& var,
                                     const std::map<std::string, Rational>& others) {
    std::size_t vi = p.var_index(var);
    long d = p.degree_in(var);
    std::vector<Rational> out(static_cast<std::size_t>(std::max(0L, d + 1)), Rational(0));
    const auto& vars = p.vars();
    std::vector<const Rational*> vals(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i == vi) continue;
        auto it = others.find(vars[i]);
        if (it == others.end())
            throw std::invalid_argument("unbound variable '" + vars[i] + "' in specialization");
        vals[i] = &it->second;
    }
    std::vector<std::vector<Rational>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) powers[i].push_back(Rational(1));
    for (const auto& [e, c] : p.terms()) {
        Rational t(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == vi || e[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(Rational(pw.back() * *vals[i]));
            t *= pw[e[i]];
        }
        out[e[vi]] += t;
    }
    return UniPoly(std::move(out));
}

} // namespace pinchuk
