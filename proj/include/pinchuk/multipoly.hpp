#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"

namespace pinchuk {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: a fixed ordered variable list plus a term map from
/// exponent vectors to nonzero coefficients, kept in graded-lexicographic
/// order (highest total degree first, earlier variables dominating ties).
/// Two polynomials are equal exactly when both the variable lists and the
/// term maps coincide; the zero polynomial is the empty map.
///
/// All operations are pure; values are immutable once built and safe to
/// share across threads.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    /// Graded-lex order, highest first.  This is both the print order and
    /// the leading-term order used by exact division.
    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const {
            unsigned da = std::accumulate(a.begin(), a.end(), 0u);
            unsigned db = std::accumulate(b.begin(), b.end(), 0u);
            if (da != db) return da > db;
            // Same total degree: a before b when a is lexicographically larger.
            return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
        }
    };
    using Terms = std::map<Exponents, Rational, TermOrder>;

    MultiPoly() = default; // zero polynomial over an empty variable list
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (sign(c) != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0u), c);
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
        MultiPoly p(std::move(vars));
        Exponents e(p.vars_.size(), 0u);
        e[p.var_index(name)] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (e.size() != p.vars_.size())
            throw std::invalid_argument("exponent vector length does not match variable count");
        if (sign(c) != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("unknown variable '" + name + "'");
    }

    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0u)));
        return d;
    }

    long degree_in(const std::string& name) const {
        std::size_t i = var_index(name);
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[i]));
        return d;
    }

    /// Coefficient of an exponent vector (zero if absent).
    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponents(vars_.size(), 0u)); }

    bool operator==(const MultiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_same_vars(o);
        MultiPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_same_vars(o);
        MultiPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_same_vars(o);
        MultiPoly r(vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, Rational(ca * cb));
            }
        }
        return r;
    }

    MultiPoly operator*(const Rational& c) const {
        MultiPoly r(vars_);
        if (sign(c) == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, Rational(k * c));
        return r;
    }

    MultiPoly operator+(const Rational& c) const {
        MultiPoly r(*this);
        r.add_term(Exponents(vars_.size(), 0u), c);
        return r;
    }

    MultiPoly operator-(const Rational& c) const { return *this + Rational(-c); }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(vars_, Rational(1));
        MultiPoly base(*this);
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return r;
    }

    MultiPoly partial_derivative(const std::string& name) const {
        std::size_t i = var_index(name);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d(e);
            d[i] -= 1;
            r.add_term(d, Rational(c * static_cast<long>(e[i])));
        }
        return r;
    }

    /// Evaluate at a fully bound rational point.
    Rational evaluate(const std::map<std::string, Rational>& point) const {
        std::vector<const Rational*> vals = bind_all(point);
        // Memoized powers per variable.
        std::vector<std::vector<Rational>> powers(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) powers[i].push_back(Rational(1));
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                while (pw.size() <= e[i]) pw.push_back(Rational(pw.back() * *vals[i]));
                term *= pw[e[i]];
            }
            acc += term;
        }
        return acc;
    }

    /// Certified interval evaluation over a box.
    QInterval evaluate_interval(const std::map<std::string, QInterval>& box) const {
        std::vector<const QInterval*> vals(vars_.size(), nullptr);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = box.find(vars_[i]);
            if (it == box.end())
                throw std::invalid_argument("unbound variable '" + vars_[i] + "' in evaluation");
            vals[i] = &it->second;
        }
        std::vector<std::vector<QInterval>> powers(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            powers[i].push_back(QInterval::point(Rational(1)));
        QInterval acc = QInterval::point(Rational(0));
        for (const auto& [e, c] : terms_) {
            QInterval term = QInterval::point(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                while (pw.size() <= e[i]) pw.push_back(pw.back() * *vals[i]);
                term = term * pw[e[i]];
            }
            acc = acc + term;
        }
        return acc;
    }

    /// Composition: replace bound variables by polynomials; unbound variables
    /// pass through.  The result's variable list is the unbound variables (in
    /// this polynomial's order) followed by new variables in order of first
    /// appearance across the bindings.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
        // Build the result variable list.
        std::vector<std::string> rvars;
        for (const auto& v : vars_)
            if (!bindings.count(v)) rvars.push_back(v);
        for (const auto& v : vars_) {
            auto it = bindings.find(v);
            if (it == bindings.end()) continue;
            for (const auto& w : it->second.vars())
                if (std::find(rvars.begin(), rvars.end(), w) == rvars.end())
                    rvars.push_back(w);
        }
        // Image of each of our variables in the result ring.
        std::vector<MultiPoly> image;
        image.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                image.push_back(variable(rvars, v));
            else
                image.push_back(it->second.embedded_in(rvars));
        }
        // Accumulate with per-variable power memoization.
        std::vector<std::vector<MultiPoly>> powers(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            powers[i].push_back(constant(rvars, Rational(1)));
        MultiPoly acc(rvars);
        for (const auto& [e, c] : terms_) {
            MultiPoly term = constant(rvars, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                while (pw.size() <= e[i]) pw.push_back(pw.back() * image[i]);
                term = term * pw[e[i]];
            }
            acc = acc + term;
        }
        return acc;
    }

    /// Bind a single variable to a rational constant; the variable is removed
    /// from the result's variable list.
    MultiPoly specialize(const std::string& name, const Rational& value) const {
        var_index(name); // validate
        return substitute({{name, MultiPoly::constant({}, value)}});
    }

    /// Coefficients with respect to one variable, lowest power first.  Each
    /// entry is a polynomial over the same variable list with that variable's
    /// exponent zeroed; the vector is trimmed so its last entry is nonzero
    /// (empty for the zero polynomial).
    std::vector<MultiPoly> coefficients_in(const std::string& name) const {
        std::size_t i = var_index(name);
        long d = degree_in(name);
        std::vector<MultiPoly> out(static_cast<std::size_t>(d + 1), MultiPoly(vars_));
        for (const auto& [e, c] : terms_) {
            Exponents r(e);
            unsigned k = r[i];
            r[i] = 0;
            out[k].add_term(r, c);
        }
        return out;
    }

    /// Exact division: returns q with *this == q * d.  Throws
    /// std::invalid_argument when the division is not exact (or d is zero).
    MultiPoly divexact(const MultiPoly& d) const {
        check_same_vars(d);
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        MultiPoly r(*this), q(vars_);
        const auto& dl = *d.terms_.begin(); // leading term of divisor
        while (!r.is_zero()) {
            const auto& rl = *r.terms_.begin();
            Exponents qe(rl.first.size());
            for (std::size_t i = 0; i < qe.size(); ++i) {
                if (rl.first[i] < dl.first[i])
                    throw std::invalid_argument("inexact polynomial division");
                qe[i] = rl.first[i] - dl.first[i];
            }
            Rational qc(rl.second / dl.second);
            MultiPoly qt = monomial(vars_, qe, qc);
            q.add_term(qe, qc);
            r = r - qt * d;
        }
        return q;
    }

    /// Canonical printer: graded-lex term order, `num/den` coefficients,
    /// explicit `*` between factors, `^` for powers.  Round-trips through
    /// parse_poly.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational ac = rational_abs(c);
            if (first) {
                if (sign(c) < 0) out += "-";
                first = false;
            } else {
                out += (sign(c) < 0) ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += pinchuk::to_string(ac);
            } else if (ac == 1) {
                out += mono;
            } else {
                out += pinchuk::to_string(ac) + "*" + mono;
            }
        }
        return out;
    }

    /// Internal/builder: add c * x^e, erasing the term if it cancels.
    void add_term(const Exponents& e, const Rational& c) {
        if (sign(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sign(it->second) == 0) terms_.erase(it);
        }
    }

private:
    void check_same_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("operation on polynomials over different variable lists");
    }

    /// Re-index this polynomial into a superset variable list.
    MultiPoly embedded_in(const std::vector<std::string>& rvars) const {
        MultiPoly out(rvars);
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(rvars.begin(), rvars.end(), vars_[i]);
            if (it == rvars.end())
                throw std::invalid_argument("embedding into a non-superset variable list");
            where[i] = static_cast<std::size_t>(it - rvars.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponents r(rvars.size(), 0u);
            for (std::size_t i = 0; i < e.size(); ++i) r[where[i]] = e[i];
            out.terms_.emplace(std::move(r), c);
        }
        return out;
    }

    std::vector<const Rational*> bind_all(const std::map<std::string, Rational>& point) const {
        std::vector<const Rational*> vals(vars_.size(), nullptr);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("unbound variable '" + vars_[i] + "' in evaluation");
            vals[i] = &it->second;
        }
        return vals;
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

/// Numerator/denominator pair for substituting a rational function of some
/// parameter into a polynomial.
struct RationalMap {
    MultiPoly num, den;
};

/// Substitute rational functions for the variables of P and clear
/// denominators: returns N with
///   P(subs) = N / prod_v den_v^{deg_v(P)},
/// and optionally the denominator product itself.  Used to check identities
/// like "q composed with a parameterized curve equals -t^2" without leaving
/// polynomial arithmetic.
inline MultiPoly compose_cleared(const MultiPoly& P,
                                 const std::map<std::string, RationalMap>& subs,
                                 MultiPoly* denominator = nullptr) {
    if (subs.empty()) throw std::invalid_argument("compose_cleared with no substitutions");
    const std::vector<std::string>& tvars = subs.begin()->second.num.vars();
    for (const auto& [v, rm] : subs) {
        if (rm.num.vars() != tvars || rm.den.vars() != tvars)
            throw std::invalid_argument("substitution images over differing variable lists");
        if (rm.den.is_zero()) throw std::invalid_argument("zero denominator in substitution");
    }
    const auto& pv = P.vars();
    std::vector<const RationalMap*> maps(pv.size(), nullptr);
    std::vector<long> degs(pv.size(), 0);
    for (std::size_t i = 0; i < pv.size(); ++i) {
        auto it = subs.find(pv[i]);
        if (it == subs.end())
            throw std::invalid_argument("compose_cleared requires every variable bound");
        maps[i] = &it->second;
        degs[i] = std::max(0L, P.degree_in(pv[i]));
    }
    // Precompute powers of each numerator and denominator.
    std::vector<std::vector<MultiPoly>> npow(pv.size()), dpow(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) {
        npow[i].push_back(MultiPoly::constant(tvars, Rational(1)));
        dpow[i].push_back(MultiPoly::constant(tvars, Rational(1)));
        for (long k = 1; k <= degs[i]; ++k) {
            npow[i].push_back(npow[i].back() * maps[i]->num);
            dpow[i].push_back(dpow[i].back() * maps[i]->den);
        }
    }
    MultiPoly acc(tvars);
    for (const auto& [e, c] : P.terms()) {
        MultiPoly term = MultiPoly::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            term = term * npow[i][e[i]];
            term = term * dpow[i][static_cast<std::size_t>(degs[i]) - e[i]];
        }
        acc = acc + term;
    }
    if (denominator) {
        MultiPoly d = MultiPoly::constant(tvars, Rational(1));
        for (std::size_t i = 0; i < pv.size(); ++i)
            d = d * dpow[i][static_cast<std::size_t>(degs[i])];
        *denominator = d;
    }
    return acc;
}

} // namespace pinchuk
