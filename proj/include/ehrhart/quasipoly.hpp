#pragma once

/// Exact quasi-polynomial algebra: canonical polynomials over Q, Z-indexed
/// constituents, interpolation-based fitting with validation samples,
/// symmetry / gcd predicates, minimal period, reciprocity and argument
/// rescaling transforms.

#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehr {

/// Coefficients ascending by degree; no trailing zeros (zero polynomial is
/// the empty list).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& t) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }
    Rational eval(const Int& t) const { return eval(Rational(t)); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coefficient(i) + o.coefficient(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coefficient(i) - o.coefficient(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Rational& s) const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= s;
        return Polynomial(std::move(r));
    }

    /// p(t) -> p(s*t).
    Polynomial compose_linear(const Rational& s) const {
        std::vector<Rational> r = c_;
        Rational pw(1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] *= pw;
            pw *= s;
        }
        return Polynomial(std::move(r));
    }

    /// p(t) -> (-1)^d p(-t), the reciprocity image of a degree-d enumerator.
    Polynomial reciprocity_image(std::size_t d) const {
        Polynomial r = compose_linear(Rational(-1));
        if (d % 2 == 1) r = r * Rational(-1);
        return r;
    }

    bool is_even() const {
        for (std::size_t i = 1; i < c_.size(); i += 2)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_odd() const {
        for (std::size_t i = 0; i < c_.size(); i += 2)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] < o.c_[i]) return true;
            if (o.c_[i] < c_[i]) return false;
        }
        return false;
    }

    /// "3/2*t^2 - 1/2*t", descending powers; "0" for the zero polynomial.
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& a = c_[i];
            if (a.is_zero()) continue;
            Rational mag = a.abs();
            if (first) {
                if (a.sign() < 0) out << "-";
                first = false;
            } else {
                out << (a.sign() < 0 ? " - " : " + ");
            }
            if (i == 0 || mag != Rational(1)) {
                out << mag.str();
                if (i > 0) out << "*";
            }
            if (i >= 1) out << "t";
            if (i >= 2) out << "^" << i;
        }
        return out.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Exact Newton interpolation through (nodes[i], values[i]).
inline Polynomial interpolate(const std::vector<Rational>& nodes,
                              const std::vector<Rational>& values) {
    std::size_t n = nodes.size();
    std::vector<Rational> dd = values;  // divided differences, in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    Polynomial result;
    Polynomial basis = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        result = result + basis * dd[i];
        // basis *= (t - nodes[i])
        std::vector<Rational> next(basis.coefficients().size() + 1);
        for (std::size_t j = 0; j < basis.coefficients().size(); ++j) {
            next[j + 1] += basis.coefficients()[j];
            next[j] -= nodes[i] * basis.coefficients()[j];
        }
        basis = Polynomial(std::move(next));
    }
    return result;
}

/// Period q plus q constituents; constituent(k) is Z-indexed by k mod q.
class QuasiPolynomial {
  public:
    QuasiPolynomial() : q_(1), cons_(1) {}
    QuasiPolynomial(long period, std::vector<Polynomial> constituents)
        : q_(period), cons_(std::move(constituents)) {
        if (q_ <= 0 || cons_.size() != static_cast<std::size_t>(q_))
            throw precondition_error("quasi-polynomial: period/constituent mismatch");
    }

    static QuasiPolynomial constant_poly(Polynomial p) { return QuasiPolynomial(1, {std::move(p)}); }

    long period() const { return q_; }
    const std::vector<Polynomial>& constituents() const { return cons_; }

    const Polynomial& constituent(const Int& k) const {
        return cons_[static_cast<std::size_t>(to_long(fmod(k, Int(q_))))];
    }
    const Polynomial& constituent(long k) const { return constituent(Int(k)); }

    Rational eval(const Int& t) const { return constituent(t).eval(t); }
    Rational eval(long t) const { return eval(Int(t)); }

    /// Same function, period expanded to a multiple of the current one.
    QuasiPolynomial with_period(long m) const {
        if (m % q_ != 0) throw precondition_error("with_period: not a multiple of current period");
        std::vector<Polynomial> cs(m);
        for (long k = 0; k < m; ++k) cs[k] = cons_[k % q_];
        return QuasiPolynomial(m, std::move(cs));
    }

    /// Smallest divisor q' of the stored period with period-q' repetition.
    long minimal_period() const {
        for (long p = 1; p <= q_; ++p) {
            if (q_ % p != 0) continue;
            bool ok = true;
            for (long k = p; k < q_ && ok; ++k) ok = cons_[k] == cons_[k % p];
            if (ok) return p;
        }
        return q_;
    }

    QuasiPolynomial minimized() const {
        long p = minimal_period();
        std::vector<Polynomial> cs(cons_.begin(), cons_.begin() + p);
        return QuasiPolynomial(p, std::move(cs));
    }

    /// f_k = f_{-k} for all k.
    bool is_symmetric() const {
        for (long k = 0; k < q_; ++k)
            if (!(cons_[k] == cons_[(q_ - k) % q_])) return false;
        return true;
    }

    /// Constituents depend only on gcd(k, q) — checked on the minimal period.
    bool has_gcd_property() const {
        QuasiPolynomial m = minimized();
        for (long k = 0; k < m.q_; ++k)
            for (long j = k + 1; j < m.q_; ++j)
                if (std::gcd(k, m.q_) == std::gcd(j, m.q_) && !(m.cons_[k] == m.cons_[j]))
                    return false;
        return true;
    }

    /// g with g_k(t) = (-1)^d f_{-k}(-t).
    QuasiPolynomial reciprocity_transform(std::size_t d) const {
        std::vector<Polynomial> cs(q_);
        for (long k = 0; k < q_; ++k) cs[k] = cons_[(q_ - k) % q_].reciprocity_image(d);
        return QuasiPolynomial(q_, std::move(cs));
    }

    /// g(s) = f(r*s); the period drops to q / gcd(q, r).
    QuasiPolynomial rescale_argument(long r) const {
        if (r == 0) throw precondition_error("rescale_argument: zero factor");
        long p = q_ / std::gcd(q_, std::abs(r));
        std::vector<Polynomial> cs(p);
        for (long k = 0; k < p; ++k)
            cs[k] = constituent(Int(r) * Int(k)).compose_linear(Rational(Int(r)));
        return QuasiPolynomial(p, std::move(cs));
    }

    /// Semantic equality (compares on a common period).
    bool operator==(const QuasiPolynomial& o) const {
        long m = std::lcm(q_, o.q_);
        for (long k = 0; k < m; ++k)
            if (!(cons_[k % q_] == o.cons_[k % o.q_])) return false;
        return true;
    }
    bool operator!=(const QuasiPolynomial& o) const { return !(*this == o); }

  private:
    long q_;
    std::vector<Polynomial> cons_;
};

/// Fits samples t -> f(t) (available for t_min <= t <= q*(d+3)) to a
/// quasi-polynomial of period q and degree <= d: per residue class, exact
/// (d+1)-point interpolation plus two validation samples. Throws
/// validation_error when the data is not such a quasi-polynomial (wrong q or
/// wrong d).
inline QuasiPolynomial fit_quasi_polynomial(const std::function<Rational(const Int&)>& sample,
                                            long q, std::size_t d, long t_min = 0) {
    if (q <= 0) throw precondition_error("fit: period must be positive");
    std::vector<Polynomial> cs(q);
    for (long k = 0; k < q; ++k) {
        long base = k;
        while (base < t_min) base += q;
        std::vector<Rational> nodes, values;
        for (std::size_t j = 0; j <= d; ++j) {
            Int t = Int(base) + Int(q) * Int(j);
            nodes.push_back(Rational(t));
            values.push_back(sample(t));
        }
        Polynomial p = interpolate(nodes, values);
        for (std::size_t j = d + 1; j <= d + 2; ++j) {
            Int t = Int(base) + Int(q) * Int(j);
            if (p.eval(t) != sample(t))
                throw validation_error("fit: validation sample disagrees at t = " + t.get_str() +
                                       " (data is not a degree-" + std::to_string(d) +
                                       " quasi-polynomial of period " + std::to_string(q) + ")");
        }
        cs[k] = std::move(p);
    }
    return QuasiPolynomial(q, std::move(cs));
}

}  // namespace ehr
