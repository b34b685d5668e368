#pragma once

/// Exact arithmetic: arbitrary-precision integers (GMP), rationals in
/// canonical form, and integer/rational vector helpers.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ehrhart/errors.hpp"

namespace ehr {

using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division and the matching remainder in [0, |b|).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Ceiling division.
inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw precondition_error("integer out of desk-scale range: " + a.get_str());
    return a.get_si();
}

inline Int parse_int(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw parse_error("bad integer literal: '" + s + "'");
    return v;
}

/// Rational number in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long n) : num_(n), den_(1) {}        // NOLINT
    Rational(int n) : num_(n), den_(1) {}         // NOLINT
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Int floor() const { return fdiv(num_, den_); }
    Int ceil() const { return cdiv(num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical serialization: "p/q" in lowest terms, "p" when q = 1.
    std::string str() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_int(s));
        Int n = parse_int(s.substr(0, slash));
        Int d = parse_int(s.substr(slash + 1));
        if (d == 0) throw parse_error("zero denominator in rational literal: '" + s + "'");
        return Rational(n, d);
    }

    double to_double() const { return mpq_class(num_, den_).get_d(); }

  private:
    struct raw {};
    Rational(raw, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw error("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = ehr::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Int floor(const Rational& x) { return x.floor(); }
inline Int ceil(const Rational& x) { return x.ceil(); }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const IntVec& a, const RatVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Int gcd(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

/// v / gcd(v), direction preserved. Rejects the zero vector.
inline IntVec primitive(const IntVec& v) {
    Int g = gcd(v);
    if (g == 0) throw precondition_error("primitive() of the zero vector");
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

inline IntVec negate(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline RatVec negate(const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec scale(const Rational& c, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

/// lcm of coordinate denominators: the least k > 0 with k*v integral.
inline Int denominator(const RatVec& v) {
    Int q = 1;
    for (const auto& x : v) q = lcm(q, x.den());
    return q;
}

inline bool is_integral(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

}  // namespace ehr
