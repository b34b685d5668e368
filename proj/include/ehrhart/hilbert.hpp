#pragma once

/// Hilbert-series view of translated enumerators: the counting series equals
/// z^alpha * Q(z) / (1-z^q)^(d+1) with Q an integer polynomial of degree
/// < q(d+1) and nonnegative coefficients; numerator extraction, the
/// interior/closed reciprocity on the numerator level, and h-vector
/// constraints for lattice polytopes.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/theorems.hpp"

namespace ehr {

struct HilbertSeriesData {
    std::size_t d = 0;           // dimension
    long q = 1;                  // period (denominator of P)
    Int alpha = 0;               // shift; 0 for the standard ideals built here
    std::vector<Int> numerator;  // Q(z), ascending, trailing zeros trimmed

    std::size_t degree() const { return numerator.empty() ? 0 : numerator.size() - 1; }

    bool operator==(const HilbertSeriesData& o) const {
        return d == o.d && q == o.q && alpha == o.alpha && numerator == o.numerator;
    }
};

namespace detail {

// (series * (1-z^q)^(d+1)) truncated to the series' length.
inline std::vector<Int> clear_denominator(const std::vector<Int>& series, long q, std::size_t d) {
    // binomial coefficients of (1-z^q)^(d+1)
    std::vector<Int> binom(d + 2);
    binom[0] = 1;
    for (std::size_t k = 1; k <= d + 1; ++k)
        binom[k] = binom[k - 1] * Int(d + 2 - k) / Int(k);
    std::vector<Int> out(series.size(), Int(0));
    for (std::size_t n = 0; n < series.size(); ++n) {
        Int acc = 0;
        for (std::size_t k = 0; k <= d + 1; ++k) {
            long shift = static_cast<long>(k) * q;
            if (static_cast<long>(n) < shift) break;
            Int term = binom[k] * series[n - shift];
            acc += (k % 2 == 0) ? term : -term;
        }
        out[n] = acc;
    }
    return out;
}

}  // namespace detail

/// Numerator of the closed counting series of (P, v): multiplies the
/// truncated series by (1-z^q)^(d+1) and checks that every coefficient from
/// degree q(d+1) through the sampled horizon vanishes. Nonnegativity and the
/// degree bound are enforced as invariants of the returned data.
inline HilbertSeriesData hilbert_numerator(const Polytope& P, const RatVec& v) {
    std::size_t d = P.dimension();
    long q = to_long(P.denominator());
    long bound = q * static_cast<long>(d + 1);
    long horizon = bound + 2 * q;
    std::vector<Int> series;
    for (long t = 0; t <= horizon; ++t) series.push_back(count(P, v, Int(t)));
    std::vector<Int> num = detail::clear_denominator(series, q, d);
    for (long n = bound; n <= horizon; ++n)
        if (num[n] != 0)
            throw error("hilbert_numerator: numerator does not terminate before degree q(d+1)");
    num.resize(bound);
    while (!num.empty() && num.back() == 0) num.pop_back();
    for (const auto& c : num)
        if (c < 0) throw error("hilbert_numerator: negative numerator coefficient");
    HilbertSeriesData out;
    out.d = d;
    out.q = q;
    out.alpha = 0;
    out.numerator = std::move(num);
    return out;
}

/// Numerator-level reciprocity: the interior series numerator equals the
/// degree-q(d+1) reversal of the closed numerator at -v.
inline CheckReport check_hilbert_reciprocity(const Polytope& P, const RatVec& v) {
    CheckReport rep{"hilbert-reciprocity"};
    std::size_t d = P.dimension();
    long q = to_long(P.denominator());
    long bound = q * static_cast<long>(d + 1);
    long horizon = bound + 2 * q;

    std::vector<Int> interior;
    interior.push_back(0);  // int(C_P)+(v,0) has no lattice points at height 0
    for (long t = 1; t <= horizon; ++t) interior.push_back(count_interior(P, v, Int(t)));
    std::vector<Int> inum = detail::clear_denominator(interior, q, d);
    for (long n = bound + 1; n <= horizon; ++n)
        rep.note(inum[n] == 0, "interior numerator coefficient " + std::to_string(n) + " vanishes");
    inum.resize(bound + 1);

    HilbertSeriesData closed = hilbert_numerator(P, negate(v));
    std::vector<Int> reversed(bound + 1, Int(0));
    for (std::size_t k = 0; k < closed.numerator.size(); ++k)
        reversed[bound - k] = closed.numerator[k];
    rep.note(inum == reversed, "interior numerator is the degree-" + std::to_string(bound) +
                                   " reversal of the closed numerator at -v");
    return rep;
}

/// h-vector constraints for a lattice polytope: h_0 = 1 iff v integral (else
/// 0) and sum h_i = d! vol(P).
inline CheckReport h_vector_constraints(const Polytope& P, const RatVec& v) {
    if (P.denominator() != 1)
        throw precondition_error("h_vector_constraints: polytope is not a lattice polytope");
    CheckReport rep{"h-vector-constraints"};
    HilbertSeriesData h = hilbert_numerator(P, v);
    Int h0 = h.numerator.empty() ? Int(0) : h.numerator[0];
    rep.note(h0 == (is_integral(v) ? 1 : 0), "h_0 matches integrality of v");
    Int sum = 0;
    for (const auto& c : h.numerator) sum += c;
    Int dfact = 1;
    for (std::size_t k = 2; k <= P.dimension(); ++k) dfact *= Int(k);
    Rational expected = Rational(dfact) * P.volume();
    rep.note(Rational(sum) == expected,
             "h-sum " + sum.get_str() + " equals d!*vol = " + expected.str());
    return rep;
}

/// All nonnegative integer vectors (h_0,...,h_d) with h_0 fixed by the
/// integrality of v and sum d!*volume.
inline std::vector<std::vector<Int>> enumerate_admissible_h(const Rational& volume, std::size_t d,
                                                            bool v_integral) {
    Int dfact = 1;
    for (std::size_t k = 2; k <= d; ++k) dfact *= Int(k);
    Rational total = Rational(dfact) * volume;
    if (!total.is_integer()) throw precondition_error("enumerate_admissible_h: d!*volume not integral");
    Int sum = total.num();
    Int h0 = v_integral ? 1 : 0;
    std::vector<std::vector<Int>> out;
    if (sum < h0) return out;
    std::vector<Int> h(d + 1, Int(0));
    h[0] = h0;
    // compositions of sum - h0 into d parts h_1..h_d
    std::function<void(std::size_t, Int)> rec = [&](std::size_t pos, Int rest) {
        if (pos == d) {
            h[d] = rest;
            out.push_back(h);
            h[d] = 0;
            return;
        }
        for (Int x = 0; x <= rest; ++x) {
            h[pos] = x;
            rec(pos + 1, rest - x);
        }
        h[pos] = 0;
    };
    if (d == 0) {
        if (sum == h0) out.push_back(h);
    } else {
        rec(1, sum - h0);
    }
    return out;
}

}  // namespace ehr
