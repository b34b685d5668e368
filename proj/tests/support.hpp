#pragma once

// Shared test helpers: the fixture polytopes from the worked examples, a
// dead-simple point-loop counting oracle (independent of the fiber-interval
// implementation in counting.hpp), and a deterministic random polytope
// generator.

#include <random>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"

namespace testsupport {

using namespace ehr;

inline RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

inline Polytope trapezoid() {
    return Polytope::from_vertices({rv({0, 0}), rv({1, 0}), rv({2, 1}), rv({0, 1})});
}

inline Polytope rhombus() {
    return Polytope::from_vertices(
        {rv({1, 0}), rv({-1, 0}), rv({0, Rational(1, 2)}), rv({0, Rational(-1, 2)})});
}

// conv{(±1,0),(0,±1/n)}
inline Polytope rhombus_n(long n) {
    return Polytope::from_vertices(
        {rv({1, 0}), rv({-1, 0}), rv({0, Rational(1, n)}), rv({0, Rational(-1, n)})});
}

inline Polytope parallelogram() {
    return Polytope::from_vertices({rv({0, 0}), rv({1, 0}), rv({1, 3}), rv({2, 3})});
}

inline Polytope unit_square() {
    return Polytope::from_vertices({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})});
}

inline Polytope unit_segment() { return Polytope::from_vertices({rv({0}), rv({1})}); }

// Naive oracle: iterate every point of the integer bounding box and test all
// facet inequalities one by one.
enum class OracleMode { closed, interior };

inline Int naive_count(const Polytope& P, const RatVec& v, const Int& t,
                       OracleMode mode = OracleMode::closed) {
    std::size_t d = P.dimension();
    if (t == 0 && mode == OracleMode::closed) return is_integral(v) ? 1 : 0;
    std::vector<Int> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational mn, mx;
        bool first = true;
        for (const auto& vert : P.vertices()) {
            Rational c = Rational(t) * vert[j] + v[j];
            if (first || c < mn) mn = c;
            if (first || c > mx) mx = c;
            first = false;
        }
        lo[j] = mn.ceil();
        hi[j] = mx.floor();
        if (lo[j] > hi[j]) return 0;
    }
    std::vector<Int> x = lo;
    Int total = 0;
    while (true) {
        bool inside = true;
        for (const auto& f : P.facets()) {
            Rational lhs(dot(f.a, x));
            Rational rhs = Rational(t * f.b) + dot(f.a, v);
            if (mode == OracleMode::closed ? !(lhs >= rhs) : !(lhs > rhs)) {
                inside = false;
                break;
            }
        }
        if (inside) ++total;
        std::size_t j = 0;
        for (; j < d; ++j) {
            if (x[j] < hi[j]) {
                ++x[j];
                break;
            }
            x[j] = lo[j];
        }
        if (j == d) break;
    }
    return total;
}

// Deterministic random rational polytopes: n points, coordinates k/den with
// k in [-den*span, den*span]; retries until the points affinely span.
class RandomPolytopes {
  public:
    explicit RandomPolytopes(unsigned seed) : rng_(seed) {}

    Rational rational(long max_den, long span) {
        std::uniform_int_distribution<long> dpick(1, max_den);
        long den = dpick(rng_);
        std::uniform_int_distribution<long> npick(-den * span, den * span);
        return Rational(Int(npick(rng_)), Int(den));
    }

    RatVec point(std::size_t d, long max_den, long span) {
        RatVec p(d);
        for (auto& x : p) x = rational(max_den, span);
        return p;
    }

    Polytope polytope(std::size_t d, std::size_t npoints, long max_den, long span) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<RatVec> pts;
            for (std::size_t i = 0; i < npoints; ++i) pts.push_back(point(d, max_den, span));
            try {
                return Polytope::from_vertices(pts);
            } catch (const precondition_error&) {
            }
        }
        throw std::runtime_error("random polytope generation failed");
    }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> pick(lo, hi);
        return pick(rng_);
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
