#pragma once

/// Brute-force exact lattice-point enumerators over integer bounding boxes:
/// closed, interior, facet and directional partial-boundary counts. Ground
/// truth for everything downstream.

#include <cstddef>
#include <vector>

#include "ehrhart/exact.hpp"
#include "ehrhart/polytope.hpp"

namespace ehr {

namespace detail {

struct Box {
    std::vector<Int> lo, hi;  // per coordinate, inclusive
    bool empty = false;
};

inline Box bounding_box(const Polytope& P, const RatVec& v, const Int& t) {
    std::size_t d = P.dimension();
    Box box;
    box.lo.resize(d);
    box.hi.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational lo, hi;
        bool first = true;
        for (const auto& vert : P.vertices()) {
            Rational c = Rational(t) * vert[j] + v[j];
            if (first || c < lo) lo = c;
            if (first || c > hi) hi = c;
            first = false;
        }
        box.lo[j] = lo.ceil();
        box.hi[j] = hi.floor();
        if (box.lo[j] > box.hi[j]) box.empty = true;
    }
    return box;
}

// Integer thresholds: x in t*P+v (closed) iff (a_i, x) >= ceil(t*b_i + (a_i, v));
// strict iff (a_i, x) >= floor(...) + 1. Exact because (a_i, x) is an integer.
inline std::vector<Int> facet_thresholds(const Polytope& P, const RatVec& v, const Int& t,
                                         bool strict) {
    std::vector<Int> r;
    r.reserve(P.facet_count());
    for (const auto& f : P.facets()) {
        Rational rhs = Rational(t * f.b) + dot(f.a, v);
        r.push_back(strict ? rhs.floor() + 1 : rhs.ceil());
    }
    return r;
}

// Iterates the box over the first d-1 coordinates; the last coordinate is
// counted (or enumerated via `emit`) through its exact feasible interval.
template <typename Emit>
inline Int scan(const Polytope& P, const Box& box, const std::vector<Int>& thresholds,
                Emit&& emit, bool enumerate_points) {
    if (box.empty) return 0;
    std::size_t d = P.dimension();
    const auto& facets = P.facets();
    Int total = 0;
    std::vector<Int> x(box.lo.begin(), box.lo.end() - 1);  // first d-1 coords
    while (true) {
        Int L = box.lo[d - 1], U = box.hi[d - 1];
        for (std::size_t i = 0; i < facets.size() && L <= U; ++i) {
            const IntVec& a = facets[i].a;
            Int partial = 0;
            for (std::size_t j = 0; j + 1 < d; ++j) partial += a[j] * x[j];
            Int m = thresholds[i] - partial;
            const Int& c = a[d - 1];
            if (c == 0) {
                if (m > 0) U = L - 1;
            } else if (c > 0) {
                Int bound = cdiv(m, c);
                if (bound > L) L = bound;
            } else {
                Int bound = fdiv(m, c);
                if (bound < U) U = bound;
            }
        }
        if (L <= U) {
            if (enumerate_points) {
                std::vector<Int> pt(d);
                for (std::size_t j = 0; j + 1 < d; ++j) pt[j] = x[j];
                for (Int z = L; z <= U; ++z) {
                    pt[d - 1] = z;
                    emit(pt);
                }
            } else {
                total += U - L + 1;
            }
        }
        // odometer over the first d-1 coordinates
        std::size_t j = 0;
        for (; j + 1 < d; ++j) {
            if (x[j] < box.hi[j]) {
                ++x[j];
                break;
            }
            x[j] = box.lo[j];
        }
        if (j + 1 >= d) break;
    }
    return total;
}

}  // namespace detail

/// #((tP + v) ∩ Z^d), exact.
inline Int count(const Polytope& P, const RatVec& v, const Int& t) {
    if (v.size() != P.dimension()) throw precondition_error("count: translation dimension mismatch");
    if (t < 0) throw precondition_error("count: negative dilation");
    if (t == 0) return is_integral(v) ? 1 : 0;
    auto box = detail::bounding_box(P, v, t);
    auto th = detail::facet_thresholds(P, v, t, false);
    return detail::scan(P, box, th, [](const std::vector<Int>&) {}, false);
}

/// #((t·int(P) + v) ∩ Z^d); t = 0 rejected.
inline Int count_interior(const Polytope& P, const RatVec& v, const Int& t) {
    if (v.size() != P.dimension())
        throw precondition_error("count_interior: translation dimension mismatch");
    if (t <= 0) throw precondition_error("count_interior: dilation must be positive");
    auto box = detail::bounding_box(P, v, t);
    auto th = detail::facet_thresholds(P, v, t, true);
    return detail::scan(P, box, th, [](const std::vector<Int>&) {}, false);
}

enum class BoundarySide { lower, upper };  // lower: facets with (a_F, e_i) > 0

/// Points of t(∂_i∓ P) + v: points of tP+v lying on at least one facet whose
/// inner normal has (a_F, e_i) > 0 (lower) or < 0 (upper).
inline Int count_partial_boundary(const Polytope& P, const RatVec& v, const Int& t,
                                  std::size_t axis, BoundarySide side) {
    if (axis >= P.dimension()) throw precondition_error("count_partial_boundary: axis out of range");
    if (t < 0) throw precondition_error("count_partial_boundary: negative dilation");
    const auto& facets = P.facets();
    std::vector<std::size_t> dir;  // facets facing the requested direction
    for (std::size_t i = 0; i < facets.size(); ++i) {
        int s = sgn(facets[i].a[axis]);
        if ((side == BoundarySide::lower && s > 0) || (side == BoundarySide::upper && s < 0))
            dir.push_back(i);
    }
    if (t == 0) return (!dir.empty() && is_integral(v)) ? 1 : 0;

    // Facet membership needs the exact rational threshold; a facet carries a
    // lattice point only when its threshold is an integer.
    std::vector<std::pair<std::size_t, Int>> exact;  // (facet, integer threshold)
    for (std::size_t i : dir) {
        Rational rhs = Rational(t * facets[i].b) + dot(facets[i].a, v);
        if (rhs.is_integer()) exact.emplace_back(i, rhs.num());
    }
    if (exact.empty()) return 0;

    auto box = detail::bounding_box(P, v, t);
    auto th = detail::facet_thresholds(P, v, t, false);
    Int total = 0;
    detail::scan(
        P, box, th,
        [&](const std::vector<Int>& pt) {
            for (const auto& [i, rhs] : exact) {
                if (dot(facets[i].a, pt) == rhs) {
                    ++total;
                    return;
                }
            }
        },
        true);
    return total;
}

/// #((tF + v) ∩ Z^d) for a facet F of P (given by index).
inline Int count_facet(const Polytope& P, std::size_t facet_index, const RatVec& v, const Int& t) {
    if (facet_index >= P.facet_count()) throw precondition_error("count_facet: bad facet index");
    if (t < 0) throw precondition_error("count_facet: negative dilation");
    const Facet& f = P.facets()[facet_index];
    if (t == 0) return is_integral(v) ? 1 : 0;
    Rational rhs = Rational(t * f.b) + dot(f.a, v);
    if (!rhs.is_integer()) return 0;
    Int target = rhs.num();
    auto box = detail::bounding_box(P, v, t);
    auto th = detail::facet_thresholds(P, v, t, false);
    Int total = 0;
    detail::scan(
        P, box, th,
        [&](const std::vector<Int>& pt) {
            if (dot(f.a, pt) == target) ++total;
        },
        true);
    return total;
}

}  // namespace ehr
