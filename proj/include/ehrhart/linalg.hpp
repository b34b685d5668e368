#pragma once

/// Small exact linear algebra over Q and Z: rank, determinant, the
/// generalized cross product (normal of a hyperplane through d points), and
/// completion of a primitive vector to a unimodular matrix.

#include <cstddef>
#include <utility>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehr {

using RatMatrix = std::vector<RatVec>;
using IntMatrix = std::vector<IntVec>;

inline std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& m) {
    RatMatrix q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = to_rational(m[i]);
    return rank(std::move(q));
}

inline Rational det(RatMatrix m) {
    std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[c], m[piv]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

inline Int det(const IntMatrix& m) {
    RatMatrix q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = to_rational(m[i]);
    Rational d = det(std::move(q));
    return d.num();  // integer matrix => integer determinant
}

/// Normal of the hyperplane spanned by d-1 edge vectors in R^d, via cofactor
/// expansion: n_j = (-1)^(j+1) det(edges with column j removed). Returns the
/// zero vector when the edges do not span a hyperplane. For d = 1 (no edges)
/// returns (1).
inline RatVec hyperplane_normal(const RatMatrix& edges, std::size_t d) {
    RatVec n(d);
    for (std::size_t j = 0; j < d; ++j) {
        RatMatrix minor(edges.size(), RatVec(d > 0 ? d - 1 : 0));
        for (std::size_t r = 0; r < edges.size(); ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor[r][cc++] = edges[r][c];
            }
        }
        Rational dj = minor.empty() ? Rational(1) : det(minor);
        n[j] = (j % 2 == 0) ? dj : -dj;
    }
    return n;
}

/// Scale a rational vector (plus an offset b) to a jointly-primitive integer
/// pair (a, b): clears denominators and divides by the gcd of all entries.
inline std::pair<IntVec, Int> joint_primitive(const RatVec& n, const Rational& b) {
    Int common = b.den();
    for (const auto& x : n) common = lcm(common, x.den());
    IntVec a(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) a[i] = n[i].num() * (common / n[i].den());
    Int bi = b.num() * (common / b.den());
    Int g = gcd(gcd(a), bi);
    if (g == 0) throw precondition_error("joint_primitive of zero data");
    for (auto& x : a) x /= g;
    return {std::move(a), bi / g};
}

/// Unimodular matrix whose first row is the given primitive vector. Built by
/// column-reducing `a` to e_1 and tracking the inverse operations.
inline IntMatrix unimodular_with_first_row(const IntVec& a) {
    std::size_t d = a.size();
    if (gcd(a) != 1) throw precondition_error("unimodular completion needs a primitive vector");
    IntVec v = a;
    IntMatrix w(d, IntVec(d, Int(0)));
    for (std::size_t i = 0; i < d; ++i) w[i][i] = 1;

    // col_j -= q * col_i on v  <=>  row_i += q * row_j on w = V^{-1}.
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        v[j] -= q * v[i];
        for (std::size_t k = 0; k < d; ++k) w[i][k] += q * w[j][k];
    };
    while (true) {
        std::size_t nz = 0, best = d;
        for (std::size_t i = 0; i < d; ++i) {
            if (v[i] == 0) continue;
            ++nz;
            if (best == d || cmp(abs(v[i]), abs(v[best])) < 0) best = i;
        }
        if (nz <= 1) break;
        for (std::size_t j = 0; j < d; ++j) {
            if (j == best || v[j] == 0) continue;
            col_op(best, j, fdiv(v[j], v[best]));
        }
    }
    std::size_t p = 0;
    while (p < d && v[p] == 0) ++p;
    if (p != 0) {
        std::swap(v[p], v[0]);
        std::swap(w[p], w[0]);
    }
    if (v[0] < 0) {
        v[0] = -v[0];
        for (auto& x : w[0]) x = -x;
    }
    return w;  // first row equals a
}

inline IntVec apply_matrix(const IntMatrix& m, const IntVec& x) {
    IntVec y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
    return y;
}

inline RatVec apply_matrix(const IntMatrix& m, const RatVec& x) {
    RatVec y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
    return y;
}

}  // namespace ehr
