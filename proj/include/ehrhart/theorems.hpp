#pragma once

/// Executable checks of the structural facts behind the cell tables:
/// maximal-cell reciprocity,
/// centrally-symmetric parity, the symmetry characterization, projection
/// identities, Minkowski data with the codimension-1 difference lemma,
/// translation equivalence, enumerator fingerprints, and lattice
/// automorphisms.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/cells.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasipoly.hpp"
#include "ehrhart/translate.hpp"

namespace ehr {

struct CheckReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void note(bool ok, const std::string& what) {
        if (!ok) passed = false;
        lines.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    }
};

namespace detail {

inline QuasiPolynomial quasi_sub(const QuasiPolynomial& f, const QuasiPolynomial& g) {
    long q = std::lcm(f.period(), g.period());
    std::vector<Polynomial> cs(q);
    for (long k = 0; k < q; ++k) cs[k] = f.constituent(k) - g.constituent(k);
    return QuasiPolynomial(q, std::move(cs));
}

inline std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

}  // namespace detail

/// TL_{P,C}(t) = (-1)^d TL_{P,-C}(-t) for every maximal cell C of Δ_P/Z^d.
inline CheckReport check_maximal_cell_reciprocity(const Polytope& P, std::size_t max_facets = 8,
                                                  std::size_t max_dim = 3) {
    CheckReport rep{"maximal-cell-reciprocity"};
    std::size_t d = P.dimension();
    auto cx = enumerate_cells(P, CellKind::delta, max_facets, max_dim);
    CellTable table(P, cx);
    for (const auto& cell : cx.cells()) {
        if (cell.dimension != d) continue;
        CellKey neg = negate_cell(P, cell);
        const QuasiPolynomial& f = table.tl_cell(cell.key);
        const QuasiPolynomial& g = table.tl_cell(neg);
        bool ok = f == g.reciprocity_transform(d);
        rep.note(ok, "cell " + cell.key.str() + " vs -C " + neg.str());
    }
    return rep;
}

/// For -P = P + u with u integral: every maximal-cell TL satisfies
/// f_k(t) = (-1)^d f_{-k}(-t); in particular the 0th (and, when 2P is
/// integral, the 1st) constituent is a polynomial in t^2 or t times one.
inline CheckReport check_cs_parity(const Polytope& P, std::size_t max_facets = 8,
                                   std::size_t max_dim = 3) {
    auto c = P.central_symmetry();
    if (!c || !is_integral(scale(Rational(2), *c)))
        throw precondition_error("check_cs_parity: polytope is not centrally symmetric over Z");
    CheckReport rep{"cs-parity"};
    std::size_t d = P.dimension();
    auto cx = enumerate_cells(P, CellKind::delta, max_facets, max_dim);
    CellTable table(P, cx);
    bool two_p_integral = P.denominator() <= 2;
    for (const auto& cell : cx.cells()) {
        if (cell.dimension != d) continue;
        const QuasiPolynomial& f = table.tl_cell(cell.key);
        rep.note(f == f.reciprocity_transform(d),
                 "f_k(t) = (-1)^d f_{-k}(-t) on cell " + cell.key.str());
        const Polynomial& f0 = f.constituent(0L);
        rep.note(f0.is_even() || f0.is_odd(), "0th constituent parity on cell " + cell.key.str());
        if (two_p_integral) {
            const Polynomial& f1 = f.constituent(1L);
            rep.note(f1.is_even() || f1.is_odd(),
                     "1st constituent parity on cell " + cell.key.str());
        }
    }
    return rep;
}

struct SymmetryVerdict {
    bool predicate_geometric = false;  // centrally symmetric with v - v* integral
    bool sampled_symmetric = true;     // ehr_{P+v} symmetric for all sampled v
    std::optional<RatVec> witness;     // asymmetric sample, when one exists
    bool consistent = false;           // the two predicates agree
};

/// Tests predicate (ii) geometrically and predicate (i) by sampling
/// ehr_{P+v} over the grid (Z/s)^d ∩ [0,1)^d.
inline SymmetryVerdict check_symmetry_characterization(const Polytope& P, long sample_denominator) {
    SymmetryVerdict v;
    auto c = P.central_symmetry();
    if (c) {
        v.predicate_geometric = true;
        for (const auto& vert : P.vertices()) {
            RatVec diff = sub(vert, P.paired_vertex(vert));
            if (!is_integral(diff)) v.predicate_geometric = false;
        }
    }
    std::size_t d = P.dimension();
    CellTable table(P);
    std::vector<long> idx(d, 0);
    while (true) {
        RatVec pt(d);
        for (std::size_t j = 0; j < d; ++j) pt[j] = Rational(idx[j], sample_denominator);
        if (!ehr_translated(P, pt, &table).is_symmetric()) {
            v.sampled_symmetric = false;
            v.witness = pt;
            break;
        }
        std::size_t j = 0;
        for (; j < d; ++j) {
            if (idx[j] + 1 < sample_denominator) {
                ++idx[j];
                break;
            }
            idx[j] = 0;
        }
        if (j == d) break;
    }
    v.consistent = v.predicate_geometric == v.sampled_symmetric;
    return v;
}

/// Crossing offsets s in [0,1) where v + s*e_axis (sign = +1) or v - s*e_axis
/// (sign = -1) meets a hyperplane H_{a,k} with sign*(a,e_axis) > 0.
inline std::set<Rational> boundary_crossings(const Polytope& P, const RatVec& v, std::size_t axis,
                                             int sign) {
    std::set<Rational> out;
    for (const auto& f : P.facets()) {
        Int ai = f.a[axis] * sign;
        if (ai <= 0) continue;
        Rational base = dot(f.a, v);
        // (a, v) + s*(sign*a_axis) = k with s in [0,1): k in [base, base+ai)
        for (Int k = base.ceil(); Rational(k) < base + Rational(ai); ++k)
            out.insert((Rational(k) - base) / Rational(ai));
    }
    return out;
}

/// Directional projection identity, both variants:
/// TL_{pi(P),pi(v)}(t) equals the sum over crossings s of the directional
/// partial-boundary counts of P at v ± s*e_axis.
inline CheckReport check_projection_identity(const Polytope& P, std::size_t axis, const RatVec& v,
                                             long t_max) {
    if (P.dimension() < 2) throw precondition_error("projection identity needs d >= 2");
    CheckReport rep{"projection-identity"};
    Polytope proj = P.project(axis);
    RatVec pv;
    for (std::size_t j = 0; j < P.dimension(); ++j)
        if (j != axis) pv.push_back(v[j]);

    auto lower_s = boundary_crossings(P, v, axis, +1);
    auto upper_s = boundary_crossings(P, v, axis, -1);
    for (long t = 0; t <= t_max; ++t) {
        Int lhs = count(proj, pv, Int(t));
        Int rhs_lower = 0, rhs_upper = 0;
        for (const auto& s : lower_s) {
            RatVec w = v;
            w[axis] += s;
            rhs_lower += count_partial_boundary(P, w, Int(t), axis, BoundarySide::lower);
        }
        for (const auto& s : upper_s) {
            RatVec w = v;
            w[axis] -= s;
            rhs_upper += count_partial_boundary(P, w, Int(t), axis, BoundarySide::upper);
        }
        rep.note(lhs == rhs_lower, "lower variant, t = " + std::to_string(t) + ": " +
                                       lhs.get_str() + " vs " + rhs_lower.get_str());
        rep.note(lhs == rhs_upper, "upper variant, t = " + std::to_string(t) + ": " +
                                       lhs.get_str() + " vs " + rhs_upper.get_str());
    }
    return rep;
}

/// {(primitive inner normal, relative facet volume)}, sorted.
using MinkowskiData = std::vector<std::pair<IntVec, Rational>>;

/// Difference lemma at a generic point of each facet's hyperplane family:
/// TL_{P,v} - TL_{P,v+eps*a} equals the fitted facet enumerator, whose top
/// coefficient is the relative facet volume; and stepping against the normal
/// changes nothing when no opposite-parallel normal exists.
inline CheckReport check_facet_difference(const Polytope& P, std::size_t max_facets = 8,
                                          std::size_t max_dim = 3) {
    CheckReport rep{"facet-difference"};
    std::size_t d = P.dimension();
    long q = to_long(P.denominator());
    auto cx = enumerate_cells(P, CellKind::delta, max_facets, max_dim);
    for (std::size_t fi = 0; fi < P.facet_count(); ++fi) {
        const Facet& fct = P.facets()[fi];
        bool has_opposite = false;  // some -k*a_i in N(P)
        {
            IntVec a0neg = negate(primitive(fct.a));
            for (std::size_t j = 0; j < P.facet_count(); ++j)
                if (primitive(P.facets()[j].a) == a0neg) has_opposite = true;
        }

        // Generic point on the facet's hyperplane family: representative of a
        // (d-1)-cell with flag i. Dimension d-1 forces every other flagged
        // hyperplane through it to be the same hyperplane (parallel and
        // sharing a point), so the point is generic in the arrangement.
        const Cell* generic = nullptr;
        for (const auto& cell : cx.cells()) {
            if (cell.dimension + 1 == d && cell.key.flags[fi]) {
                generic = &cell;
                break;
            }
        }
        if (!generic) {
            rep.note(false, "no generic hyperplane point found for facet " + std::to_string(fi));
            continue;
        }
        const RatVec& v = generic->representative;
        const std::vector<bool>& flagged = generic->key.flags;

        // eps: half the smallest fractional margin of the off-hyperplane
        // values, divided by the largest movement rate along a
        Rational margin(1);
        for (std::size_t j = 0; j < P.facet_count(); ++j) {
            if (flagged[j]) continue;
            Rational val = dot(P.facets()[j].a, v);
            Rational frac = val - Rational(val.floor());
            Rational dist = std::min(frac, Rational(1) - frac);
            if (dist < margin) margin = dist;
        }
        Rational rate(0);
        for (std::size_t j = 0; j < P.facet_count(); ++j) {
            Rational r = Rational(dot(P.facets()[j].a, fct.a)).abs();
            if (r > rate) rate = r;
        }
        Rational eps = margin / (Rational(2) * rate);

        // key must change exactly as predicted: flagged normals moving with a
        // gain +1 on their ceiling, flags drop, everything else untouched
        RatVec v_plus = add(v, scale(eps, to_rational(fct.a)));
        auto raw0 = detail::raw_delta_key(P, v);
        auto raw1 = detail::raw_delta_key(P, v_plus);
        bool key_ok = true;
        for (std::size_t j = 0; j < P.facet_count(); ++j) {
            Int step = flagged[j] && dot(P.facets()[j].a, fct.a) > 0 ? 1 : 0;
            if (raw1.ceilings[j] != raw0.ceilings[j] + step) key_ok = false;
            if (raw1.flags[j]) key_ok = false;
        }
        rep.note(key_ok, "eps step changes only the intended key coordinates, facet " +
                             std::to_string(fi));

        QuasiPolynomial diff = detail::quasi_sub(tl(P, v), tl(P, v_plus));
        QuasiPolynomial facet_fit = fit_quasi_polynomial(
            [&](const Int& t) { return Rational(count_facet(P, fi, v, t)); }, q,
            d >= 1 ? d - 1 : 0, 0);
        rep.note(diff == facet_fit, "TL difference equals the facet enumerator, facet " +
                                        std::to_string(fi));
        bool nonzero = false;
        for (long k = 0; k < facet_fit.period(); ++k)
            if (!facet_fit.constituent(k).is_zero()) nonzero = true;
        rep.note(nonzero, "facet enumerator is nonzero at the generic point, facet " +
                              std::to_string(fi));
        for (long k = 0; k < facet_fit.period(); ++k)
            rep.note(facet_fit.constituent(k).coefficient(d - 1) == fct.relative_volume,
                     "top coefficient equals the relative volume, facet " + std::to_string(fi) +
                         ", constituent " + std::to_string(k));
        if (!has_opposite) {
            RatVec v_minus = sub(v, scale(eps, to_rational(fct.a)));
            rep.note(tl(P, v) == tl(P, v_minus),
                     "backward step leaves TL unchanged, facet " + std::to_string(fi));
        }
    }
    return rep;
}

/// M(P): primitive inner normals paired with relative facet volumes. Runs the
/// difference-lemma verification; a failure there means the data cannot be
/// trusted and raises.
inline MinkowskiData minkowski_data(const Polytope& P, bool verify = true) {
    if (verify) {
        CheckReport rep = check_facet_difference(P);
        if (!rep.passed) throw error("minkowski_data: facet difference verification failed");
    }
    MinkowskiData out;
    for (const auto& f : P.facets()) out.emplace_back(primitive(f.a), f.relative_volume);
    std::sort(out.begin(), out.end());
    return out;
}

/// w in Z^d with P = Q + w, or nullopt. Candidate from matching vertex
/// centroids, then exact vertex-set comparison.
inline std::optional<IntVec> equivalent_up_to_integer_translation(const Polytope& P,
                                                                  const Polytope& Q) {
    if (P.dimension() != Q.dimension())
        throw precondition_error("translation equivalence: dimension mismatch");
    RatVec w = sub(P.centroid(), Q.centroid());
    if (!is_integral(w)) return std::nullopt;
    if (P.vertices().size() != Q.vertices().size()) return std::nullopt;
    for (std::size_t i = 0; i < Q.vertices().size(); ++i) {
        RatVec shifted = add(Q.vertices()[i], w);
        if (!std::binary_search(P.vertices().begin(), P.vertices().end(), shifted,
                                Polytope::rat_vec_less))
            return std::nullopt;
    }
    IntVec wi(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) wi[j] = w[j].num();
    return wi;
}

struct FingerprintVerdict {
    bool separated = false;
    RatVec witness_v;
    long witness_t = 0;
};

/// Scans count(P,v,t) vs count(Q,v,t) over the rational grid of the given
/// denominator and t = 0..t_max; reports the first separating pair.
inline FingerprintVerdict fingerprint_distinguishes(const Polytope& P, const Polytope& Q,
                                                    long sample_denominator, long t_max) {
    if (P.dimension() != Q.dimension())
        throw precondition_error("fingerprint: dimension mismatch");
    std::size_t d = P.dimension();
    FingerprintVerdict out;
    for (long t = 0; t <= t_max; ++t) {
        std::vector<long> idx(d, 0);
        while (true) {
            RatVec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = Rational(idx[j], sample_denominator);
            if (count(P, v, Int(t)) != count(Q, v, Int(t))) {
                out.separated = true;
                out.witness_v = v;
                out.witness_t = t;
                return out;
            }
            std::size_t j = 0;
            for (; j < d; ++j) {
                if (idx[j] + 1 < sample_denominator) {
                    ++idx[j];
                    break;
                }
                idx[j] = 0;
            }
            if (j == d) break;
        }
    }
    return out;
}

/// d x d integer matrix with determinant ±1.
struct UnimodularMatrix {
    IntMatrix m;

    explicit UnimodularMatrix(IntMatrix mat) : m(std::move(mat)) {
        Int dd = det(m);
        if (dd != 1 && dd != -1)
            throw precondition_error("UnimodularMatrix: determinant must be ±1");
    }

    RatVec operator()(const RatVec& x) const { return apply_matrix(m, x); }
    bool operator==(const UnimodularMatrix& o) const { return m == o.m; }
    bool operator<(const UnimodularMatrix& o) const { return m < o.m; }
};

/// Aut_Z(P): unimodular g with g(P) = P + v, v integral; exhaustive search
/// over matrices with entries in [-entry_bound, entry_bound].
inline std::vector<UnimodularMatrix> automorphisms(const Polytope& P, long entry_bound) {
    std::size_t d = P.dimension();
    if (d > 3) throw limit_error("automorphism search limited to d <= 3");
    std::vector<UnimodularMatrix> out;
    std::size_t cells = d * d;
    std::vector<long> e(cells, -entry_bound);
    auto fast_det = [&]() -> long {
        if (d == 1) return e[0];
        if (d == 2) return e[0] * e[3] - e[1] * e[2];
        return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
               e[2] * (e[3] * e[7] - e[4] * e[6]);
    };
    while (true) {
        long dd = fast_det();
        if (dd == 1 || dd == -1) {
            IntMatrix m(d, IntVec(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m[i][j] = e[i * d + j];
            std::vector<RatVec> img;
            for (const auto& v : P.vertices()) img.push_back(apply_matrix(m, v));
            RatVec cimg(d, Rational(0));
            for (const auto& v : img) cimg = add(cimg, v);
            cimg = scale(Rational(1, Int(img.size())), cimg);
            RatVec w = sub(P.centroid(), cimg);
            if (is_integral(w)) {
                std::sort(img.begin(), img.end(), Polytope::rat_vec_less);
                bool same = true;
                for (std::size_t i = 0; i < img.size() && same; ++i)
                    same = add(img[i], w) == P.vertices()[i];
                if (same) out.emplace_back(UnimodularMatrix(m));
            }
        }
        std::size_t j = 0;
        for (; j < cells; ++j) {
            if (e[j] < entry_bound) {
                ++e[j];
                break;
            }
            e[j] = -entry_bound;
        }
        if (j == cells) break;
    }
    return out;
}

/// Aut_Z(P) ⊆ Aut_Z(Γ_P): TL_{P,g(v)} = TL_{P,v} on the given samples.
inline CheckReport check_automorphism_invariance(const Polytope& P, const UnimodularMatrix& g,
                                                 const std::vector<RatVec>& samples) {
    CheckReport rep{"automorphism-invariance"};
    for (const auto& v : samples)
        rep.note(tl(P, g(v)) == tl(P, v), "TL equal at v = " + detail::vec_str(v));
    return rep;
}

}  // namespace ehr
