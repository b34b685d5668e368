#pragma once

/// Rational polytopes in V-representation with the unique irredundant
/// jointly-primitive H-representation, exact volume, relative facet volumes,
/// coordinate projections and central-symmetry structure.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ehrhart/exact.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/linalg.hpp"

namespace ehr {

/// One half-space (a, x) >= b of the irredundant presentation, gcd(a, b) = 1,
/// a oriented inward, together with the facet it supports.
struct Facet {
    IntVec a;
    Int b;
    std::vector<std::size_t> vertex_indices;  // indices into Polytope::vertices()
    Rational relative_volume;                 // volume against the induced lattice of H ∩ Z^d
};

class Polytope {
  public:
    /// Builds the polytope spanned by `points`. Redundant points are dropped,
    /// facets computed by the d-subset scan, denominator and volume cached.
    /// Throws if the points do not affinely span R^d.
    static Polytope from_vertices(const std::vector<RatVec>& points) {
        if (points.empty()) throw precondition_error("from_vertices: empty point set");
        std::size_t d = points[0].size();
        if (d == 0) throw precondition_error("from_vertices: zero-dimensional ambient space");
        for (const auto& p : points)
            if (p.size() != d) throw precondition_error("from_vertices: inconsistent point dimensions");

        std::vector<RatVec> pts = points;
        std::sort(pts.begin(), pts.end(), rat_vec_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

        {
            RatMatrix diffs;
            for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
            if (rank(diffs) != d)
                throw precondition_error("from_vertices: points do not affinely span R^d");
        }

        // Every facet hyperplane passes through d affinely independent input
        // points, so scanning d-subsets finds the full irredundant
        // presentation; supporting-side test keeps only true facets.
        std::set<std::pair<IntVec, Int>> halfspaces;
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        const std::size_t n = pts.size();
        if (n < d) throw precondition_error("from_vertices: too few points");
        while (true) {
            RatMatrix edges;
            for (std::size_t i = 1; i < d; ++i) edges.push_back(sub(pts[idx[i]], pts[idx[0]]));
            RatVec nvec = hyperplane_normal(edges, d);
            bool zero = true;
            for (const auto& x : nvec)
                if (!x.is_zero()) zero = false;
            if (!zero) {
                Rational b = dot(nvec, pts[idx[0]]);
                bool all_ge = true, all_le = true;
                for (const auto& p : pts) {
                    Rational val = dot(nvec, p);
                    if (val < b) all_ge = false;
                    if (val > b) all_le = false;
                    if (!all_ge && !all_le) break;
                }
                if (all_ge || all_le) {
                    if (!all_ge) {
                        nvec = negate(nvec);
                        b = -b;
                    }
                    halfspaces.insert(joint_primitive(nvec, b));
                }
            }
            // next d-combination
            std::size_t k = d;
            while (k > 0 && idx[k - 1] == n - d + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t i = k; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }

        // A point is a vertex iff its tight normals span R^d.
        std::vector<RatVec> verts;
        for (const auto& p : pts) {
            IntMatrix tight;
            for (const auto& [a, b] : halfspaces)
                if (dot(a, p) == Rational(b)) tight.push_back(a);
            if (tight.size() >= d && rank(tight) == d) verts.push_back(p);
        }

        Polytope P;
        P.d_ = d;
        P.verts_ = std::move(verts);
        for (const auto& [a, b] : halfspaces) {
            Facet f;
            f.a = a;
            f.b = b;
            for (std::size_t i = 0; i < P.verts_.size(); ++i)
                if (dot(a, P.verts_[i]) == Rational(b)) f.vertex_indices.push_back(i);
            P.facets_.push_back(std::move(f));
        }

        P.q_ = 1;
        for (const auto& v : P.verts_) P.q_ = lcm(P.q_, ehr::denominator(v));

        P.centroid_.assign(d, Rational(0));
        for (const auto& v : P.verts_) P.centroid_ = add(P.centroid_, v);
        P.centroid_ = scale(Rational(1, Int(P.verts_.size())), P.centroid_);

        for (auto& f : P.facets_) f.relative_volume = P.facet_relative_volume(f);
        P.volume_ = P.compute_volume();

        std::vector<IntVec> gens(d, IntVec(P.facets_.size()));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < P.facets_.size(); ++i) gens[j][i] = P.facets_[i].a[j];
        P.keylat_ = IntegerLattice::from_generators(std::move(gens), P.facets_.size());
        return P;
    }

    std::size_t dimension() const { return d_; }
    const std::vector<RatVec>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    const Int& denominator() const { return q_; }
    const Rational& volume() const { return volume_; }
    const RatVec& centroid() const { return centroid_; }

    /// Lattice L = {(a_1·w, ..., a_m·w) : w in Z^d} acting on cell keys.
    const IntegerLattice& key_lattice() const { return keylat_; }

    bool contains(const RatVec& p, bool strict = false) const {
        for (const auto& f : facets_) {
            Rational v = dot(f.a, p);
            if (strict ? !(v > Rational(f.b)) : !(v >= Rational(f.b))) return false;
        }
        return true;
    }

    bool operator==(const Polytope& o) const { return d_ == o.d_ && verts_ == o.verts_; }
    bool operator!=(const Polytope& o) const { return !(*this == o); }

    /// pi_axis(P): delete coordinate `axis` (0-based) and rebuild the hull.
    Polytope project(std::size_t axis) const {
        if (d_ < 2) throw precondition_error("project: dimension must be at least 2");
        if (axis >= d_) throw precondition_error("project: axis out of range");
        std::vector<RatVec> img;
        for (const auto& v : verts_) {
            RatVec w;
            for (std::size_t j = 0; j < d_; ++j)
                if (j != axis) w.push_back(v[j]);
            img.push_back(std::move(w));
        }
        return from_vertices(img);
    }

    /// Center c with 2c - v a vertex for every vertex v, when P = -P + u
    /// (u = 2c); nullopt otherwise.
    std::optional<RatVec> central_symmetry() const {
        const RatVec& c = centroid_;
        for (const auto& v : verts_) {
            RatVec mirrored = sub(scale(Rational(2), c), v);
            if (!std::binary_search(verts_.begin(), verts_.end(), mirrored, rat_vec_less))
                return std::nullopt;
        }
        return c;
    }

    /// The vertex pairing v -> v* = 2c - v of a centrally symmetric polytope.
    RatVec paired_vertex(const RatVec& v) const {
        auto c = central_symmetry();
        if (!c) throw precondition_error("paired_vertex: polytope is not centrally symmetric");
        return sub(scale(Rational(2), *c), v);
    }

    static bool rat_vec_less(const RatVec& a, const RatVec& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return a.size() < b.size();
    }

  private:
    Polytope() = default;

    /// Volume of the facet measured against H ∩ Z^d: map by a unimodular
    /// matrix sending the primitive normal to the first coordinate, drop that
    /// (now constant) coordinate, and take the (d-1)-volume downstairs.
    Rational facet_relative_volume(const Facet& f) const {
        if (d_ == 1) return Rational(1);  // facet is a point
        IntVec a0 = primitive(f.a);
        IntMatrix U = unimodular_with_first_row(a0);
        std::vector<RatVec> img;
        for (std::size_t vi : f.vertex_indices) {
            RatVec y = apply_matrix(U, verts_[vi]);
            img.emplace_back(y.begin() + 1, y.end());
        }
        return from_vertices(img).volume();
    }

    /// Fan from the first vertex: vol = (1/d) sum |(a_i, v0) - b_i| * relvol_i / gcd(a_i).
    Rational compute_volume() const {
        if (d_ == 1) {
            Rational lo = verts_.front()[0], hi = verts_.back()[0];
            return hi - lo;
        }
        const RatVec& v0 = verts_.front();
        Rational total;
        for (const auto& f : facets_) {
            Rational h = dot(f.a, v0) - Rational(f.b);
            if (h.is_zero()) continue;
            total += h.abs() * f.relative_volume / Rational(gcd(f.a));
        }
        return total / Rational(Int(d_));
    }

    std::size_t d_ = 0;
    std::vector<RatVec> verts_;
    std::vector<Facet> facets_;
    Int q_;
    Rational volume_;
    RatVec centroid_;
    IntegerLattice keylat_;
};

inline Polytope translate(const Polytope& P, const RatVec& w) {
    std::vector<RatVec> pts;
    for (const auto& v : P.vertices()) pts.push_back(add(v, w));
    return Polytope::from_vertices(pts);
}

inline std::vector<IntVec> normals(const Polytope& P) {
    std::vector<IntVec> out;
    for (const auto& f : P.facets()) out.push_back(f.a);
    return out;
}

}  // namespace ehr
