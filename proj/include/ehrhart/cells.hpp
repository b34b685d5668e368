#pragma once

/// Toric arrangement cells: per-normal (ceiling, on-hyperplane) keys
/// canonicalized modulo the integer-translation lattice, membership queries,
/// exhaustive enumeration over the torus with exact feasibility certificates,
/// cell negation and orbit classification.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/exact.hpp"
#include "ehrhart/feasibility.hpp"
#include "ehrhart/linalg.hpp"
#include "ehrhart/polytope.hpp"

namespace ehr {

enum class CellKind { delta, lambda };

/// Identifier of a cell of Δ_P/Z^d (with flags) or a region of Λ_P/Z^d
/// (flags empty): one (ceiling, on-hyperplane) pair per facet normal, the
/// ceiling vector reduced to its canonical coset representative.
struct CellKey {
    IntVec ceilings;
    std::vector<bool> flags;  // empty for lambda keys

    bool operator==(const CellKey& o) const { return ceilings == o.ceilings && flags == o.flags; }
    bool operator!=(const CellKey& o) const { return !(*this == o); }
    bool operator<(const CellKey& o) const {
        if (flags != o.flags) return flags < o.flags;
        for (std::size_t i = 0; i < ceilings.size(); ++i) {
            int c = cmp(ceilings[i], o.ceilings[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    std::string str() const {
        std::string s = "c=(";
        for (std::size_t i = 0; i < ceilings.size(); ++i)
            s += (i ? "," : "") + ceilings[i].get_str();
        s += ")";
        if (!flags.empty()) {
            s += " eps=(";
            for (std::size_t i = 0; i < flags.size(); ++i) s += (i ? "," : "") + std::string(flags[i] ? "1" : "0");
            s += ")";
        }
        return s;
    }
};

namespace detail {

struct RawKey {
    IntVec ceilings;  // unreduced
    std::vector<bool> flags;
};

inline RawKey raw_delta_key(const Polytope& P, const RatVec& v) {
    RawKey k;
    for (const auto& f : P.facets()) {
        Rational val = dot(f.a, v);
        k.ceilings.push_back(val.ceil());
        k.flags.push_back(val.is_integer());
    }
    return k;
}

}  // namespace detail

/// Canonical key of the Δ_P/Z^d cell containing [v], plus the integer vector
/// w with key(v - w) canonical (so v - w lies in the canonical stratum).
inline std::pair<CellKey, IntVec> delta_key_with_shift(const Polytope& P, const RatVec& v) {
    if (v.size() != P.dimension()) throw precondition_error("delta_key: dimension mismatch");
    auto raw = detail::raw_delta_key(P, v);
    auto red = P.key_lattice().reduce(raw.ceilings);
    CellKey key{std::move(red.representative), std::move(raw.flags)};
    return {std::move(key), std::move(red.generator_coeffs)};
}

inline CellKey delta_key(const Polytope& P, const RatVec& v) {
    return delta_key_with_shift(P, v).first;
}

/// Same with the on-hyperplane flags dropped: the Λ_P/Z^d region key.
inline CellKey lambda_key(const Polytope& P, const RatVec& v) {
    CellKey k = delta_key(P, v);
    k.flags.clear();
    return k;
}

struct Cell {
    CellKey key;
    RatVec representative;  // relative-interior point of the canonical stratum
    std::size_t dimension = 0;
};

/// Constraint system of the stratum with the given (unreduced or canonical)
/// key. For delta keys: (a_i, x) = c_i on flags, c_i - 1 < (a_i, x) < c_i
/// otherwise. For lambda keys: c_i - 1 < (a_i, x) <= c_i.
inline FeasibilityResult solve_stratum(const Polytope& P, const IntVec& ceilings,
                                       const std::vector<bool>& flags, bool with_unit_box) {
    std::size_t d = P.dimension();
    const auto& facets = P.facets();
    std::vector<LinearEq> eqs;
    std::vector<LinearLe> strict, closed;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        RatVec a = to_rational(facets[i].a);
        Rational c(ceilings[i]);
        if (!flags.empty() && flags[i]) {
            eqs.push_back({a, c});
            continue;
        }
        strict.push_back({negate(a), Rational(1) - c});  // (a,x) > c-1
        if (flags.empty())
            closed.push_back({a, c});  // (a,x) <= c  (lambda)
        else
            strict.push_back({a, c});  // (a,x) < c   (delta, off-hyperplane)
    }
    if (with_unit_box) {
        for (std::size_t j = 0; j < d; ++j) {
            RatVec e(d, Rational(0));
            e[j] = Rational(1);
            closed.push_back({e, Rational(1)});
            closed.push_back({negate(e), Rational(0)});
        }
    }
    return solve_with_slack(d, eqs, strict, closed);
}

/// The finite cell list of Δ_P/Z^d or Λ_P/Z^d. Candidate ceilings range over
/// the values attainable on the unit box, strata are tested by exact
/// feasibility with a maximized slack, keys are canonicalized and
/// deduplicated, and each cell stores a relative-interior representative of
/// its canonical stratum.
class CellComplex {
  public:
    /// Visits every nonempty stratum whose closure meets the closed unit box,
    /// as (unreduced ceilings, flags, relative-interior point). Every torus
    /// cell has at least one such piece.
    template <typename Visit>
    static void scan_box_strata(const Polytope& P, CellKind kind, Visit&& visit,
                                std::size_t max_facets = 8, std::size_t max_dim = 3) {
        if (P.facet_count() > max_facets)
            throw limit_error("cell enumeration: facet count " + std::to_string(P.facet_count()) +
                              " exceeds the soft limit " + std::to_string(max_facets));
        if (P.dimension() > max_dim)
            throw limit_error("cell enumeration: dimension " + std::to_string(P.dimension()) +
                              " exceeds the soft limit " + std::to_string(max_dim));
        std::size_t d = P.dimension(), m = P.facet_count();
        // Ceiling ranges over the closed unit box.
        std::vector<Int> lo(m), hi(m);
        for (std::size_t i = 0; i < m; ++i) {
            Int mn = 0, mx = 0;
            for (std::size_t j = 0; j < d; ++j) {
                const Int& a = P.facets()[i].a[j];
                if (a < 0) mn += a;
                if (a > 0) mx += a;
            }
            lo[i] = mn;
            hi[i] = mx;
        }
        IntVec c(m);
        dfs(P, kind, lo, hi, c, 0, visit);
    }

    static CellComplex enumerate(const Polytope& P, CellKind kind, std::size_t max_facets = 8,
                                 std::size_t max_dim = 3) {
        CellComplex cx;
        cx.kind_ = kind;
        std::map<CellKey, Cell> found;
        scan_box_strata(
            P, kind,
            [&](const IntVec& c, const std::vector<bool>& flags, const RatVec& point) {
                auto red = P.key_lattice().reduce(c);
                CellKey key{red.representative, flags};
                if (found.count(key)) return;
                Cell cell;
                cell.key = key;
                cell.representative = sub(point, to_rational(red.generator_coeffs));
                cell.dimension = cell_dimension(P, key);
                found.emplace(std::move(key), std::move(cell));
            },
            max_facets, max_dim);
        for (auto& [key, cell] : found) cx.cells_.push_back(std::move(cell));
        std::sort(cx.cells_.begin(), cx.cells_.end(), [](const Cell& a, const Cell& b) {
            if (a.dimension != b.dimension) return a.dimension < b.dimension;
            return a.key < b.key;
        });
        return cx;
    }

    CellKind kind() const { return kind_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    const Cell* find(const CellKey& key) const {
        for (const auto& c : cells_)
            if (c.key == key) return &c;
        return nullptr;
    }

    std::vector<std::size_t> census_by_dimension(std::size_t d) const {
        std::vector<std::size_t> n(d + 1, 0);
        for (const auto& c : cells_) ++n[c.dimension];
        return n;
    }

  private:
    template <typename Visit>
    static void dfs(const Polytope& P, CellKind kind, const std::vector<Int>& lo,
                    const std::vector<Int>& hi, IntVec& c, std::size_t level, Visit&& visit) {
        std::size_t m = P.facet_count();
        if (level == m) {
            expand_leaf(P, kind, c, visit);
            return;
        }
        for (Int v = lo[level]; v <= hi[level]; ++v) {
            c[level] = v;
            if (!prefix_feasible(P, c, level)) continue;
            dfs(P, kind, lo, hi, c, level + 1, visit);
        }
    }

    // Closed relaxation of the slabs assigned so far, intersected with the
    // unit box; used only to prune.
    static bool prefix_feasible(const Polytope& P, const IntVec& c, std::size_t level) {
        std::size_t d = P.dimension();
        std::vector<LinearLe> closed;
        for (std::size_t i = 0; i <= level; ++i) {
            RatVec a = to_rational(P.facets()[i].a);
            closed.push_back({a, Rational(c[i])});
            closed.push_back({negate(a), Rational(1) - Rational(c[i])});
        }
        for (std::size_t j = 0; j < d; ++j) {
            RatVec e(d, Rational(0));
            e[j] = Rational(1);
            closed.push_back({e, Rational(1)});
            closed.push_back({negate(e), Rational(0)});
        }
        return solve_with_slack(d, {}, {}, closed).feasible;
    }

    template <typename Visit>
    static void expand_leaf(const Polytope& P, CellKind kind, const IntVec& c, Visit&& visit) {
        std::size_t m = P.facet_count();
        if (kind == CellKind::lambda) {
            auto res = solve_stratum(P, c, {}, true);
            if (!res.feasible || !(res.slack > Rational(0))) return;
            visit(c, std::vector<bool>{}, *res.point);
            return;
        }
        // Flags can only sit on hyperplanes actually touched by the closed
        // slab system; find those first, then try flag subsets.
        std::vector<std::size_t> touchable;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<bool> single(m, false);
            single[i] = true;
            // (a_i,x) = c_i plus closed slabs for the rest
            std::vector<LinearEq> eqs{{to_rational(P.facets()[i].a), Rational(c[i])}};
            std::vector<LinearLe> closed;
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i) continue;
                RatVec a = to_rational(P.facets()[k].a);
                closed.push_back({a, Rational(c[k])});
                closed.push_back({negate(a), Rational(1) - Rational(c[k])});
            }
            std::size_t d = P.dimension();
            for (std::size_t j = 0; j < d; ++j) {
                RatVec e(d, Rational(0));
                e[j] = Rational(1);
                closed.push_back({e, Rational(1)});
                closed.push_back({negate(e), Rational(0)});
            }
            if (solve_with_slack(d, eqs, {}, closed).feasible) touchable.push_back(i);
        }
        std::size_t subsets = std::size_t(1) << touchable.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<bool> flags(m, false);
            for (std::size_t b = 0; b < touchable.size(); ++b)
                if (mask & (std::size_t(1) << b)) flags[touchable[b]] = true;
            auto res = solve_stratum(P, c, flags, true);
            if (!res.feasible || !(res.slack > Rational(0))) continue;
            visit(c, flags, *res.point);
        }
    }

  public:
    static std::size_t cell_dimension(const Polytope& P, const CellKey& key) {
        std::size_t d = P.dimension();
        if (key.flags.empty()) {
            // Λ region: forced equalities are the normals i with no region
            // point strictly below the ceiling.
            IntMatrix forced;
            for (std::size_t i = 0; i < P.facet_count(); ++i) {
                std::vector<LinearEq> eqs;
                std::vector<LinearLe> strict, closed;
                for (std::size_t k = 0; k < P.facet_count(); ++k) {
                    RatVec a = to_rational(P.facets()[k].a);
                    closed.push_back({a, Rational(key.ceilings[k])});
                    closed.push_back({negate(a), Rational(1) - Rational(key.ceilings[k])});
                }
                strict.push_back({to_rational(P.facets()[i].a), Rational(key.ceilings[i])});
                auto res = solve_with_slack(d, eqs, strict, closed);
                if (!res.feasible || !(res.slack > Rational(0))) forced.push_back(P.facets()[i].a);
            }
            return d - rank(forced);
        }
        IntMatrix active;
        for (std::size_t i = 0; i < key.flags.size(); ++i)
            if (key.flags[i]) active.push_back(P.facets()[i].a);
        return d - rank(active);
    }

  private:
    CellKind kind_ = CellKind::delta;
    std::vector<Cell> cells_;
};

inline CellComplex enumerate_cells(const Polytope& P, CellKind kind, std::size_t max_facets = 8,
                                   std::size_t max_dim = 3) {
    return CellComplex::enumerate(P, kind, max_facets, max_dim);
}

/// Key of the cell containing -v for v in the given cell (computed from the
/// stored representative). An involution on Δ_P/Z^d.
inline CellKey negate_cell(const Polytope& P, const Cell& cell) {
    if (cell.key.flags.empty()) return lambda_key(P, negate(cell.representative));
    return delta_key(P, negate(cell.representative));
}

/// Canonical delta keys of [k·v] for k = 0..k_max.
inline std::vector<std::pair<long, CellKey>> orbit_classify(const Polytope& P, const RatVec& v,
                                                            long k_max) {
    std::vector<std::pair<long, CellKey>> out;
    for (long k = 0; k <= k_max; ++k)
        out.emplace_back(k, delta_key(P, scale(Rational(Int(k)), v)));
    return out;
}

/// Reconstructs a relative-interior point of the stratum of a (canonical)
/// key, without the unit-box restriction. Used when a key arrives without a
/// stored representative.
inline std::optional<RatVec> representative_from_key(const Polytope& P, const CellKey& key) {
    auto res = solve_stratum(P, key.ceilings, key.flags, false);
    if (!res.feasible || !(res.slack > Rational(0)) || !res.point) return std::nullopt;
    return res.point;
}

}  // namespace ehr
