#pragma once

/// Translated lattice-point enumerators as quasi-polynomials, the per-cell
/// TL table, assembly of ehr_{P+v} from cell constituents, and the finite
/// constituent universe.

#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "ehrhart/cells.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasipoly.hpp"

namespace ehr {

/// TL_{P,v}: fit of t -> #((tP+v) ∩ Z^d) with period q = denominator(P) and
/// degree d.
inline QuasiPolynomial tl(const Polytope& P, const RatVec& v) {
    return fit_quasi_polynomial(
        [&](const Int& t) { return Rational(count(P, v, t)); }, to_long(P.denominator()),
        P.dimension(), 0);
}

/// TL_{int(P),v}: fit of the interior counts on t >= 1.
inline QuasiPolynomial tl_interior(const Polytope& P, const RatVec& v) {
    return fit_quasi_polynomial(
        [&](const Int& t) { return Rational(count_interior(P, v, t)); }, to_long(P.denominator()),
        P.dimension(), 1);
}

/// Cache of TL_{P,C} by canonical delta key. Lazy tables compute on miss (via
/// the stored representative, or by reconstructing one from the key);
/// exhaustive tables are prefilled from a cell enumeration and treat unknown
/// keys as errors. Lookups are serialized; insertion is idempotent, so a
/// racing recomputation would be harmless.
class CellTable {
  public:
    explicit CellTable(const Polytope& P) : P_(&P), exhaustive_(false) {}

    CellTable(const Polytope& P, const CellComplex& complex) : P_(&P), exhaustive_(true) {
        for (const auto& cell : complex.cells())
            if (complex.kind() == CellKind::delta) insert(cell.key, cell.representative);
    }

    const Polytope& polytope() const { return *P_; }
    bool exhaustive() const { return exhaustive_; }

    /// TL_{P,C} for the cell containing [v]; fits and caches on first use.
    const QuasiPolynomial& tl_for_point(const RatVec& v) {
        auto [key, shift] = delta_key_with_shift(*P_, v);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = entries_.find(key);
            if (it != entries_.end() && it->second.fitted) return it->second.tl;
        }
        RatVec rep = sub(v, to_rational(shift));
        return fit_and_store(key, rep);
    }

    /// TL_{P,C} by canonical key.
    const QuasiPolynomial& tl_cell(const CellKey& key) {
        RatVec rep;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = entries_.find(key);
            if (it != entries_.end()) {
                if (it->second.fitted) return it->second.tl;
                rep = it->second.rep;
            }
        }
        if (rep.empty()) {
            if (exhaustive_)
                throw precondition_error("tl_cell: unknown key in exhaustive table: " + key.str());
            auto r = representative_from_key(*P_, key);
            if (!r) throw precondition_error("tl_cell: key has an empty stratum: " + key.str());
            rep = *r;
        }
        return fit_and_store(key, rep);
    }

    const RatVec* representative(const CellKey& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second.rep;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return entries_.size();
    }

  private:
    struct Entry {
        QuasiPolynomial tl;
        RatVec rep;
        bool fitted = false;
    };

    void insert(const CellKey& key, const RatVec& rep) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& e = entries_[key];
        if (e.rep.empty()) e.rep = rep;
    }

    const QuasiPolynomial& fit_and_store(const CellKey& key, const RatVec& rep) {
        QuasiPolynomial q = tl(*P_, rep);
        std::lock_guard<std::mutex> lock(mu_);
        auto& e = entries_[key];
        if (!e.fitted) {
            e.tl = std::move(q);
            e.rep = rep;
            e.fitted = true;
        }
        return e.tl;
    }

    const Polytope* P_;
    bool exhaustive_;
    mutable std::mutex mu_;
    std::map<CellKey, Entry> entries_;
};

/// ehr_{P+v} assembled via constituent transfer: the k-th constituent is the
/// k-th constituent of TL_{P,C} with [k·v] in C. Period lcm(q, den(v));
/// cross-validated against direct counts for t = 0..2·period.
inline QuasiPolynomial ehr_translated(const Polytope& P, const RatVec& v, CellTable* table = nullptr) {
    if (v.size() != P.dimension()) throw precondition_error("ehr_translated: dimension mismatch");
    CellTable local(P);
    CellTable& tab = table ? *table : local;
    long Q = to_long(lcm(P.denominator(), denominator(v)));
    std::vector<Polynomial> cs(Q);
    for (long k = 0; k < Q; ++k) {
        const QuasiPolynomial& tlk = tab.tl_for_point(scale(Rational(Int(k)), v));
        cs[k] = tlk.constituent(Int(k));
    }
    QuasiPolynomial result(Q, std::move(cs));
    for (long t = 0; t <= 2 * Q; ++t) {
        Int direct = count(P, scale(Rational(Int(t)), v), Int(t));
        if (result.eval(Int(t)) != Rational(direct))
            throw error("ehr_translated: assembled quasi-polynomial disagrees with direct count at t = " +
                        std::to_string(t));
    }
    return result;
}

/// Union over all cells C of Δ_P/Z^d and residues k of the k-th constituent
/// of TL_{P,C}: the finite universe containing every constituent of every
/// ehr_{P+v}, v rational.
inline std::set<Polynomial> constituent_universe(const Polytope& P, std::size_t max_facets = 8,
                                                 std::size_t max_dim = 3) {
    CellComplex cx = enumerate_cells(P, CellKind::delta, max_facets, max_dim);
    CellTable table(P, cx);
    std::set<Polynomial> out;
    long q = to_long(P.denominator());
    for (const auto& cell : cx.cells()) {
        const QuasiPolynomial& f = table.tl_cell(cell.key);
        for (long k = 0; k < q; ++k) out.insert(f.constituent(k));
    }
    return out;
}

}  // namespace ehr
