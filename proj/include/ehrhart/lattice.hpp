#pragma once

/// Integer lattices given by generator rows: row-style Hermite normal form
/// (positive pivots, entries above a pivot reduced into [0, pivot)) and the
/// canonical coset representative it induces. The HNF is unique, so coset
/// representatives are deterministic cell identifiers.

#include <cstddef>
#include <utility>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehr {

struct CosetReduction {
    IntVec representative;
    // Coefficients over the *original* generator rows of the subtracted
    // lattice element: subtracted = sum_j coeffs[j] * generators[j].
    IntVec generator_coeffs;
};

class IntegerLattice {
  public:
    IntegerLattice() : ambient_(0) {}

    /// Row HNF of the given generators. Rank-deficient and empty inputs are
    /// fine; zero rows are dropped.
    static IntegerLattice from_generators(std::vector<IntVec> generators, std::size_t ambient_dim) {
        IntegerLattice L;
        L.ambient_ = ambient_dim;
        L.generators_ = std::move(generators);
        L.compute_hnf();
        return L;
    }

    std::size_t ambient_dimension() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<IntVec>& hnf_rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    const std::vector<IntVec>& generators() const { return generators_; }

    /// Unique representative of c + L: pivot coordinates reduced into
    /// [0, pivot) in pivot-column order. Also reports which lattice element
    /// was subtracted, as coefficients over the original generators.
    CosetReduction reduce(const IntVec& c) const {
        if (c.size() != ambient_)
            throw precondition_error("coset reduction: vector/lattice dimension mismatch");
        CosetReduction out;
        out.representative = c;
        out.generator_coeffs.assign(generators_.size(), Int(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t j = pivots_[i];
            Int q = fdiv(out.representative[j], rows_[i][j]);
            if (q == 0) continue;
            for (std::size_t k = 0; k < ambient_; ++k) out.representative[k] -= q * rows_[i][k];
            for (std::size_t g = 0; g < generators_.size(); ++g)
                out.generator_coeffs[g] += q * transform_[i][g];
        }
        return out;
    }

    IntVec canonical_coset_rep(const IntVec& c) const { return reduce(c).representative; }

    bool contains(const IntVec& v) const { return is_zero(canonical_coset_rep(v)); }

  private:
    void compute_hnf() {
        std::size_t n = generators_.size();
        std::vector<IntVec> h = generators_;
        for (const auto& row : h)
            if (row.size() != ambient_)
                throw precondition_error("lattice generator has wrong dimension");
        // transform[i][g]: row i of the working matrix as a Z-combination of
        // the original generators.
        std::vector<IntVec> tr(n, IntVec(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i) tr[i][i] = 1;

        auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
            for (std::size_t k = 0; k < ambient_; ++k) h[dst][k] -= q * h[src][k];
            for (std::size_t g = 0; g < n; ++g) tr[dst][g] -= q * tr[src][g];
        };
        auto row_swap = [&](std::size_t i, std::size_t j) {
            std::swap(h[i], h[j]);
            std::swap(tr[i], tr[j]);
        };
        auto row_neg = [&](std::size_t i) {
            for (auto& x : h[i]) x = -x;
            for (auto& x : tr[i]) x = -x;
        };

        std::size_t row = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t col = 0; col < ambient_ && row < n; ++col) {
            // Euclid on the column entries at or below `row`.
            while (true) {
                std::size_t best = n;
                for (std::size_t r = row; r < n; ++r) {
                    if (h[r][col] == 0) continue;
                    if (best == n || cmp(abs(h[r][col]), abs(h[best][col])) < 0) best = r;
                }
                if (best == n) break;  // column is zero below `row`
                if (best != row) row_swap(row, best);
                bool others = false;
                for (std::size_t r = row + 1; r < n; ++r) {
                    if (h[r][col] == 0) continue;
                    others = true;
                    row_sub(r, row, fdiv(h[r][col], h[row][col]));
                }
                if (!others) break;
            }
            if (row < n && h[row][col] != 0) {
                if (h[row][col] < 0) row_neg(row);
                pivots.push_back(col);
                ++row;
            }
        }
        // Reduce entries above each pivot into [0, pivot).
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::size_t j = pivots[i];
            for (std::size_t r = 0; r < i; ++r) {
                Int q = fdiv(h[r][j], h[i][j]);
                if (q != 0) row_sub(r, i, q);
            }
        }
        rows_.assign(h.begin(), h.begin() + pivots.size());
        transform_.assign(tr.begin(), tr.begin() + pivots.size());
        pivots_ = std::move(pivots);
    }

    std::size_t ambient_;
    std::vector<IntVec> generators_;
    std::vector<IntVec> rows_;       // HNF rows, one per pivot
    std::vector<IntVec> transform_;  // rows_ = transform_ * generators_
    std::vector<std::size_t> pivots_;
};

inline IntegerLattice hnf(const std::vector<IntVec>& rows, std::size_t ambient_dim) {
    return IntegerLattice::from_generators(rows, ambient_dim);
}

}  // namespace ehr
