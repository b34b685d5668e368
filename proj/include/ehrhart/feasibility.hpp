#pragma once

/// Exact linear feasibility by Fourier–Motzkin elimination with a maximized
/// slack: strict inequalities a·x < b are relaxed to a·x <= b - λ and λ is
/// maximized (capped at 1/2). λ* > 0 certifies a point satisfying every
/// strict inequality strictly; back-substitution produces that point.

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ehrhart/exact.hpp"

namespace ehr {

struct LinearEq {
    RatVec coef;
    Rational rhs;  // coef · x = rhs
};

struct LinearLe {
    RatVec coef;
    Rational rhs;  // coef · x <= rhs
};

struct FeasibilityResult {
    bool feasible = false;       // some point satisfies eq/closed and strict relaxed to <=
    Rational slack;              // maximal λ (meaningful when feasible)
    std::optional<RatVec> point; // present iff feasible and slack > 0 (or no strict constraints)
};

namespace detail {

// Extended row over (x_1..x_n, λ): coef·x + lam*λ <= rhs.
struct Row {
    RatVec coef;
    Rational lam;
    Rational rhs;
};

inline bool row_less(const Row& a, const Row& b) {
    if (a.lam != b.lam) return a.lam < b.lam;
    if (a.rhs != b.rhs) return a.rhs < b.rhs;
    for (std::size_t i = 0; i < a.coef.size(); ++i)
        if (a.coef[i] != b.coef[i]) return a.coef[i] < b.coef[i];
    return false;
}

// Scale so the first nonzero entry (including lam, rhs) has absolute value 1;
// cheap duplicate pruning between elimination stages.
inline void normalize_row(Row& r) {
    Rational pivot;
    for (const auto& c : r.coef)
        if (!c.is_zero()) {
            pivot = c.abs();
            break;
        }
    if (pivot.is_zero() && !r.lam.is_zero()) pivot = r.lam.abs();
    if (pivot.is_zero() && !r.rhs.is_zero()) pivot = r.rhs.abs();
    if (pivot.is_zero()) return;
    for (auto& c : r.coef) c /= pivot;
    r.lam /= pivot;
    r.rhs /= pivot;
}

}  // namespace detail

/// Maximizes λ subject to
///   equalities          e·x  = v
///   strict inequalities s·x  < v   (relaxed to s·x + λ <= v)
///   closed inequalities c·x <= v
/// Returns feasibility of the relaxed system, λ* = min(max λ, 1/2), and a
/// point attaining λ* when λ* > 0.
inline FeasibilityResult solve_with_slack(std::size_t dim, const std::vector<LinearEq>& equalities,
                                          const std::vector<LinearLe>& strict,
                                          const std::vector<LinearLe>& closed) {
    using detail::Row;
    FeasibilityResult out;

    // Gaussian elimination on the equalities: express pivot variables in
    // terms of free variables.
    std::vector<LinearEq> eqs = equalities;
    std::vector<std::pair<std::size_t, LinearEq>> solved;  // x_p = coef·x + rhs (coef[p] = 0)
    std::vector<bool> eliminated(dim, false);
    for (auto& e : eqs) {
        for (const auto& [p, expr] : solved) {
            if (e.coef[p].is_zero()) continue;
            Rational f = e.coef[p];
            e.coef[p] = Rational(0);
            for (std::size_t j = 0; j < dim; ++j) e.coef[j] += f * expr.coef[j];
            e.rhs -= f * expr.rhs;
        }
        std::size_t p = dim;
        for (std::size_t j = 0; j < dim; ++j)
            if (!e.coef[j].is_zero()) {
                p = j;
                break;
            }
        if (p == dim) {
            if (!e.rhs.is_zero()) return out;  // inconsistent equalities
            continue;
        }
        LinearEq expr;  // x_p = expr.coef·x + expr.rhs
        expr.coef.assign(dim, Rational(0));
        for (std::size_t j = 0; j < dim; ++j)
            if (j != p) expr.coef[j] = -e.coef[j] / e.coef[p];
        expr.rhs = e.rhs / e.coef[p];
        for (auto& [sp, sexpr] : solved) {
            if (sexpr.coef[p].is_zero()) continue;
            Rational f = sexpr.coef[p];
            sexpr.coef[p] = Rational(0);
            for (std::size_t j = 0; j < dim; ++j) sexpr.coef[j] += f * expr.coef[j];
            sexpr.rhs += f * expr.rhs;
        }
        solved.emplace_back(p, std::move(expr));
        eliminated[p] = true;
    }

    // Substitute solved variables into the inequalities and tag λ.
    std::vector<Row> rows;
    auto push = [&](const RatVec& coef, const Rational& rhs, bool is_strict) {
        Row r;
        r.coef = coef;
        r.rhs = rhs;
        r.lam = is_strict ? Rational(1) : Rational(0);
        for (const auto& [p, expr] : solved) {
            if (r.coef[p].is_zero()) continue;
            Rational f = r.coef[p];
            r.coef[p] = Rational(0);
            for (std::size_t j = 0; j < dim; ++j) r.coef[j] += f * expr.coef[j];
            r.rhs -= f * expr.rhs;
        }
        rows.push_back(std::move(r));
    };
    for (const auto& s : strict) push(s.coef, s.rhs, true);
    for (const auto& c : closed) push(c.coef, c.rhs, false);
    {
        Row cap;  // λ <= 1/2
        cap.coef.assign(dim, Rational(0));
        cap.lam = Rational(1);
        cap.rhs = Rational(1, 2);
        rows.push_back(std::move(cap));
    }

    // Fourier–Motzkin over the free variables, keeping each stage for
    // back-substitution.
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < dim; ++j)
        if (!eliminated[j]) order.push_back(j);
    std::vector<std::vector<Row>> stages;
    for (std::size_t v : order) {
        stages.push_back(rows);
        std::vector<Row> lower, upper, rest;
        for (auto& r : rows) {
            int s = r.coef[v].sign();
            if (s > 0)
                upper.push_back(std::move(r));
            else if (s < 0)
                lower.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        std::set<std::vector<Rational>> seen;
        auto keep = [&](Row r) {
            detail::normalize_row(r);
            std::vector<Rational> sig = r.coef;
            sig.push_back(r.lam);
            sig.push_back(r.rhs);
            if (seen.insert(std::move(sig)).second) rest.push_back(std::move(r));
        };
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // (lo.coef·x + lo.lam λ <= lo.rhs, coef[v] < 0) combined with
                // (up.coef·x + up.lam λ <= up.rhs, coef[v] > 0).
                Rational lv = -lo.coef[v], uv = up.coef[v];
                Row r;
                r.coef.assign(dim, Rational(0));
                for (std::size_t j = 0; j < dim; ++j)
                    r.coef[j] = lo.coef[j] * uv + up.coef[j] * lv;
                r.lam = lo.lam * uv + up.lam * lv;
                r.rhs = lo.rhs * uv + up.rhs * lv;
                keep(std::move(r));
            }
        rows = std::move(rest);
    }

    // Only λ remains: λ bounds and 0-rows.
    Rational ub(1, 2);
    std::optional<Rational> lb;
    for (const auto& r : rows) {
        int s = r.lam.sign();
        if (s == 0) {
            if (r.rhs < Rational(0)) return out;
        } else if (s > 0) {
            Rational cand = r.rhs / r.lam;
            if (cand < ub) ub = cand;
        } else {
            Rational cand = r.rhs / r.lam;
            if (!lb || cand > *lb) lb = cand;
        }
    }
    if (lb && *lb > ub) return out;
    if (ub < Rational(0)) return out;  // the λ = 0 system itself is infeasible
    out.feasible = true;
    out.slack = ub;
    if (!strict.empty() && !(out.slack > Rational(0))) return out;  // feasible but no open point

    // Back-substitution with λ = λ*.
    RatVec x(dim, Rational(0));
    Rational lam = out.slack;
    for (std::size_t s = order.size(); s-- > 0;) {
        std::size_t v = order[s];
        std::optional<Rational> lo, hi;
        for (const auto& r : stages[s]) {
            int sg = r.coef[v].sign();
            if (sg == 0) continue;
            Rational bound = r.rhs - r.lam * lam;
            for (std::size_t j = 0; j < dim; ++j)
                if (j != v) bound -= r.coef[j] * x[j];
            bound /= r.coef[v];
            if (sg > 0) {  // x_v <= bound
                if (!hi || bound < *hi) hi = bound;
            } else {  // x_v >= bound
                if (!lo || bound > *lo) lo = bound;
            }
        }
        if (lo && hi)
            x[v] = (*lo + *hi) / Rational(2);
        else if (lo)
            x[v] = *lo + Rational(1);
        else if (hi)
            x[v] = *hi - Rational(1);
        else
            x[v] = Rational(0);
    }
    for (std::size_t s = solved.size(); s-- > 0;) {
        const auto& [p, expr] = solved[s];
        x[p] = expr.rhs + dot(expr.coef, x);
    }
    out.point = std::move(x);
    return out;
}

}  // namespace ehr
