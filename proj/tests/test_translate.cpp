#include <doctest.h>

#include <map>
#include <set>
#include <thread>

#include "ehrhart/translate.hpp"
#include "support.hpp"

using namespace ehr;
using namespace testsupport;

namespace {

Polynomial poly(std::initializer_list<Rational> ascending) {
    return Polynomial(std::vector<Rational>(ascending));
}

// TL table of a cell complex as a multiset of (dimension, quasi-polynomial).
std::multiset<std::pair<std::size_t, std::string>> table_signature(const Polytope& P,
                                                                   const CellComplex& cx) {
    CellTable table(P, cx);
    std::multiset<std::pair<std::size_t, std::string>> sig;
    for (const auto& cell : cx.cells()) {
        const QuasiPolynomial& f =
            cx.kind() == CellKind::delta ? table.tl_cell(cell.key) : tl(P, cell.representative);
        std::string s;
        for (long k = 0; k < f.period(); ++k) s += f.constituent(k).str() + ";";
        sig.emplace(cell.dimension, s);
    }
    return sig;
}

}  // namespace

TEST_CASE("tl on the trapezoid cells") {
    Polytope T = trapezoid();
    auto f1 = tl(T, {Rational(17, 100), Rational(52, 100)});
    CHECK(f1.period() == 1);
    CHECK(f1.constituent(0L) == poly({0, Rational(-1, 2), Rational(3, 2)}));

    auto v1 = tl(T, {Rational(0), Rational(0)});
    CHECK(v1.constituent(0L) == poly({1, Rational(5, 2), Rational(3, 2)}));
}

TEST_CASE("tl on the rhombus cells") {
    Polytope Q = rhombus();
    auto v1 = tl(Q, {Rational(0), Rational(0)});
    CHECK(v1.period() == 2);
    CHECK(v1.constituent(0L) == poly({1, 1, 1}));
    CHECK(v1.constituent(1L) == poly({1, 1, 1}));

    // [3*(1/8,1/8)] = (3/8,3/8) lies in F_4 with TL (t^2, t^2-1)
    auto f4 = tl(Q, {Rational(3, 8), Rational(3, 8)});
    CHECK(f4.constituent(0L) == poly({0, 0, 1}));
    CHECK(f4.constituent(1L) == poly({-1, 0, 1}));
}

TEST_CASE("tl_interior") {
    Polytope T = trapezoid();
    auto i0 = tl_interior(T, {Rational(0), Rational(0)});
    CHECK(i0.constituent(0L) == poly({1, Rational(-5, 2), Rational(3, 2)}));

    auto ie3 = tl_interior(T, {Rational(1, 2), Rational(0)});
    CHECK(ie3.constituent(0L) == poly({0, Rational(-3, 2), Rational(3, 2)}));

    auto iq = tl_interior(rhombus(), {Rational(0), Rational(0)});
    CHECK(iq.constituent(0L) == poly({1, -1, 1}));
    CHECK(iq.constituent(1L) == poly({1, -1, 1}));
}

TEST_CASE("tl_cell on the trapezoid table") {
    Polytope T = trapezoid();
    auto cx = enumerate_cells(T, CellKind::delta);
    CellTable table(T, cx);

    auto e3 = delta_key(T, rv({Rational(1, 2), Rational(0)}));
    CHECK(table.tl_cell(e3).constituent(0L) == poly({0, Rational(3, 2), Rational(3, 2)}));

    auto f2 = delta_key(T, rv({Rational(52, 100), Rational(17, 100)}));
    CHECK(table.tl_cell(f2).constituent(0L) == poly({0, Rational(1, 2), Rational(3, 2)}));

    // unknown key in exhaustive mode is an error
    CellKey bogus = e3;
    bogus.ceilings[0] += 1;
    bogus.ceilings[1] += 1;
    CHECK_THROWS_AS(table.tl_cell(bogus), precondition_error);
}

TEST_CASE("tl_cell on the rhombus edge families") {
    Polytope Q = rhombus();
    auto cx = enumerate_cells(Q, CellKind::delta);
    CellTable table(Q, cx);
    // (9/10,1/20) sits on x+2y=1 with generic x-2y: the +1/2 edge family
    auto e1 = delta_key(Q, rv({Rational(9, 10), Rational(1, 20)}));
    auto f = table.tl_cell(e1);
    CHECK(f.constituent(0L) == poly({0, Rational(1, 2), 1}));
    CHECK(f.constituent(1L) == poly({Rational(1, 2), Rational(1, 2), 1}));
    // (1/3,1/3) sits on the same hyperplane family but the -1/2 edge family
    auto e3 = delta_key(Q, rv({Rational(1, 3), Rational(1, 3)}));
    auto g = table.tl_cell(e3);
    CHECK(g.constituent(0L) == poly({0, Rational(1, 2), 1}));
    CHECK(g.constituent(1L) == poly({Rational(-1, 2), Rational(1, 2), 1}));
}

TEST_CASE("trapezoid delta table matches the worked values") {
    // by dimension: 0-cell 3/2t^2+5/2t+1 (brute force; the printed table's
    // 3/2t^2+3/2t+1 is the documented deviation); 1-cells {+3/2t, +1/2t x2};
    // 2-cells {-1/2t, +1/2t}
    Polytope T = trapezoid();
    auto sig = table_signature(T, enumerate_cells(T, CellKind::delta));
    std::multiset<std::pair<std::size_t, std::string>> expect{
        {0, "3/2*t^2 + 5/2*t + 1;"},
        {1, "3/2*t^2 + 3/2*t;"},
        {1, "3/2*t^2 + 1/2*t;"},
        {1, "3/2*t^2 + 1/2*t;"},
        {2, "3/2*t^2 - 1/2*t;"},
        {2, "3/2*t^2 + 1/2*t;"},
    };
    CHECK(sig == expect);
}

TEST_CASE("trapezoid lambda table matches the region table") {
    Polytope T = trapezoid();
    auto sig = table_signature(T, enumerate_cells(T, CellKind::lambda));
    std::multiset<std::pair<std::size_t, std::string>> expect{
        {0, "3/2*t^2 + 5/2*t + 1;"},
        {1, "3/2*t^2 + 3/2*t;"},
        {2, "3/2*t^2 + 1/2*t;"},
        {2, "3/2*t^2 - 1/2*t;"},
    };
    CHECK(sig == expect);
}

TEST_CASE("rhombus table matches the worked example") {
    Polytope Q = rhombus();
    auto sig = table_signature(Q, enumerate_cells(Q, CellKind::delta));
    std::multiset<std::pair<std::size_t, std::string>> expect{
        {0, "t^2 + t + 1;t^2 + t + 1;"},
        {0, "t^2 + t;t^2 + t;"},
        {0, "t^2 + t;t^2 + t;"},
        {0, "t^2 + t;t^2 + t;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t + 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t + 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t + 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t + 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t - 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t - 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t - 1/2;"},
        {1, "t^2 + 1/2*t;t^2 + 1/2*t - 1/2;"},
        {2, "t^2;t^2 + 1;"},
        {2, "t^2;t^2;"},
        {2, "t^2;t^2;"},
        {2, "t^2;t^2 - 1;"},
    };
    CHECK(sig == expect);
}

TEST_CASE("parallelogram table matches the worked example") {
    Polytope P = parallelogram();
    auto sig = table_signature(P, enumerate_cells(P, CellKind::delta));
    std::multiset<std::pair<std::size_t, std::string>> expect{
        {0, "3*t^2 + 2*t + 1;"},
        {0, "3*t^2 + 2*t;"},
        {0, "3*t^2 + 2*t;"},
        {1, "3*t^2 + t;"},
        {1, "3*t^2 + t;"},
        {1, "3*t^2 + t;"},
        {1, "3*t^2 + t;"},
        {1, "3*t^2 + t;"},
        {1, "3*t^2 + t;"},
        {2, "3*t^2;"},
        {2, "3*t^2;"},
        {2, "3*t^2;"},
    };
    CHECK(sig == expect);
}

TEST_CASE("translated Ehrhart assembly: parallelogram") {
    // [3v] = [(1,1/2)] has 3x-y = 5/2, off every arrangement line, so t ≡ 3
    // lands in a 2-cell: the constituent is 3t^2 (direct counts 27, 243, 675
    // at t = 3, 9, 15), not the 3t^2+t of the printed example.
    Polytope P = parallelogram();
    auto f = ehr_translated(P, {Rational(1, 3), Rational(1, 6)});
    CHECK(f.period() == 6);
    CHECK(f.constituent(0L) == poly({1, 2, 3}));
    for (long k : {1, 2, 3, 4, 5}) CHECK(f.constituent(k) == poly({0, 0, 3}));
    CHECK(f.minimal_period() == 6);
    CHECK(f.has_gcd_property());
}

TEST_CASE("translated Ehrhart assembly: rhombus displays") {
    Polytope Q = rhombus();
    auto fu = ehr_translated(Q, {Rational(1, 8), Rational(1, 8)});
    CHECK(fu.period() == 8);
    CHECK(fu.constituent(0L) == poly({1, 1, 1}));
    for (long k : {1, 2, 4, 6, 7}) CHECK(fu.constituent(k) == poly({0, 0, 1}));
    for (long k : {3, 5}) CHECK(fu.constituent(k) == poly({-1, 0, 1}));
    CHECK(fu.minimal_period() == 8);
    CHECK(fu.is_symmetric());
    CHECK_FALSE(fu.has_gcd_property());

    auto fw = ehr_translated(Q, {Rational(1, 3), Rational(1, 3)});
    CHECK(fw.period() == 6);
    for (long k : {0, 3}) CHECK(fw.constituent(k) == poly({1, 1, 1}));
    for (long k : {1, 5}) CHECK(fw.constituent(k) == poly({Rational(-1, 2), Rational(1, 2), 1}));
    for (long k : {2, 4}) CHECK(fw.constituent(k) == poly({0, Rational(1, 2), 1}));
    CHECK(fw.minimal_period() == 6);
}

TEST_CASE("translated Ehrhart with v = 0 is the plain Ehrhart quasi-polynomial") {
    Polytope T = trapezoid();
    auto f = ehr_translated(T, {Rational(0), Rational(0)});
    CHECK(f.period() == 1);
    CHECK(f.constituent(0L) == poly({1, Rational(5, 2), Rational(3, 2)}));
}

TEST_CASE("assembly equals direct counting beyond the validated range") {
    RandomPolytopes gen(55);
    for (int it = 0; it < 6; ++it) {
        Polytope P = gen.polytope(2, 4 + it % 3, 2, 1);
        RatVec v = gen.point(2, 3, 1);
        long Q = to_long(lcm(P.denominator(), denominator(v)));
        auto f = ehr_translated(P, v);  // internally cross-validated to 2Q
        for (long t = 2 * Q + 1; t <= 3 * Q; ++t)
            CHECK(f.eval(t) == Rational(count(P, scale(Rational(Int(t)), v), Int(t))));
    }
}

TEST_CASE("dilation rescale identity") {
    // ehr_{qP+qv}(s) = ehr_{P+v}(q s): the q-dilated translate's quasi-polynomial
    // is the argument-rescaled one.
    Polytope Q = rhombus();
    RatVec v{Rational(1, 8), Rational(1, 8)};
    std::vector<RatVec> doubled;
    for (const auto& x : Q.vertices()) doubled.push_back(scale(Rational(2), x));
    Polytope Q2 = Polytope::from_vertices(doubled);
    auto lhs = ehr_translated(Q2, scale(Rational(2), v));
    auto rhs = ehr_translated(Q, v).rescale_argument(2);
    CHECK(lhs == rhs);
}

TEST_CASE("McMullen reciprocity on random data") {
    RandomPolytopes gen(56);
    for (int it = 0; it < 25; ++it) {
        std::size_t d = 1 + it % 3;
        Polytope P = gen.polytope(d, d + 2, 4, 1);
        RatVec v = gen.point(d, 4, 1);
        auto f = tl(P, negate(v));
        long q = to_long(P.denominator());
        for (long t = 1; t <= 3 * q; ++t) {
            Rational rhs = f.eval(Int(-t));
            if (d % 2 == 1) rhs = -rhs;
            CHECK(Rational(count_interior(P, v, Int(t))) == rhs);
        }
    }
}

TEST_CASE("equal delta keys give equal TL (fuzzed)") {
    Polytope Q = rhombus();
    std::map<CellKey, QuasiPolynomial> seen;
    for (long i = 0; i < 12; ++i)
        for (long j = 0; j < 12; ++j) {
            RatVec v{Rational(i, 12), Rational(j, 12)};
            auto key = delta_key(Q, v);
            auto f = tl(Q, v);
            auto it = seen.find(key);
            if (it == seen.end())
                seen.emplace(key, f);
            else
                CHECK(it->second == f);
        }
}

TEST_CASE("constituents have degree d and leading coefficient vol(P)") {
    RandomPolytopes gen(57);
    for (int it = 0; it < 12; ++it) {
        std::size_t d = 1 + it % 3;
        Polytope P = gen.polytope(d, d + 2, d == 3 ? 2 : 3, 1);
        RatVec v = gen.point(d, 3, 1);
        auto f = tl(P, v);
        for (long k = 0; k < f.period(); ++k) {
            CHECK(f.constituent(k).degree() == d);
            CHECK(f.constituent(k).leading_coefficient() == P.volume());
        }
    }
}

TEST_CASE("cube enumerators") {
    Polytope cube = Polytope::from_vertices({rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}),
                                             rv({0, 0, 1}), rv({1, 1, 0}), rv({1, 0, 1}),
                                             rv({0, 1, 1}), rv({1, 1, 1})});
    auto f = tl(cube, {Rational(0), Rational(0), Rational(0)});
    CHECK(f.period() == 1);
    CHECK(f.constituent(0L) == Polynomial({Rational(1), Rational(3), Rational(3), Rational(1)}));
    auto g = tl(cube, {Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    CHECK(g.constituent(0L) == Polynomial({Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(g.constituent(0L).leading_coefficient() == cube.volume());
}

TEST_CASE("four-dimensional counting and fitting") {
    std::vector<RatVec> verts;
    for (int mask = 0; mask < 16; ++mask) {
        RatVec v(4);
        for (int j = 0; j < 4; ++j) v[j] = Rational((mask >> j) & 1);
        verts.push_back(v);
    }
    Polytope cube4 = Polytope::from_vertices(verts);
    CHECK(cube4.volume() == Rational(1));
    CHECK(cube4.facet_count() == 8);
    auto f = tl(cube4, RatVec(4, Rational(0)));
    CHECK(f.constituent(0L) ==
          Polynomial({Rational(1), Rational(4), Rational(6), Rational(4), Rational(1)}));
    auto g = tl(cube4, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
    CHECK(g.constituent(0L) ==
          Polynomial({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("cell table lookups are consistent under concurrent access") {
    Polytope T = trapezoid();
    CellTable shared(T);
    std::vector<std::pair<RatVec, QuasiPolynomial>> expected;
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j < 6; ++j) {
            RatVec v{Rational(i, 6), Rational(j, 6)};
            expected.emplace_back(v, tl(T, v));
        }
    std::vector<std::thread> workers;
    std::vector<int> mismatches(4, 0);
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w]() {
            for (std::size_t i = w; i < expected.size(); i += 2) {
                if (!(shared.tl_for_point(expected[i].first) == expected[i].second))
                    ++mismatches[w];
            }
        });
    for (auto& th : workers) th.join();
    for (int m : mismatches) CHECK(m == 0);
    CHECK(shared.size() == 6);  // one entry per cell of the trapezoid
}

TEST_CASE("constituent universe of the trapezoid") {
    auto u = constituent_universe(trapezoid());
    std::set<Polynomial> expect{
        poly({1, Rational(5, 2), Rational(3, 2)}),
        poly({0, Rational(3, 2), Rational(3, 2)}),
        poly({0, Rational(1, 2), Rational(3, 2)}),
        poly({0, Rational(-1, 2), Rational(3, 2)}),
    };
    CHECK(u == expect);
}

TEST_CASE("constituent universe of the unit segment") {
    auto u = constituent_universe(unit_segment());
    CHECK(u == std::set<Polynomial>{poly({1, 1}), poly({0, 1})});
}

TEST_CASE("rhombus constituent universe has 8 polynomials") {
    CHECK(constituent_universe(rhombus()).size() == 8);
}

TEST_CASE("universe is stable under grid refinement") {
    Polytope T = trapezoid();
    auto universe = constituent_universe(T);
    for (long den : {12L, 24L}) {
        std::set<Polynomial> grid;
        CellTable table(T);
        for (long i = 0; i < den; ++i)
            for (long j = 0; j < den; ++j) {
                const auto& f = table.tl_for_point({Rational(i, den), Rational(j, den)});
                for (long k = 0; k < f.period(); ++k) grid.insert(f.constituent(k));
            }
        CHECK(grid == universe);
    }
}
