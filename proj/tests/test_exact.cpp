#include <doctest.h>

#include <random>

#include "ehrhart/exact.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/linalg.hpp"

using namespace ehr;

TEST_CASE("rational canonical form and arithmetic") {
    Rational a(Int(2), Int(-4));
    CHECK(a.num() == -1);
    CHECK(a.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK((Rational(1, 3) / Rational(1, 6)) == Rational(2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-6, 3).str() == "-2");
    CHECK(Rational::parse("17/100") == Rational(17, 100));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
    CHECK_THROWS_AS(Rational::parse("x"), parse_error);
}

TEST_CASE("rational ceil and floor") {
    CHECK(Rational(17, 100).ceil() == 1);
    CHECK(Rational(-1, 2).ceil() == 0);
    CHECK(Rational(3).ceil() == 3);
    CHECK(Rational(-1, 2).floor() == -1);
    CHECK(Rational(7, 2).floor() == 3);

    // x <= ceil(x) < x + 1 and ceil(x) = -floor(-x), over a small grid
    for (long n = -30; n <= 30; ++n)
        for (long d = 1; d <= 7; ++d) {
            Rational x(n, d);
            Int c = x.ceil();
            CHECK(x <= Rational(c));
            CHECK(Rational(c) < x + Rational(1));
            CHECK(c == -((-x).floor()));
        }
}

TEST_CASE("primitive vectors") {
    CHECK(primitive({Int(2), Int(-4)}) == IntVec{Int(1), Int(-2)});
    CHECK(primitive({Int(1), Int(0)}) == IntVec{Int(1), Int(0)});
    CHECK(primitive({Int(0), Int(-3), Int(6)}) == IntVec{Int(0), Int(-1), Int(2)});
    CHECK_THROWS_AS(primitive({Int(0), Int(0)}), precondition_error);
}

TEST_CASE("hnf basics") {
    auto L = hnf({{Int(2), Int(0)}, {Int(0), Int(2)}}, 2);
    CHECK(L.rank() == 2);
    CHECK(L.hnf_rows() == std::vector<IntVec>{{Int(2), Int(0)}, {Int(0), Int(2)}});

    auto L2 = hnf({{Int(1), Int(2)}, {Int(0), Int(0)}}, 2);
    CHECK(L2.rank() == 1);
    CHECK(L2.hnf_rows() == std::vector<IntVec>{{Int(1), Int(2)}});

    // columns of the trapezoid normal matrix: generators (1,0,0,-1), (0,1,-1,1)
    auto L3 = hnf({{Int(1), Int(0), Int(0), Int(-1)}, {Int(0), Int(1), Int(-1), Int(1)}}, 4);
    CHECK(L3.rank() == 2);
    CHECK(L3.pivot_columns() == std::vector<std::size_t>{0, 1});
    CHECK(L3.hnf_rows()[0] == IntVec{Int(1), Int(0), Int(0), Int(-1)});
    CHECK(L3.hnf_rows()[1] == IntVec{Int(0), Int(1), Int(-1), Int(1)});
}

TEST_CASE("hnf reduces its own generators to zero") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> pick(-9, 9);
    for (int it = 0; it < 50; ++it) {
        std::size_t dim = 2 + it % 4;
        std::size_t n = 1 + it % 5;
        std::vector<IntVec> gens(n, IntVec(dim));
        for (auto& g : gens)
            for (auto& x : g) x = pick(rng);
        auto L = hnf(gens, dim);
        for (const auto& g : gens) CHECK(L.contains(g));
        for (std::size_t i = 0; i < L.rank(); ++i) {
            CHECK(L.hnf_rows()[i][L.pivot_columns()[i]] > 0);
            for (std::size_t r = 0; r < i; ++r) {
                const Int& e = L.hnf_rows()[r][L.pivot_columns()[i]];
                CHECK(e >= 0);
                CHECK(e < L.hnf_rows()[i][L.pivot_columns()[i]]);
            }
        }
    }
}

TEST_CASE("canonical coset representatives") {
    auto L = hnf({{Int(2), Int(0)}}, 2);
    CHECK(L.canonical_coset_rep({Int(5), Int(0)}) == IntVec{Int(1), Int(0)});
    CHECK(L.canonical_coset_rep({Int(0), Int(0)}) == IntVec{Int(0), Int(0)});

    // idempotent and constant on cosets, with coefficient bookkeeping exact
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> pick(-9, 9);
    for (int it = 0; it < 100; ++it) {
        std::size_t dim = 2 + it % 3;
        std::vector<IntVec> gens(2, IntVec(dim));
        for (auto& g : gens)
            for (auto& x : g) x = pick(rng);
        auto L2 = hnf(gens, dim);
        IntVec c(dim);
        for (auto& x : c) x = pick(rng);
        auto red = L2.reduce(c);
        CHECK(L2.canonical_coset_rep(red.representative) == red.representative);
        // c - rep equals the recorded combination of generators
        IntVec back = c;
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t j = 0; j < dim; ++j)
                back[j] -= red.generator_coeffs[g] * gens[g][j];
        CHECK(back == red.representative);
        // shifting by any generator leaves the representative unchanged
        for (const auto& g : gens) {
            IntVec shifted = c;
            for (std::size_t j = 0; j < dim; ++j) shifted[j] += g[j];
            CHECK(L2.canonical_coset_rep(shifted) == red.representative);
        }
    }
}

TEST_CASE("hnf is canonical: invariant under generator presentation") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> pick(-6, 6);
    std::uniform_int_distribution<long> small(-2, 2);
    for (int it = 0; it < 60; ++it) {
        std::size_t dim = 2 + it % 3;
        std::size_t n = 2 + it % 3;
        std::vector<IntVec> gens(n, IntVec(dim));
        for (auto& g : gens)
            for (auto& x : g) x = pick(rng);
        // same lattice, different presentation: shuffle, add row multiples,
        // append a Z-combination of the generators
        std::vector<IntVec> alt = gens;
        std::swap(alt[0], alt[n - 1]);
        for (std::size_t j = 0; j < dim; ++j) alt[0][j] += 3 * alt[n - 1][j];
        IntVec combo(dim, Int(0));
        for (const auto& g : gens) {
            long c = small(rng);
            for (std::size_t j = 0; j < dim; ++j) combo[j] += c * g[j];
        }
        alt.push_back(combo);
        auto L1 = hnf(gens, dim);
        auto L2 = hnf(alt, dim);
        CHECK(L1.hnf_rows() == L2.hnf_rows());
        CHECK(L1.pivot_columns() == L2.pivot_columns());
    }
}

TEST_CASE("unimodular completion") {
    for (IntVec a : {IntVec{Int(0), Int(-1)}, IntVec{Int(-1), Int(1)}, IntVec{Int(3), Int(5)},
                     IntVec{Int(2), Int(3), Int(7)}, IntVec{Int(1), Int(0), Int(0)}}) {
        auto U = unimodular_with_first_row(a);
        CHECK(U[0] == a);
        Int d = det(U);
        CHECK((d == 1 || d == -1));
    }
    CHECK_THROWS_AS(unimodular_with_first_row({Int(2), Int(4)}), precondition_error);
}

TEST_CASE("rational rank and determinant") {
    RatMatrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rank(m) == 1);
    CHECK(det(RatMatrix{{Rational(2), Rational(0)}, {Rational(0), Rational(3)}}) == Rational(6));
    CHECK(det(RatMatrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == Rational(-1));
}
