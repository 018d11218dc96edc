#include "doctest.h"
#include "metakit/intlinalg.hpp"

#include <random>

using namespace metakit;

TEST_CASE("determinants") {
    CHECK(mat_det({{2}}) == 2);
    CHECK(mat_det({{2, -1}, {-1, 2}}) == 3);
    CHECK(mat_det({{1, 2}, {2, 4}}) == 0);
    CHECK(mat_det({{0, 1}, {1, 0}}) == -1);
    CHECK(mat_det({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("unimodular inverse") {
    IntMat a{{1, 2}, {1, 3}};
    IntMat inv = unimodular_inverse(a);
    CHECK(mat_mul(a, inv) == identity_matrix(2));
    CHECK(mat_mul(inv, a) == identity_matrix(2));
    CHECK_THROWS(unimodular_inverse(IntMat{{2, 0}, {0, 1}}));
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        IntMat a(static_cast<std::size_t>(rows), IntVec(static_cast<std::size_t>(cols)));
        for (auto& row : a)
            for (auto& x : row) x = d(rng);
        SmithResult r = smith_normal_form(a);
        CHECK(mat_mul(mat_mul(r.u, a), r.v) == r.s);
        std::int64_t du = mat_det(r.u), dv = mat_det(r.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        std::int64_t prev = -1;
        for (int i = 0; i < rows && i < cols; ++i) {
            std::int64_t s = r.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
            CHECK(s >= 0);
            if (prev > 0) CHECK((s == 0 || s % prev == 0));
            prev = s;
            for (int j = 0; j < cols; ++j)
                if (j != i) CHECK(r.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0);
        }
    }
}

TEST_CASE("hnf column basis and membership") {
    // lattice 3Z in Z
    auto basis = hnf_column_basis(1, {{6}, {9}});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == IntVec{3});
    CHECK(in_lattice(basis, {6}));
    CHECK(!in_lattice(basis, {4}));

    // full Z^2 from redundant generators
    auto b2 = hnf_column_basis(2, {{1, 0}, {0, 1}, {5, 7}});
    REQUIRE(b2.size() == 2);
    CHECK(in_lattice(b2, {123, -456}));

    // rank-1 sublattice of Z^2
    auto b3 = hnf_column_basis(2, {{2, 4}, {-2, -4}});
    REQUIRE(b3.size() == 1);
    CHECK(in_lattice(b3, {2, 4}));
    CHECK(in_lattice(b3, {-4, -8}));
    CHECK(!in_lattice(b3, {2, 3}));
    CHECK(!in_lattice(b3, {1, 2}));

    // canonicity: different generator order gives the same basis
    auto b4 = hnf_column_basis(2, {{5, 7}, {0, 1}, {1, 0}});
    CHECK(b2 == b4);
}

TEST_CASE("rational solve") {
    auto sol = solve_rational({{2, 0}, {1, 1}}, {4, 3});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(1, 2));
    CHECK((*sol)[1] == Rational(3));
    CHECK(!solve_rational({{1, 2}}, {1, 3}).has_value());
    auto z = solve_rational({{1, 0}}, {0, 0});
    REQUIRE(z.has_value());
    CHECK((*z)[0].is_zero());
}
