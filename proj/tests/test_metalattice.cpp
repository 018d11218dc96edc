#include "doctest.h"
#include "metakit/metalattice.hpp"

using namespace metakit;

namespace {

MetaplecticDatum sl2_md(std::int64_t q_alpha, std::int64_t n) {
    return MetaplecticDatum(RootDatum(1, {{1}}, {{2}}), BilinearForm(IntMat{{2 * q_alpha}}), n);
}

MetaplecticDatum sl3_md(std::int64_t n) {
    return MetaplecticDatum(RootDatum(2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}),
                            BilinearForm(IntMat{{2, -1}, {-1, 2}}), n);
}

MetaplecticDatum sp4_md(std::int64_t n) {
    return MetaplecticDatum(RootDatum(2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}),
                            BilinearForm(IntMat{{2, 0}, {0, 2}}), n);
}

}  // namespace

TEST_CASE("n_alpha") {
    CHECK(n_alpha(1, 3) == 3);
    CHECK(n_alpha(2, 4) == 2);
    CHECK(n_alpha(3, 6) == 2);
    CHECK(n_alpha(0, 5) == 1);
    CHECK(n_alpha(-2, 4) == 2);
    CHECK_THROWS_AS(n_alpha(1, 0), InputError);
}

TEST_CASE("lambda lattice sl2") {
    CHECK(lambda_lattice(BilinearForm(IntMat{{2}}), 3) == std::vector<IntVec>({{3}}));
    CHECK(lambda_lattice(BilinearForm(IntMat{{2}}), 2) == std::vector<IntVec>({{1}}));
    CHECK(lambda_lattice(BilinearForm(IntMat{{2}}), 1) == std::vector<IntVec>({{1}}));
    CHECK(lambda_lattice(BilinearForm(IntMat{{6}}), 9) == std::vector<IntVec>({{3}}));
    // oracle: brute-force congruence check over a window
    for (std::int64_t n : {2, 3, 4, 5, 6, 9}) {
        auto basis = lambda_lattice(BilinearForm(IntMat{{2}}), n);
        for (std::int64_t m = -20; m <= 20; ++m) {
            bool in = (2 * m) % n == 0;
            CHECK(in_lattice(basis, {m}) == in);
        }
    }
}

TEST_CASE("lambda lattice rank two brute force oracle") {
    for (std::int64_t n : {2, 3, 4}) {
        BilinearForm b({{2, -1}, {-1, 2}});
        auto basis = lambda_lattice(b, n);
        for (std::int64_t x = -8; x <= 8; ++x)
            for (std::int64_t y = -8; y <= 8; ++y) {
                bool in = ((2 * x - y) % n == 0) && ((-x + 2 * y) % n == 0);
                CHECK(in_lattice(basis, {x, y}) == in);
            }
    }
}

TEST_CASE("metaplectic datum invariants") {
    MetaplecticDatum md = sl2_md(1, 3);
    CHECK(md.n_of({1}) == 3);
    CHECK(md.lattice_index() == 3);
    CHECK(md.in_lambda({3}));
    CHECK(!md.in_lambda({1}));
    CHECK(heisenberg_dimensions(md) == std::pair<std::int64_t, std::int64_t>(3, 3));

    MetaplecticDatum md2 = sl2_md(1, 2);
    CHECK(md2.lattice_index() == 1);
    CHECK(heisenberg_dimensions(md2) == std::pair<std::int64_t, std::int64_t>(1, 1));

    MetaplecticDatum md1 = sl2_md(1, 1);
    CHECK(md1.lattice_index() == 1);
}

TEST_CASE("weyl stability of lambda") {
    for (auto md : {sl3_md(3), sp4_md(2)}) {
        const WeylGroup& w = md.weyl();
        for (int wi = 0; wi < w.size(); ++wi)
            for (const auto& col : md.lambda_basis())
                CHECK(md.in_lambda(mat_vec(w.element(wi), col)));
    }
}

TEST_CASE("Q divides B(alpha, y)") {
    for (auto md : {sl2_md(1, 3), sl2_md(3, 9), sl3_md(3), sp4_md(2)}) {
        int r = md.datum().rank();
        for (const auto& e : md.coroots()) {
            std::int64_t q = md.q_of(e.coroot);
            for (int j = 0; j < r; ++j) {
                IntVec ej(static_cast<std::size_t>(r), 0);
                ej[static_cast<std::size_t>(j)] = 1;
                CHECK(md.form().apply(e.coroot, ej) % q == 0);
            }
        }
    }
}

TEST_CASE("lambda sandwich on the coroot line") {
    for (auto md : {sl2_md(1, 3), sl2_md(1, 4), sl3_md(3), sp4_md(2), sl2_md(3, 6)}) {
        for (const auto& e : md.coroots()) {
            if (e.sign < 0) continue;
            std::int64_t na = md.n_of(e.coroot);
            // n_a * a in Lambda
            IntVec big = e.coroot;
            for (auto& c : big) c *= na;
            CHECK(md.in_lambda(big));
            // anything in Lambda on the line Q*a is a multiple of (n_a/2)*a:
            // scan small rational multiples (k/2) a for k = 1 .. 2 n_a
            for (std::int64_t k = 1; k < 2 * na; ++k) {
                bool integral = true;
                IntVec v(e.coroot.size());
                for (std::size_t i = 0; i < v.size(); ++i) {
                    std::int64_t num = k * e.coroot[i];
                    if (num % 2 != 0) integral = false;
                    v[i] = num / 2;
                }
                if (!integral) continue;
                if (md.in_lambda(v)) {
                    // sandwich: multiple of n_a/2
                    CHECK(k % na == 0);
                }
            }
        }
    }
}

TEST_CASE("pairing of Lambda against alpha^vee lands in n_a Z") {
    for (auto md : {sl2_md(1, 3), sl3_md(3), sp4_md(2), sl2_md(3, 9)}) {
        for (const auto& e : md.coroots()) {
            std::int64_t na = md.n_of(e.coroot);
            for (const auto& col : md.lambda_basis())
                CHECK(pairing(e.root, col) % na == 0);
        }
    }
}

TEST_CASE("dual root datum sl2") {
    MetaplecticDatum md = sl2_md(1, 3);
    DualRootDatum dual = dual_root_datum(md);
    REQUIRE(dual.lambda_basis.size() == 1);
    CHECK(dual.lambda_basis[0] == IntVec{3});
    REQUIRE(dual.phi.size() == 2);
    CHECK(dual.phi[0] == IntVec{3});
    CHECK(dual.phi_dual[0] == std::vector<Rational>{Rational(2, 3)});
    // pairing <alpha^vee/3, 3 alpha> = 2
    CHECK(dual.phi_dual_pairings[0] == IntVec{2});
    CHECK(dual_cartan(md) == IntMat{{2}});
}

TEST_CASE("dual root datum n=1 recovers langlands dual") {
    MetaplecticDatum md = sl2_md(1, 1);
    DualRootDatum dual = dual_root_datum(md);
    CHECK(dual.lambda_basis[0] == IntVec{1});
    CHECK(dual.phi[0] == IntVec{1});
    CHECK(dual.phi_dual[0] == std::vector<Rational>{Rational(2)});
    // dual of sl2 datum (coroot 1, root 2) is the pgl2 shape with roles kept
    CHECK(dual_cartan(md) == IntMat{{2}});

    MetaplecticDatum sp = sp4_md(1);
    IntMat dc = dual_cartan(sp);
    // rank-2 symplectic type: <root_i, coroot_j> gives [[2,-1],[-2,2]], and
    // the n=1 dual swaps the roles of the two lengths, i.e. the transpose
    CHECK(dc == IntMat{{2, -2}, {-1, 2}});
}

TEST_CASE("dual root datum sl3 n=3") {
    MetaplecticDatum md = sl3_md(3);
    DualRootDatum dual = dual_root_datum(md);
    CHECK(dual.phi.size() == 6);
    for (std::size_t i = 0; i < dual.phi.size(); ++i) {
        CHECK(md.in_lambda(dual.phi[i]));
        // <phi_dual, phi> = 2
        Rational p(0);
        for (std::size_t k = 0; k < dual.phi[i].size(); ++k)
            p += dual.phi_dual[i][k] * Rational(dual.phi[i][k]);
        CHECK(p == Rational(2));
    }
    CHECK(dual_cartan(md) == IntMat{{2, -1}, {-1, 2}});
}

TEST_CASE("dual data coincide for (n=3,Q=1) and (n=9,Q=3)") {
    MetaplecticDatum a = sl2_md(1, 3);
    MetaplecticDatum b = sl2_md(3, 9);
    DualRootDatum da = dual_root_datum(a);
    DualRootDatum db = dual_root_datum(b);
    CHECK(da.lambda_basis == db.lambda_basis);
    CHECK(da.phi == db.phi);
    CHECK(da.phi_dual == db.phi_dual);
    CHECK(a.n_of({1}) == 3);
    CHECK(b.n_of({1}) == 3);
}

TEST_CASE("dominant lambda") {
    MetaplecticDatum md = sl2_md(1, 3);
    CHECK(dominant_lambda(md, 7) == std::vector<IntVec>({{0}, {3}, {6}}));
    CHECK(dominant_lambda(md, 0) == std::vector<IntVec>({{0}}));
    MetaplecticDatum md2 = sl2_md(1, 2);
    CHECK(dominant_lambda(md2, 5) == std::vector<IntVec>({{0}, {1}, {2}, {3}, {4}, {5}}));
    MetaplecticDatum md4 = sl2_md(1, 4);
    CHECK(dominant_lambda(md4, 5) == std::vector<IntVec>({{0}, {2}, {4}}));
}

TEST_CASE("rho dual pairing") {
    MetaplecticDatum md = sl2_md(1, 3);
    CHECK(rho_dual_pairing(md, {0}) == 0);
    // rho^vee = alpha^vee/6, <rho^vee, 3 alpha> = 1, v-exponent 2
    CHECK(rho_dual_pairing(md, {3}) == 2);
    CHECK_THROWS(rho_dual_pairing(md, {1}));
    MetaplecticDatum md1 = sl2_md(1, 1);
    CHECK(rho_dual_pairing(md1, {1}) == 2);  // classical <rho^vee, alpha> = 1
}
