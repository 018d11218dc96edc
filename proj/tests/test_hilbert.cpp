#include "doctest.h"
#include "metakit/hilbert.hpp"

#include <random>

using namespace metakit;

namespace {

LaurentNumber random_nonzero(const PrimeField& F, std::mt19937& rng) {
    std::uniform_int_distribution<int> vd(-4, 4), cd(0, F.q() - 1);
    std::vector<int> cs(5);
    cs[0] = 1 + cd(rng) % (F.q() - 1);
    for (std::size_t i = 1; i < cs.size(); ++i) cs[i] = cd(rng);
    return LaurentNumber(&F, vd(rng), cs, 5);
}

}  // namespace

TEST_CASE("hilbert symbol base cases") {
    PrimeField F(7);
    LaurentNumber t = parse_laurent(F, "t");
    // units pair trivially
    CHECK(hilbert_symbol(parse_laurent(F, "3"), parse_laurent(F, "5"), 3).is_identity());
    // (pi^a, pi^b) = 1 whenever 2m | q-1
    CHECK(hilbert_symbol(t, t * t, 3).is_identity());
    CHECK(hilbert_symbol(t, t, 3).is_identity());
    // (t, 3 + O(t)): formula gives 1/3 = 5 mod 7, and 5 = g-power with dlog 5 mod 3 = 2
    MuElement z = hilbert_symbol(t, parse_laurent(F, "3 + O(t)"), 3);
    CHECK(z == unit_to_mu(F, F.inv(3), 3));
    // direct evaluation oracle: value is (1/3)^{(q-1)/m} = 5^2 = 4 mod 7
    CHECK(z.value_in(F) == 4);
}

TEST_CASE("hilbert symbol errors") {
    PrimeField F(7), G(13);
    CHECK_THROWS(hilbert_symbol(LaurentNumber::zero(F), LaurentNumber::one(F), 3));
    CHECK_THROWS(hilbert_symbol(LaurentNumber::one(F), LaurentNumber::one(G), 3));
    CHECK_THROWS(hilbert_symbol(LaurentNumber::one(F), LaurentNumber::one(F), 4));
}

TEST_CASE("hilbert symbol bilinearity and inversions") {
    std::mt19937 rng(99);
    for (auto [q, m] : std::vector<std::pair<int, int>>{{7, 2}, {7, 3}, {13, 2}, {13, 3}, {13, 6}}) {
        PrimeField F(q);
        for (int trial = 0; trial < 200; ++trial) {
            LaurentNumber a = random_nonzero(F, rng);
            LaurentNumber b = random_nonzero(F, rng);
            LaurentNumber c = random_nonzero(F, rng);
            CHECK(hilbert_symbol(a * b, c, m) == hilbert_symbol(a, c, m) * hilbert_symbol(b, c, m));
            CHECK(hilbert_symbol(a, b * c, m) == hilbert_symbol(a, b, m) * hilbert_symbol(a, c, m));
            CHECK((hilbert_symbol(a, b, m) * hilbert_symbol(b, a, m)).is_identity());
            CHECK(hilbert_symbol(a, -a, m).is_identity());
        }
    }
}

TEST_CASE("steinberg relation (t, 1-t)") {
    std::mt19937 rng(3);
    for (auto [q, m] : std::vector<std::pair<int, int>>{{7, 3}, {13, 6}}) {
        PrimeField F(q);
        for (int trial = 0; trial < 100; ++trial) {
            LaurentNumber a = random_nonzero(F, rng);
            LaurentNumber one_minus = LaurentNumber::one(F) - a;
            if (one_minus.is_zero()) continue;
            CHECK(hilbert_symbol(a, one_minus, m).is_identity());
        }
    }
}

TEST_CASE("(-1, x) trivial when 2m | q-1") {
    PrimeField F(13);
    std::mt19937 rng(5);
    LaurentNumber minus_one = -LaurentNumber::one(F);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentNumber x = random_nonzero(F, rng);
        CHECK(hilbert_symbol(minus_one, x, 6).is_identity());
        CHECK(hilbert_symbol(minus_one, x, 3).is_identity());
    }
}

TEST_CASE("triviality on units and double-order compatibility") {
    PrimeField F(13);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentNumber a = random_nonzero(F, rng);
        LaurentNumber b = random_nonzero(F, rng);
        if (a.valuation() == 0 && b.valuation() == 0)
            CHECK(hilbert_symbol(a, b, 6).is_identity());
        // (a,b)_{2n}^{2k} = (a,b)_n^k as exponent identity, n = 3
        MuElement big = hilbert_symbol(a, b, 6);
        MuElement small = hilbert_symbol(a, b, 3);
        for (int k = 0; k < 5; ++k)
            CHECK(big.pow(2 * k) == small.pow(k).embed_double());
    }
}
