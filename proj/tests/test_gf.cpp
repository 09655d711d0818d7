#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmp.h>

#include <random>
#include <stdexcept>

#include "lmc/gf.hpp"

using namespace lmc;

namespace {

// Exact big-integer binomial parity, independent of the Lucas shortcut.
int binom_parity_exact(unsigned long a, unsigned long b) {
    mpz_t v;
    mpz_init(v);
    mpz_bin_uiui(v, a, b);
    const int odd = mpz_odd_p(v) ? 1 : 0;
    mpz_clear(v);
    return odd;
}

}  // namespace

TEST_CASE("context construction and validation") {
    for (int ell = 1; ell <= 16; ++ell) {
        FieldContext F(ell);
        CHECK(F.ell() == ell);
        CHECK(F.order() == (1u << ell));
        CHECK(F.elem_bytes() == (ell + 7) / 8);
    }
    CHECK_THROWS_AS(FieldContext(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(17), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(4).elem(16), std::invalid_argument);
}

TEST_CASE("addition is xor") {
    FieldContext F(2);
    for (std::uint32_t y = 0; y < 4; ++y) {
        CHECK(F.add(F.zero(), F.elem(y)) == F.elem(y));
        CHECK(F.add(F.elem(y), F.elem(y)) == F.zero());
    }
    CHECK(F.add(F.elem(1), F.elem(2)) == F.elem(3));
}

TEST_CASE("multiplication, inverse, pow") {
    FieldContext F(2);  // modulus x^2 + x + 1
    for (std::uint32_t y = 0; y < 4; ++y) {
        CHECK(F.mul(F.one(), F.elem(y)) == F.elem(y));
    }
    // x * x = x + 1 after reduction by the modulus
    CHECK(F.mul(F.elem(2), F.elem(2)) == F.elem(3));

    for (int ell : {1, 2, 3, 4}) {
        FieldContext G(ell);
        for (std::uint32_t x = 1; x < G.order(); ++x) {
            CHECK(G.pow(G.elem(x), G.order() - 1) == G.one());
        }
    }
    CHECK(F.pow(F.zero(), 0) == F.one());  // 0^0 = 1
    CHECK(F.pow(F.zero(), 5) == F.zero());
    CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
}

TEST_CASE("inverse law exhaustive for ell <= 8") {
    for (int ell = 1; ell <= 8; ++ell) {
        FieldContext F(ell);
        for (std::uint32_t x = 1; x < F.order(); ++x) {
            CHECK(F.mul(F.elem(x), F.inv(F.elem(x))) == F.one());
        }
    }
}

TEST_CASE("distributivity") {
    for (int ell = 1; ell <= 4; ++ell) {
        FieldContext F(ell);
        for (std::uint32_t x = 0; x < F.order(); ++x) {
            for (std::uint32_t y = 0; y < F.order(); ++y) {
                for (std::uint32_t z = 0; z < F.order(); ++z) {
                    const FieldElem ex = F.elem(x), ey = F.elem(y),
                                    ez = F.elem(z);
                    CHECK(F.mul(ex, F.add(ey, ez)) ==
                          F.add(F.mul(ex, ey), F.mul(ex, ez)));
                }
            }
        }
    }
    std::mt19937_64 rng(5);
    for (int ell : {8, 12, 16}) {
        FieldContext F(ell);
        for (int trial = 0; trial < 5000; ++trial) {
            const FieldElem x = F.elem(rng() % F.order());
            const FieldElem y = F.elem(rng() % F.order());
            const FieldElem z = F.elem(rng() % F.order());
            CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        }
    }
}

TEST_CASE("digitwise dominance") {
    CHECK(leq2(5, 7, 3));
    CHECK_FALSE(leq2(2, 1, 2));
    CHECK(leq2(6, 2, 2));  // both reduce to 2 mod 4
    CHECK(leq2(-1, 7, 3)); // -1 reduces to 7 mod 8
    CHECK(leq2(0, 0, 4));
    CHECK_FALSE(leq2(8, 7, 4));
}

TEST_CASE("binomial parity") {
    CHECK(binom_mod2(3, 1) == 1);
    CHECK(binom_mod2(2, 1) == 0);
    CHECK(binom_mod2(5, 4) == 1);
    CHECK(binom_mod2(0, 0) == 1);
    CHECK(binom_mod2(1, 2) == 0);  // b > a

    for (unsigned long a = 0; a <= 255; ++a) {
        for (unsigned long b = 0; b <= 255; ++b) {
            CHECK(binom_mod2(a, b) == binom_parity_exact(a, b));
        }
    }
}
