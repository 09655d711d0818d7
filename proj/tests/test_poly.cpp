#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lmc/gf.hpp"
#include "lmc/poly.hpp"

using namespace lmc;

namespace {

UniPoly random_uni(const FieldContext& F, std::mt19937_64& rng, int max_deg) {
    std::vector<FieldElem> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& v : c) v = FieldElem{static_cast<std::uint16_t>(rng() % F.order())};
    return UniPoly(std::move(c));
}

// Long-division remainder oracle: A mod (X^q - X)^r for any r >= 1, kept
// independent of the power-of-two shortcut in reduce_canonical.
UniPoly divmod_oracle(const FieldContext& F, const UniPoly& a, int q, int r) {
    UniPoly divisor = UniPoly::monomial(0, F.one());
    const UniPoly base =
        uni_add(UniPoly::monomial(q, F.one()), UniPoly::monomial(1, F.one()));
    for (int k = 0; k < r; ++k) divisor = uni_mul(F, divisor, base);

    UniPoly rem = a;
    while (rem.degree() >= divisor.degree()) {
        const int shift = rem.degree() - divisor.degree();
        const FieldElem factor =
            F.mul(rem.coeff(rem.degree()), F.inv(divisor.coeff(divisor.degree())));
        UniPoly sub = uni_mul(F, divisor, UniPoly::monomial(shift, factor));
        rem = uni_add(rem, sub);  // characteristic 2: add is subtract
    }
    return rem;
}

UniPoly xq_minus_x_pow(const FieldContext& F, int q, int r) {
    UniPoly acc = UniPoly::monomial(0, F.one());
    const UniPoly base =
        uni_add(UniPoly::monomial(q, F.one()), UniPoly::monomial(1, F.one()));
    for (int k = 0; k < r; ++k) acc = uni_mul(F, acc, base);
    return acc;
}

}  // namespace

TEST_CASE("derivative index layout") {
    const auto order2 = deriv_order(2);
    REQUIRE(order2.size() == 3);
    CHECK(order2[0] == MultiIndex{0, 0});
    CHECK(order2[1] == MultiIndex{1, 0});
    CHECK(order2[2] == MultiIndex{0, 1});

    const auto order4 = deriv_order(4);
    REQUIRE(order4.size() == 10);
    for (std::size_t k = 0; k < order4.size(); ++k) {
        CHECK(deriv_index(order4[k], 4) == static_cast<int>(k));
    }
    CHECK_THROWS_AS(deriv_index(MultiIndex{2, 2}, 4), std::invalid_argument);
}

TEST_CASE("univariate Hasse derivatives") {
    FieldContext F(2);
    std::mt19937_64 rng(3);
    const UniPoly P = random_uni(F, rng, 9);
    CHECK(hasse_uni(P, 0) == P);

    // X^3 -> X under the second derivative (C(3,2) = 3, odd)
    CHECK(hasse_uni(UniPoly::monomial(3, F.one()), 2) ==
          UniPoly::monomial(1, F.one()));
    // X^2 -> 0 under the first derivative (C(2,1) = 2, even)
    CHECK(hasse_uni(UniPoly::monomial(2, F.one()), 1).is_zero());
}

TEST_CASE("bivariate Hasse derivatives") {
    FieldContext F(3);
    std::mt19937_64 rng(4);
    BiPoly P;
    for (int k = 0; k < 8; ++k) {
        P.add_term(static_cast<int>(rng() % 10), static_cast<int>(rng() % 10),
                   FieldElem{static_cast<std::uint16_t>(1 + rng() % 7)});
    }
    CHECK(hasse_bi(P, MultiIndex{0, 0}) == P);

    const BiPoly xy = BiPoly::monomial(1, 1, F.one());
    CHECK(hasse_bi(xy, MultiIndex{1, 1}) == BiPoly::monomial(0, 0, F.one()));

    for (int q : {4, 8}) {
        const BiPoly xqy = BiPoly::monomial(q, 1, F.one());
        CHECK(hasse_bi(xqy, MultiIndex{1, 0}).is_zero());  // C(q,1) even
    }
}

TEST_CASE("derivative vector at a point") {
    FieldContext F(2);
    const FieldElem g = F.elem(2), d = F.elem(3);

    const Symbol zero_sym = eval_derivs(F, BiPoly::zero(), g, d, 2);
    CHECK(zero_sym.derivs == std::vector<FieldElem>{F.zero(), F.zero(), F.zero()});

    const Symbol const_sym =
        eval_derivs(F, BiPoly::monomial(0, 0, F.elem(3)), g, d, 2);
    CHECK(const_sym.derivs == std::vector<FieldElem>{F.elem(3), F.zero(), F.zero()});

    // P = XY: expanding P(g+Z1, d+Z2) gives derivatives (gd, d, g)
    const Symbol xy_sym = eval_derivs(F, BiPoly::monomial(1, 1, F.one()), g, d, 2);
    CHECK(xy_sym.derivs == std::vector<FieldElem>{F.mul(g, d), d, g});
}

TEST_CASE("eval_derivs agrees with derivative-then-evaluate") {
    FieldContext F(3);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        BiPoly P;
        for (int k = 0; k < 6; ++k) {
            P.add_term(static_cast<int>(rng() % 12),
                       static_cast<int>(rng() % 12),
                       FieldElem{static_cast<std::uint16_t>(1 + rng() % 7)});
        }
        const FieldElem x = F.elem(rng() % 8), y = F.elem(rng() % 8);
        const int r = 4;
        const Symbol sym = eval_derivs(F, P, x, y, r);
        for (const MultiIndex idx : deriv_order(r)) {
            CHECK(sym.derivs[static_cast<std::size_t>(deriv_index(idx, r))] ==
                  eval_bi(F, hasse_bi(P, idx), x, y));
        }
    }
}

TEST_CASE("line restriction") {
    FieldContext F(3);
    // Y -> 1 on the line (T, 1)
    CHECK(restrict_to_line(F, BiPoly::monomial(5, 3, F.one()),
                           Line{F.zero(), F.one()}) ==
          UniPoly::monomial(5, F.one()));
    // X^14 Y on (T, T) over q=8 gives T^15
    CHECK(restrict_to_line(F, BiPoly::monomial(14, 1, F.one()),
                           Line{F.one(), F.zero()}) ==
          UniPoly::monomial(15, F.one()));
    // Y restricted to (T, aT + b) is aT + b
    const FieldElem a = F.elem(5), b = F.elem(7);
    CHECK(restrict_to_line(F, BiPoly::monomial(0, 1, F.one()), Line{a, b}) ==
          UniPoly(std::vector<FieldElem>{b, a}));
}

TEST_CASE("line restriction matches pointwise evaluation") {
    FieldContext F(2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        BiPoly P;
        for (int k = 0; k < 5; ++k) {
            P.add_term(static_cast<int>(rng() % 8), static_cast<int>(rng() % 8),
                       FieldElem{static_cast<std::uint16_t>(1 + rng() % 3)});
        }
        const Line line{F.elem(rng() % 4), F.elem(rng() % 4)};
        const UniPoly restricted = restrict_to_line(F, P, line);
        for (std::uint32_t tv = 0; tv < 4; ++tv) {
            const FieldElem t = F.elem(tv);
            const FieldElem y = F.add(F.mul(line.alpha, t), line.beta);
            CHECK(eval_uni(F, restricted, t) == eval_bi(F, P, t, y));
        }
    }
}

TEST_CASE("canonical reduction") {
    FieldContext F(2);
    const int q = 4, r = 2;

    std::mt19937_64 rng(8);
    const UniPoly low = random_uni(F, rng, q * r - 1);
    CHECK(reduce_canonical(low, q, r) == low);

    // X^9 = X * (X^8 + X^2) + X^3
    CHECK(reduce_canonical(UniPoly::monomial(9, F.one()), q, r) ==
          UniPoly::monomial(3, F.one()));

    CHECK(reduce_canonical(xq_minus_x_pow(F, q, r), q, r).is_zero());

    // matches the long-division oracle on random input
    for (int trial = 0; trial < 50; ++trial) {
        const UniPoly A = random_uni(F, rng, 25);
        CHECK(reduce_canonical(A, q, r) == divmod_oracle(F, A, q, r));
    }
    FieldContext G(3);
    for (int trial = 0; trial < 50; ++trial) {
        const UniPoly A = random_uni(G, rng, 40);
        CHECK(reduce_canonical(A, 8, 4) == divmod_oracle(G, A, 8, 4));
    }
}

TEST_CASE("order-r equivalence") {
    FieldContext F(2);
    const int q = 4, r = 2;
    std::mt19937_64 rng(9);
    const UniPoly A = random_uni(F, rng, 11);
    CHECK(equiv_up_to_order(A, A, q, r));
    CHECK(equiv_up_to_order(uni_add(A, xq_minus_x_pow(F, q, r)), A, q, r));
    CHECK(equiv_up_to_order(UniPoly::monomial(q * r, F.one()),
                            UniPoly::monomial(r, F.one()), q, r));

    // equivalence holds exactly when all low-order derivatives agree at
    // every field point
    for (int trial = 0; trial < 40; ++trial) {
        const UniPoly X = random_uni(F, rng, 11);
        const UniPoly Y = random_uni(F, rng, 11);
        bool same_derivs = true;
        for (std::uint32_t gv = 0; gv < 4 && same_derivs; ++gv) {
            for (int i = 0; i < r && same_derivs; ++i) {
                same_derivs = eval_uni(F, hasse_uni(X, i), F.elem(gv)) ==
                              eval_uni(F, hasse_uni(Y, i), F.elem(gv));
            }
        }
        CHECK(equiv_up_to_order(X, Y, q, r) == same_derivs);
    }
}

TEST_CASE("derivatives of (X^q - X)^r") {
    for (int q : {4, 8}) {
        FieldContext F(q == 4 ? 2 : 3);
        for (int r : {1, 2, 4}) {
            const UniPoly P = xq_minus_x_pow(F, q, r);
            for (int i = 0; i <= r; ++i) {
                const UniPoly expect =
                    binom_mod2(static_cast<std::uint64_t>(r),
                               static_cast<std::uint64_t>(i))
                        ? xq_minus_x_pow(F, q, r - i)
                        : UniPoly::zero();
                CHECK(hasse_uni(P, i) == expect);
            }
            for (int i = r + 1; i < q; ++i) {
                CHECK(hasse_uni(P, i).is_zero());
            }
        }
    }
}

TEST_CASE("coefficient window is stable under reduction") {
    FieldContext F(2);
    const int q = 4, r = 2;
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        const UniPoly A = random_uni(F, rng, 13);
        const UniPoly B = reduce_canonical(A, q, r);
        for (int a = A.degree() - (q * r - r) + 1; a < q * r; ++a) {
            if (a < 0) continue;
            CHECK(A.coeff(a) == B.coeff(a));
        }
    }
}
