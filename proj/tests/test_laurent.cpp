#include <doctest.h>

#include <random>

#include "ctseq/laurent.hpp"

using namespace ctseq;

namespace {

LaurentPoly random_poly(std::mt19937& rng, std::uint32_t m) {
    std::uniform_int_distribution<int> exp_dist(-5, 5);
    std::uniform_int_distribution<int> coef_dist(0, static_cast<int>(m) - 1);
    std::uniform_int_distribution<int> size_dist(0, 6);
    LaurentPoly p(m);
    const int nterms = size_dist(rng);
    for (int i = 0; i < nterms; ++i) p.add_term(exp_dist(rng), coef_dist(rng));
    return p;
}

}  // namespace

TEST_CASE("addition examples") {
    CHECK(lp_add(LaurentPoly(2, {{0, 1}, {1, 1}}), LaurentPoly(2, {{0, 1}, {1, 1}}))
              .is_zero());
    CHECK(lp_add(LaurentPoly(3, {{0, 1}, {1, 2}}), LaurentPoly(3, {{1, 1}})) ==
          LaurentPoly::constant(3, 1));
    CHECK(lp_add(LaurentPoly(5, {{-1, 1}}), LaurentPoly(5, {{1, 1}})) ==
          LaurentPoly(5, {{-1, 1}, {1, 1}}));
    CHECK_THROWS_AS(lp_add(LaurentPoly(2), LaurentPoly(3)), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
    CHECK(lp_mul(LaurentPoly(2, {{0, 1}, {1, 1}}), LaurentPoly(2, {{0, 1}, {1, 1}})) ==
          LaurentPoly(2, {{0, 1}, {2, 1}}));
    const LaurentPoly tri(5, {{-1, 1}, {0, 1}, {1, 1}});
    CHECK(lp_mul(tri, tri) ==
          LaurentPoly(5, {{-2, 1}, {-1, 2}, {0, 3}, {1, 2}, {2, 1}}));
    CHECK(lp_mul(tri, LaurentPoly(5)).is_zero());
}

TEST_CASE("powers") {
    const LaurentPoly tri(5, {{-1, 1}, {0, 1}, {1, 1}});
    CHECK(lp_pow(tri, 0) == LaurentPoly::constant(5, 1));
    CHECK(lp_pow(tri, 2) == lp_mul(tri, tri));

    // Repeated-multiplication chain as the independent route.
    const LaurentPoly p(3, {{-1, 1}, {0, 2}, {1, 1}});
    LaurentPoly chain = LaurentPoly::constant(3, 1);
    for (int i = 0; i < 3; ++i) chain = lp_mul(chain, p);
    CHECK(lp_pow(p, 3) == chain);
    // Frobenius makes the cube sparse.
    CHECK(lp_pow(p, 3) == LaurentPoly(3, {{-3, 1}, {0, 2}, {3, 1}}));
}

TEST_CASE("constant term") {
    CHECK(lp_ct(LaurentPoly(3, {{0, 1}, {1, 2}})) == 1);
    CHECK(lp_ct(LaurentPoly(5, {{-1, 1}, {1, 1}})) == 0);
    const LaurentPoly tri(5, {{-1, 1}, {0, 1}, {1, 1}});
    const LaurentPoly q(5, {{0, 1}, {2, -1}});
    CHECK(lp_ct(lp_mul(lp_pow(tri, 2), q)) == 2);  // M_2 = 2
}

TEST_CASE("cartier operator examples") {
    CHECK(cartier(LaurentPoly(5, {{-2, 1}, {-1, 2}, {0, 3}, {1, 2}, {2, 1}}), 5) ==
          LaurentPoly::constant(5, 3));
    CHECK(cartier(LaurentPoly(2, {{-2, 1}, {2, 1}}), 2) ==
          LaurentPoly(2, {{-1, 1}, {1, 1}}));
    CHECK(cartier(LaurentPoly(3, {{0, 1}, {1, 1}, {3, 1}}), 3) ==
          LaurentPoly(3, {{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(cartier(LaurentPoly(4, {{0, 1}}), 4), std::invalid_argument);
    CHECK_THROWS_AS(cartier(LaurentPoly(3, {{0, 1}}), 5), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(12345);
    const std::uint32_t mods[] = {2, 3, 5, 7};
    for (int iter = 0; iter < 200; ++iter) {
        const std::uint32_t m = mods[iter % 4];
        const LaurentPoly a = random_poly(rng, m);
        const LaurentPoly b = random_poly(rng, m);
        const LaurentPoly c = random_poly(rng, m);
        CHECK(lp_add(a, b) == lp_add(b, a));
        CHECK(lp_mul(a, b) == lp_mul(b, a));
        CHECK(lp_add(lp_add(a, b), c) == lp_add(a, lp_add(b, c)));
        CHECK(lp_mul(lp_mul(a, b), c) == lp_mul(a, lp_mul(b, c)));
        CHECK(lp_mul(a, lp_add(b, c)) == lp_add(lp_mul(a, b), lp_mul(a, c)));
    }
}

TEST_CASE("Frobenius: P^p = P(x^p) mod p") {
    std::mt19937 rng(777);
    const std::uint32_t primes[] = {2, 3, 5, 7};
    for (int iter = 0; iter < 100; ++iter) {
        const std::uint32_t p = primes[iter % 4];
        const LaurentPoly a = random_poly(rng, p);
        CHECK(lp_pow(a, p) == inflate(a, p));
    }
}

TEST_CASE("Cartier adjunction: ct(A * B(x^p)) = ct(cartier(A) * B)") {
    std::mt19937 rng(424242);
    const std::uint32_t primes[] = {2, 3, 5};
    for (int iter = 0; iter < 100; ++iter) {
        const std::uint32_t p = primes[iter % 3];
        const LaurentPoly a = random_poly(rng, p);
        const LaurentPoly b = random_poly(rng, p);
        CHECK(lp_ct(lp_mul(a, inflate(b, p))) == lp_ct(lp_mul(cartier(a, p), b)));
    }
}

TEST_CASE("CtSpec validation") {
    CHECK_THROWS_AS(CtSpec::make("bad", 4, LaurentPoly::constant(4, 1),
                                 LaurentPoly::constant(4, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        CtSpec::make("bad", 3, LaurentPoly(3), LaurentPoly::constant(3, 1)),
        std::invalid_argument);
}
