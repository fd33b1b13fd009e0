#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "autalg/ext_field.hpp"
#include "autalg/fieldspec.hpp"
#include "autalg/polyfactor.hpp"
#include "autalg/prime_field.hpp"
#include "autalg/rationals.hpp"
#include "helpers.hpp"

using namespace autalg;
using namespace autalg_tests;

TEST_CASE("polynomial division with remainder") {
    PrimeField F5(5);
    // x^2 - 1 = (x + 4)(x + 1) over F_5
    auto [q, r] = poly_divmod(F5, make_poly(F5, {-1, 0, 1}), make_poly(F5, {4, 1}));
    CHECK(poly_eq(F5, q, make_poly(F5, {1, 1})));
    CHECK(poly_deg<PrimeField>(r) == -1);

    PrimeField F7(7);
    auto a = make_poly(F7, {3, 1, 4, 1, 5});
    auto b = make_poly(F7, {2, 6, 1});
    auto [q2, r2] = poly_divmod(F7, a, b);
    auto back = poly_add(F7, poly_mul(F7, q2, b), r2);
    CHECK(poly_eq(F7, back, a));
    CHECK(poly_deg<PrimeField>(r2) < poly_deg<PrimeField>(b));
}

TEST_CASE("polynomial gcd is monic") {
    PrimeField F7(7);
    auto f = poly_mul(F7, make_poly(F7, {-1, 1}), make_poly(F7, {-2, 1}));  // (x-1)(x-2)
    auto g = poly_mul(F7, make_poly(F7, {-1, 1}), make_poly(F7, {-3, 1}));  // (x-1)(x-3)
    auto d = poly_gcd(F7, f, g);
    CHECK(poly_eq(F7, d, make_poly(F7, {-1, 1})));
    CHECK(poly_eq(F7, poly_gcd(F7, f, Poly<PrimeField>{}), poly_make_monic(F7, f)));
    // scaling either argument does not change the (monic) gcd
    CHECK(poly_eq(F7, poly_gcd(F7, poly_scale(F7, f, F7.from_int(3)), g), d));
}

TEST_CASE("modular exponentiation") {
    PrimeField F7(7);
    auto mod = make_poly(F7, {1, 0, 1});  // x^2 + 1
    // x^2 = -1 (mod x^2+1), so x^10 = (-1)^5 = -1 = 6
    auto p = poly_powmod(F7, poly_x(F7), 10, mod);
    CHECK(poly_eq(F7, p, make_poly(F7, {6})));
    auto pb = poly_powmod_big(F7, poly_x(F7), bigint(10), mod);
    CHECK(poly_eq(F7, pb, p));
    // big-exponent path agrees with iterated squaring on a larger case
    auto e = bigint("1000000007");
    auto big1 = poly_powmod_big(F7, make_poly(F7, {1, 1}), e, mod);
    auto naive = poly_powmod(F7, make_poly(F7, {1, 1}), 1000000007ULL, mod);
    CHECK(poly_eq(F7, big1, naive));
}

TEST_CASE("irreducibility testing") {
    PrimeField F7(7), F5(5), F2(2);
    CHECK(poly_irreducible(F7, make_poly(F7, {1, 0, 1})));   // x^2+1, -1 not a square mod 7
    CHECK(!poly_irreducible(F5, make_poly(F5, {1, 0, 1})));  // roots 2 and 3 mod 5
    CHECK(F5.eq(poly_eval(F5, make_poly(F5, {1, 0, 1}), F5.from_int(2)), F5.zero()));
    CHECK(poly_irreducible(F2, make_poly(F2, {1, 1, 0, 0, 1})));    // x^4+x+1
    CHECK(!poly_irreducible(F2, make_poly(F2, {1, 0, 1, 0, 1})));   // (x^2+x+1)^2
    CHECK(poly_irreducible(F7, make_poly(F7, {0, 1})));  // linear polys are irreducible
    CHECK(poly_irreducible(F7, make_poly(F7, {3, 1})));
    CHECK(!poly_irreducible(F7, poly_mul(F7, make_poly(F7, {0, 1}), make_poly(F7, {3, 1}))));

    // over GF(49), -1 becomes a square, so x^2+1 splits
    ExtField F49(7, 2, {1, 0, 1});
    bool found = false;
    for (std::uint64_t i = 0; i < 49 && !found; ++i)
        found = F49.eq(F49.mul(i, i), F49.from_int(-1));
    REQUIRE(found);
    Poly<ExtField> x2p1 = {F49.one(), F49.zero(), F49.one()};
    CHECK(!poly_irreducible(F49, x2p1));

    CHECK(canonical_modulus(2, 4) == std::vector<std::uint64_t>({1, 1, 0, 0, 1}));
}

TEST_CASE("root finding over finite fields") {
    PrimeField F7(7);
    // x^2+5x+6 = (x+2)(x+3): roots 4 and 5
    auto r = poly_roots(F7, make_poly(F7, {6, 5, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == F7.from_int(4));
    CHECK(r[1] == F7.from_int(5));
    CHECK(poly_roots(F7, make_poly(F7, {1, 0, 1})).empty());
    // repeated roots are reported once
    auto rep = poly_roots(F7, poly_mul(F7, make_poly(F7, {-1, 1}), make_poly(F7, {-1, 1})));
    REQUIRE(rep.size() == 1);
    CHECK(rep[0] == F7.one());

    // q = 4099 > 4096 exercises the gcd/equal-degree-splitting path
    PrimeField Fbig(4099);
    auto f = poly_mul(Fbig, poly_mul(Fbig, make_poly(Fbig, {-1, 1}), make_poly(Fbig, {-2, 1})),
                      make_poly(Fbig, {-1000, 1}));
    auto rb = poly_roots(Fbig, f);
    REQUIRE(rb.size() == 3);
    CHECK(rb[0] == 1);
    CHECK(rb[1] == 2);
    CHECK(rb[2] == 1000);
    auto rep2 = poly_roots(Fbig, poly_mul(Fbig, f, make_poly(Fbig, {-2, 1})));
    CHECK(rep2.size() == 3);

    // extension field, scan path
    ExtField F9(3, 2, {1, 0, 1});
    Poly<ExtField> lin1 = {F9.neg(F9.element(3)), F9.one()};  // x - a
    Poly<ExtField> lin2 = {F9.neg(F9.element(7)), F9.one()};  // x - b
    auto re = poly_roots(F9, poly_mul(F9, lin1, lin2));
    REQUIRE(re.size() == 2);
    CHECK(re[0] == F9.element(3));
    CHECK(re[1] == F9.element(7));
}

TEST_CASE("minimal-degree irreducible factor") {
    PrimeField F7(7);
    std::mt19937_64 rng(12345);
    auto f = poly_mul(F7, make_poly(F7, {1, 0, 1}), make_poly(F7, {3, 1}));  // (x^2+1)(x+3)
    auto m = poly_min_irreducible_factor(F7, f, rng);
    CHECK(poly_eq(F7, m, make_poly(F7, {3, 1})));

    // product of two irreducible quadratics: x^2+1 and x^2+x+3
    // (disc(x^2+x+3) = 1-12 = 3 mod 7, and 3 is not a square mod 7)
    auto g = poly_mul(F7, make_poly(F7, {1, 0, 1}), make_poly(F7, {3, 1, 1}));
    auto mg = poly_min_irreducible_factor(F7, g, rng);
    CHECK(poly_deg<PrimeField>(mg) == 2);
    CHECK(poly_irreducible(F7, mg));
    auto [qq, rr] = poly_divmod(F7, g, mg);
    CHECK(poly_deg<PrimeField>(rr) == -1);

    // deterministic under a fixed seed
    std::mt19937_64 rng1(99), rng2(99);
    auto a1 = poly_min_irreducible_factor(F7, g, rng1);
    auto a2 = poly_min_irreducible_factor(F7, g, rng2);
    CHECK(poly_eq(F7, a1, a2));

    // an already-irreducible input comes back monic and unchanged
    auto irr = poly_min_irreducible_factor(F7, poly_scale(F7, make_poly(F7, {1, 0, 1}), F7.from_int(2)), rng);
    CHECK(poly_eq(F7, irr, make_poly(F7, {1, 0, 1})));
}

TEST_CASE("rational roots") {
    BigRational Q;
    // 6x^2 - 5x + 1 = (3x-1)(2x-1)
    auto r = poly_roots_rational(Q, make_poly(Q, {1, -5, 6}));
    REQUIRE(r.size() == 2);
    CHECK(Q.to_string(r[0]) == "1/3");
    CHECK(Q.to_string(r[1]) == "1/2");

    CHECK(poly_roots_rational(Q, make_poly(Q, {-2, 0, 1})).empty());  // x^2-2

    auto r2 = poly_roots_rational(Q, make_poly(Q, {0, -1, 0, 1}));  // x^3 - x
    REQUIRE(r2.size() == 3);
    CHECK(r2[0] == Q.from_int(-1));
    CHECK(r2[1] == Q.zero());
    CHECK(r2[2] == Q.one());

    // fractional coefficients: (x - 1/2)(x - 3)
    Poly<BigRational> f = {Q.parse("3/2"), Q.parse("-7/2"), Q.one()};
    auto r3 = poly_roots_rational(Q, f);
    REQUIRE(r3.size() == 2);
    CHECK(Q.to_string(r3[0]) == "1/2");
    CHECK(r3[1] == Q.from_int(3));

    CHECK(poly_roots_rational(Q, make_poly(Q, {5})).empty());
}
