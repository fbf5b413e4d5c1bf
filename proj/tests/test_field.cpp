#include "doctest.h"
#include "hopflab/field.hpp"

#include <random>

using namespace hopflab;

TEST_CASE("field descriptors parse and round-trip") {
    CHECK(Field::parse("rational").is_rational());
    CHECK(Field::parse("fp:7").modulus() == 7);
    CHECK(Field::parse("fp:7").descriptor() == "fp:7");
    CHECK(Field::rationals().descriptor() == "rational");
    CHECK_THROWS_AS(Field::parse("fp:6"), Error);
    CHECK_THROWS_AS(Field::parse("fp:"), Error);
    CHECK_THROWS_AS(Field::parse("float64"), Error);
}

TEST_CASE("rational scalars normalize") {
    const Field q = Field::rationals();
    CHECK(Scalar::parse(q, "2/4").str() == "1/2");
    CHECK(Scalar::parse(q, "-6/4").str() == "-3/2");
    CHECK((Scalar::parse(q, "1/3") + Scalar::parse(q, "1/6")).str() == "1/2");
    CHECK(Scalar::parse(q, "0/5").is_zero());
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), DivisionByZero);
    CHECK_THROWS_AS(Scalar::parse(q, "a"), Error);
}

TEST_CASE("prime field arithmetic") {
    const Field f7 = Field::fp(7);
    CHECK(Scalar::from_int(f7, 3).inverse().str() == "5");  // 3*5 = 15 = 1 mod 7
    CHECK(Scalar::from_int(f7, -1).str() == "6");
    CHECK(Scalar::parse(f7, "1/2").str() == "4");
    CHECK_THROWS_AS(Scalar::zero(f7).inverse(), DivisionByZero);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    const Scalar a = Scalar::from_int(Field::fp(7), 1);
    const Scalar b = Scalar::from_int(Field::fp(5), 1);
    const Scalar c = Scalar::from_int(Field::rationals(), 1);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * c, FieldMismatch);
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937_64 rng(42);
    auto random_scalar = [&](const Field& f) {
        if (f.is_fp()) return Scalar::fp(f, rng() % f.modulus());
        const long n = static_cast<long>(rng() % 41) - 20;
        const long d = static_cast<long>(rng() % 19) + 1;
        return Scalar::rational(mpq_class(n, d));
    };
    for (const Field& f :
         {Field::rationals(), Field::fp(3), Field::fp(7), Field::fp(13)}) {
        const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
        for (int i = 0; i < 10000; ++i) {
            const Scalar a = random_scalar(f), b = random_scalar(f),
                         c = random_scalar(f);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + zero == a);
            REQUIRE(a * one == a);
            REQUIRE(a + (-a) == zero);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == one);
        }
    }
}

TEST_CASE("polynomial division and gcd") {
    const Field f7 = Field::fp(7);
    const PolyFp x = PolyFp::x(f7);
    const PolyFp f = (x * x - PolyFp::constant(f7, 1)) * (x + PolyFp::constant(f7, 3));
    auto [q, r] = f.divmod(x + PolyFp::constant(f7, 3));
    CHECK(r.is_zero());
    CHECK(q == x * x - PolyFp::constant(f7, 1));
    CHECK(poly_gcd(f, x + PolyFp::constant(f7, 3)) == (x + PolyFp::constant(f7, 3)));
}

TEST_CASE("factorization of small polynomials over F_7") {
    const Field f7 = Field::fp(7);
    SUBCASE("x^2 - 1 splits as (x-1)(x+1)") {
        const PolyFp f = PolyFp::from_ints(f7, {-1, 0, 1});
        const auto fac = factor_poly_fp(f, 1);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].first == PolyFp::from_ints(f7, {1, 1}));   // x + 1
        CHECK(fac[1].first == PolyFp::from_ints(f7, {-1, 1}));  // x - 1 = x + 6
        CHECK(fac[0].second == 1);
        CHECK(fac[1].second == 1);
    }
    SUBCASE("x^2 + 1 is irreducible (-1 is a non-residue mod 7)") {
        // oracle: exhaustive root search over F_7
        const PolyFp f = PolyFp::from_ints(f7, {1, 0, 1});
        for (uint64_t a = 0; a < 7; ++a) REQUIRE(f.eval(a) != 0);
        const auto fac = factor_poly_fp(f, 1);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first == f);
        CHECK(fac[0].second == 1);
    }
    SUBCASE("x^3 - 1 has the cube roots of unity 1, 2, 4 as roots") {
        // oracle: enumerate cube roots of unity mod 7
        std::vector<uint64_t> roots;
        for (uint64_t a = 0; a < 7; ++a)
            if (a * a * a % 7 == 1) roots.push_back(a);
        CHECK(roots == std::vector<uint64_t>{1, 2, 4});
        const PolyFp f = PolyFp::from_ints(f7, {-1, 0, 0, 1});
        const auto fac = factor_poly_fp(f, 1);
        REQUIRE(fac.size() == 3);
        for (const auto& [g, m] : fac) {
            CHECK(g.degree() == 1);
            CHECK(m == 1);
        }
    }
}

TEST_CASE("factorization re-multiplies to the input") {
    std::mt19937_64 rng(7);
    for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        const Field f = Field::fp(p);
        for (int trial = 0; trial < 60; ++trial) {
            const size_t deg = 1 + rng() % 12;
            std::vector<uint64_t> c(deg + 1);
            for (auto& x : c) x = rng() % p;
            c[deg] = 1 + rng() % (p - 1);
            const PolyFp poly(f, c);
            const auto fac = factor_poly_fp(poly, trial);
            PolyFp prod = PolyFp::constant(f, poly.leading());
            for (const auto& [g, m] : fac) {
                REQUIRE(g.is_monic());
                for (int i = 0; i < m; ++i) prod = prod * g;
            }
            REQUIRE(prod == poly);
        }
    }
}

TEST_CASE("factorization handles multiplicities and char-p powers") {
    const Field f3 = Field::fp(3);
    const PolyFp x = PolyFp::x(f3);
    const PolyFp one = PolyFp::constant(f3, 1);
    // (x+1)^3 (x^2+1): derivative of the cube part vanishes
    const PolyFp f = (x + one) * (x + one) * (x + one) * (x * x + one);
    const auto fac = factor_poly_fp(f, 0);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == x + one);
    CHECK(fac[0].second == 3);
    CHECK(fac[1].first == x * x + one);
    CHECK(fac[1].second == 1);
    CHECK_THROWS_AS(factor_poly_fp(PolyFp::zero(f3)), ZeroPolynomial);
}

TEST_CASE("factorization works over F_2") {
    const Field f2 = Field::fp(2);
    const PolyFp f = PolyFp::from_ints(f2, {1, 1, 0, 0, 1, 1});  // x^5+x^4+x+1
    const auto fac = factor_poly_fp(f, 3);
    PolyFp prod = PolyFp::constant(f2, 1);
    for (const auto& [g, m] : fac)
        for (int i = 0; i < m; ++i) prod = prod * g;
    CHECK(prod == f);
}
