#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/arith.hpp"

using namespace qmf;

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
}

TEST_CASE("radical") {
    CHECK(radical(1) == 1);
    CHECK(radical(12) == 6);
    CHECK(radical(48) == 6);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(divisors(12) == std::vector<long>({1, 2, 3, 4, 6, 12}));
    CHECK(divisors(7) == std::vector<long>({1, 7}));
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    auto f12 = factorize(12);
    REQUIRE(f12.size() == 2);
    CHECK(f12[0].prime == 2);
    CHECK(f12[0].exponent == 2);
    CHECK(f12[1].prime == 3);
    CHECK(f12[1].exponent == 1);
    auto f576 = factorize(576);
    REQUIRE(f576.size() == 2);
    CHECK(f576[0].exponent == 6);
    CHECK(f576[1].exponent == 2);
}

TEST_CASE("moebius and radical are multiplicative on coprime pairs") {
    for (long m = 1; m <= 200; ++m)
        for (long n = 1; m * n <= 200; ++n) {
            if (gcd_long(m, n) != 1) continue;
            CHECK(moebius(m * n) == moebius(m) * moebius(n));
            CHECK(radical(m * n) == radical(m) * radical(n));
        }
}

TEST_CASE("divisor count matches the factorization") {
    for (long n = 1; n <= 1000; ++n) {
        long expected = 1;
        for (const auto& pp : factorize(n)) expected *= pp.exponent + 1;
        CHECK(static_cast<long>(divisors(n).size()) == expected);
    }
}

TEST_CASE("kronecker symbol examples") {
    CHECK(kronecker_symbol(-4, 3) == -1);
    CHECK(kronecker_symbol(12, 7) == -1);
    for (long D : {-8, -4, -3, 1, 5, 8, 12, 13}) CHECK(kronecker_symbol(D, 1) == 1);
    // enumerate squares mod 7: 12 = 5 mod 7 is a non-residue
    bool residue = false;
    for (long x = 1; x < 7; ++x)
        if ((x * x) % 7 == 5) residue = true;
    CHECK_FALSE(residue);
}

TEST_CASE("kronecker symbol: complete multiplicativity and periodicity") {
    for (long D : {-4, -3, 5, 8, 12, 13}) {
        long period = D < 0 ? -D : D;
        for (long n = 1; n <= 500; ++n) {
            CHECK(kronecker_symbol(D, n + period) == kronecker_symbol(D, n));
            for (long m = 1; m * n <= 500; ++m)
                CHECK(kronecker_symbol(D, m * n) ==
                      kronecker_symbol(D, m) * kronecker_symbol(D, n));
            CHECK((kronecker_symbol(D, n) == 0) == (gcd_long(D < 0 ? -D : D, n) > 1));
        }
        CHECK(kronecker_symbol(D, -1) == (D < 0 ? -1 : 1));
    }
}

TEST_CASE("fundamental discriminants") {
    CHECK(fundamental_discriminant_of(5) == 5);
    CHECK(fundamental_discriminant_of(3) == 12);
    CHECK(fundamental_discriminant_of(1) == 1);
    CHECK_THROWS_AS(fundamental_discriminant_of(12), NotSquarefree);
    CHECK(is_fundamental_discriminant(1));
    CHECK(is_fundamental_discriminant(5));
    CHECK(is_fundamental_discriminant(8));
    CHECK(is_fundamental_discriminant(12));
    CHECK_FALSE(is_fundamental_discriminant(6));
    CHECK_FALSE(is_fundamental_discriminant(9));
    CHECK_FALSE(is_fundamental_discriminant(16));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}
