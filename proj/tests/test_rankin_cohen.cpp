#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "qmf/rankin_cohen.hpp"

using namespace qmf;

namespace {

std::mt19937 rng(5551212);

FormExpansion random_form(long twice_weight, long prec) {
    std::uniform_int_distribution<long> num(-5, 5);
    TruncatedQSeries s(prec);
    for (long n = 0; n < prec; ++n) s.set_coefficient(n, RingValue(num(rng)));
    return FormExpansion{twice_weight, 1, DirichletCharacter::trivial(1), std::move(s), false};
}

} // namespace

TEST_CASE("gen_binomial") {
    CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(gen_binomial(Rational(7), 3) == Rational(35));
    CHECK(gen_binomial(Rational(5), 0) == Rational(1));
    // half-integral binomial matches its factorial closed form:
    // binom(w - 1/2 + v, j) = 4^{-j} (2w+v)! (w-j)! / (w! j! (2w-2j+v)!)
    for (long w = 1; w <= 6; ++w)
        for (long j = 0; j <= w; ++j)
            for (int v = 0; v <= 1; ++v) {
                Rational lhs = gen_binomial(Rational(2 * w - 1, 2) + Rational(v), j);
                Rational rhs = Rational(factorial(2 * w + v) * factorial(w - j)) /
                               (Rational(int_pow(Integer(4), j)) *
                                Rational(factorial(w) * factorial(j) * factorial(2 * w - 2 * j + v)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("bracket order zero is the product") {
    auto f = random_form(8, 20);
    auto g = random_form(12, 20);
    auto b = bracket(f, g, 0);
    auto p = multiply(f.series, g.series);
    CHECK(equal_on_range(b.series, p, 0, std::min(b.prec(), p.prec())));
    CHECK(b.twice_weight == 20);
}

TEST_CASE("bracket of a form with itself at order one vanishes") {
    auto f = eta_quotient({{1, 24}}, 25);
    CHECK(bracket(f, f, 1).series.is_zero());
}

TEST_CASE("swap symmetry (-1)^w") {
    for (long w = 0; w <= 4; ++w) {
        auto f = random_form(8, 15);
        auto g = random_form(6, 15);
        auto fg = bracket(f, g, w);
        auto gf = bracket(g, f, w);
        auto flipped = gf.series.scaled(RingValue(w % 2 == 0 ? 1 : -1));
        CHECK(equal_on_range(fg.series, flipped, 0, 15));
    }
    // half-integral instance: [f(rz/d), f(dz)]_{2w+v} = (-1)^v [f(dz), f(rz/d)]_{2w+v}
    auto f = eta_quotient({{1, 4}, {5, 4}}, 8);
    auto a = dilate_form(f, 3);
    auto b = dilate_form(f, 4);
    auto ab = bracket(a, b, 3);
    auto ba = bracket(b, a, 3);
    CHECK(equal_on_range(ab.series, ba.series.scaled(RingValue(-1)), 0, ab.prec()));
}

TEST_CASE("bracket is bilinear") {
    for (long w : {1L, 2L}) {
        auto f1 = random_form(8, 12);
        auto f2 = random_form(8, 12);
        auto g = random_form(10, 12);
        RingValue a(Rational(3, 2)), b(Rational(-5, 7));
        FormExpansion comb = f1;
        comb.series = linear_combine(a, f1.series, b, f2.series);
        auto lhs = bracket(comb, g, w);
        auto rhs = linear_combine(a, bracket(f1, g, w).series, b, bracket(f2, g, w).series);
        CHECK(equal_on_range(lhs.series, rhs, 0, 12));

        FormExpansion comb2 = g;
        comb2.series = linear_combine(a, g.series, b, g.series.hyperderivative(0));
        auto lhs2 = bracket(f1, comb2, w);
        auto rhs2 = linear_combine(a + b, bracket(f1, g, w).series, RingValue(0), rhs);
        CHECK(equal_on_range(lhs2.series, rhs2, 0, 12));
    }
}

TEST_CASE("weight and character bookkeeping") {
    auto f = eta_quotient({{1, 4}, {5, 4}}, 10); // weight 4
    auto t = theta_series(DirichletCharacter::kronecker(12), 1, 10);
    for (long w = 0; w <= 3; ++w) {
        auto b = bracket(f, t, w);
        CHECK(b.twice_weight == f.twice_weight + t.twice_weight + 4 * w);
        if (w > 0) CHECK(b.cusp);
    }
    // integral x half-integral with even integral weight: chi_{-4} factor is trivial mod 4
    auto b = bracket(f, t, 1);
    CHECK(b.character.parity() == 0);

    // both integral: plain character product
    auto g4 = eisenstein(4, 10);
    auto bb = bracket(g4, g4, 1);
    CHECK(bb.twice_weight == 8 + 8 + 4);
    CHECK(bb.character.modulus() == 1);
}

TEST_CASE("the bracket combination g for the mod-12 character") {
    // g = 2[f(z), f(12z)]_2 - 2[f(3z), f(4z)]_2 with f the level-5 newform
    long prec = 20;
    auto f = eta_quotient({{1, 4}, {5, 4}}, prec);
    auto t1 = bracket(dilate_form(f, 1), dilate_form(f, 12), 2);
    auto t2 = bracket(dilate_form(f, 3), dilate_form(f, 4), 2);
    auto g = linear_combine(RingValue(2), t1.series.truncated(prec), RingValue(-2),
                            t2.series.truncated(prec));
    std::map<long, long> expected = {{7, 100},   {10, -640}, {11, 1040}, {13, 2020},
                                     {14, -640}, {17, -7500}, {19, -16140}};
    for (long n = 0; n < prec; ++n) {
        auto it = expected.find(n);
        CHECK(g.coefficient(n) == RingValue(it == expected.end() ? 0 : it->second));
    }
}

TEST_CASE("lemma1 polynomial identity") {
    CHECK(lemma1_check(1, 1, 0));
    CHECK(lemma1_check(4, 1, 0));
    for (long k = 1; k <= 8; ++k)
        for (long w = 1; w <= 6; ++w)
            for (int v = 0; v <= 1; ++v) {
                CAPTURE(k);
                CAPTURE(w);
                CAPTURE(v);
                CHECK(lemma1_check(k, w, v));
            }
}
