#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "qmf/rankin_cohen.hpp"
#include "qmf/shimura.hpp"

using namespace qmf;

namespace {

std::mt19937 rng(24601);

// Delta(4z) theta(z) with its ambient level-16 character, to enough precision
// to lift out_prec coefficients
FormExpansion selberg_input(long out_prec) {
    long needed = lift_required_input_prec(1, out_prec);
    long delta_prec = (needed + 3) / 4 + 1;
    auto delta4 = dilate_form(eta_quotient({{1, 24}}, delta_prec), 4);
    auto theta = theta_series(DirichletCharacter::trivial(1), 1, needed);
    auto f = bracket(delta4, theta, 0);
    f.character = DirichletCharacter::trivial(1).induced(16);
    f.level = 16;
    return f;
}

// independent evaluation of the finite Dirichlet-series product
// (sum_d chi(d) d^{K-1} d^{-s}) (sum_m a(t m^2) m^{-s}) via a double loop
TruncatedQSeries dirichlet_product_oracle(const FormExpansion& f,
                                          const std::function<RingValue(long)>& chi, long K,
                                          long t, long out_prec) {
    TruncatedQSeries out(out_prec);
    for (long d = 1; d < out_prec; ++d) {
        RingValue cd = chi(d);
        if (cd.is_zero()) continue;
        cd *= RingValue(int_pow(Integer(d), static_cast<unsigned long>(K - 1)));
        for (long m = 1; d * m < out_prec; ++m) {
            const RingValue& a = f.series.coefficient(t * m * m);
            if (a.is_zero()) continue;
            RingValue v = out.coefficient(d * m) + cd * a;
            out.set_coefficient(d * m, std::move(v));
        }
    }
    return out;
}

} // namespace

TEST_CASE("lift of the zero form is zero") {
    FormExpansion zero{13, 16, DirichletCharacter::trivial(4), TruncatedQSeries(200), true};
    auto lifted = shimura_lift(zero, 1, 10);
    CHECK(lifted.series.is_zero());
    CHECK(lifted.twice_weight == 24);
}

TEST_CASE("Selberg: S_1(Delta(4z) theta(z)) = Delta^2 - 2^11 Delta^2(2z)") {
    long prec = 31;
    auto lifted = shimura_lift(selberg_input(prec), 1, prec);

    auto delta = eta_quotient({{1, 24}}, prec);
    auto delta_sq = multiply(delta.series, delta.series);
    auto expected = linear_combine(RingValue(1), delta_sq, RingValue(-Rational(Integer(2048))),
                                   delta_sq.dilated(2));
    for (long n = 1; n < prec; ++n) CHECK(lifted.series.coefficient(n) == expected.coefficient(n));
}

TEST_CASE("precision accounting") {
    FormExpansion thin{13, 16, DirichletCharacter::trivial(4), TruncatedQSeries(10), true};
    CHECK_THROWS_AS(shimura_lift(thin, 1, 10), InsufficientPrecision);
    try {
        shimura_lift(thin, 1, 10);
    } catch (const InsufficientPrecision& e) {
        CHECK(e.required == 82);
    }
    CHECK_THROWS_AS(shimura_lift(thin, 4, 3), NotSquarefree);
    CHECK_THROWS_AS(kohnen_convolution(thin, 6, 2), NotFundamental);
    CHECK_THROWS_AS(kohnen_convolution(thin, -4, 2), NotFundamental);
}

TEST_CASE("lifts are linear") {
    std::uniform_int_distribution<long> coeff(-9, 9);
    long in_prec = lift_required_input_prec(1, 12);
    auto chi = DirichletCharacter::trivial(4);
    for (int trial = 0; trial < 4; ++trial) {
        TruncatedQSeries s1(in_prec), s2(in_prec);
        for (long n = 0; n < in_prec; ++n) {
            s1.set_coefficient(n, RingValue(coeff(rng)));
            s2.set_coefficient(n, RingValue(coeff(rng)));
        }
        FormExpansion F{9, 4, chi, std::move(s1), true};
        FormExpansion G{9, 4, chi, std::move(s2), true};
        RingValue a(Rational(2, 3)), b(Rational(-7, 5));
        FormExpansion comb = F;
        comb.series = linear_combine(a, F.series, b, G.series);

        auto lift_comb = shimura_lift(comb, 1, 12);
        auto lift_split = linear_combine(a, shimura_lift(F, 1, 12).series, b,
                                         shimura_lift(G, 1, 12).series);
        CHECK(equal_on_range(lift_comb.series, lift_split, 0, 12));

        auto k_comb = kohnen_convolution(comb, 1, 12);
        auto k_split = linear_combine(a, kohnen_convolution(F, 1, 12).series, b,
                                      kohnen_convolution(G, 1, 12).series);
        CHECK(equal_on_range(k_comb.series, k_split, 0, 12));

        // normalized variant with a fixed explicit normalizer
        auto kn_comb = kohnen_lift(comb, 1, 12, Rational(3));
        auto kn_split = linear_combine(a, kohnen_lift(F, 1, 12, Rational(3)).series, b,
                                       kohnen_lift(G, 1, 12, Rational(3)).series);
        CHECK(equal_on_range(kn_comb.series, kn_split, 0, 12));
    }
}

TEST_CASE("divisor convolution agrees with the Dirichlet-product double loop") {
    long out = 13;
    auto F = selberg_input(out);
    auto lifted = shimura_lift(F, 1, out);
    auto chi_eff = multiply(multiply(F.character, chi_minus4_power(12)), chi_quadratic(1));
    auto oracle = dirichlet_product_oracle(
        F, [&](long d) { return chi_eff.eval(d); }, 12, 1, out);
    for (long n = 1; n < out; ++n) CHECK(lifted.series.coefficient(n) == oracle.coefficient(n));
}

TEST_CASE("Euler factor at 2: induced vs unrestricted convolution") {
    long prec = 20;
    auto F = selberg_input(prec);
    auto lifted = shimura_lift(F, 1, prec); // only odd divisors survive chi_{-4}^{12}

    // unrestricted convolution: trivial character of modulus 1 on every divisor
    auto all_d = dirichlet_product_oracle(
        F, [](long) { return RingValue(1); }, 12, 1, prec);
    auto corrected = linear_combine(RingValue(1), all_d, RingValue(-Rational(Integer(2048))),
                                    all_d.dilated(2));
    for (long n = 1; n < prec; ++n)
        CHECK(lifted.series.coefficient(n) == corrected.coefficient(n));
}

TEST_CASE("Kohnen convolution at D = 1 matches the Shimura lift on plus-space input") {
    long out = 13;
    auto F = selberg_input(out);
    CHECK(check_plus_space(F, 12).pass);
    auto via_kohnen = kohnen_convolution(F, 1, out); // a(1) A_1(n) without normalization
    auto via_shimura = shimura_lift(F, 1, out);
    for (long n = 1; n < out; ++n)
        CHECK(via_kohnen.series.coefficient(n) == via_shimura.series.coefficient(n));
    // the default normalizer a(1) vanishes for this input
    CHECK(F.series.coefficient(1).is_zero());
    CHECK_THROWS_AS(kohnen_lift(F, 1, out), VanishingNormalizer);
}

TEST_CASE("Kohnen lift with the eigenform normalizer reproduces f^2") {
    long prec = 8;
    long needed = lift_required_input_prec(5, prec);
    long f_prec = (needed + 3) / 4 + 1;
    auto f = eta_quotient({{1, 4}, {5, 4}}, f_prec);
    auto theta5 = theta_series(DirichletCharacter::trivial(1), 5, needed);
    auto F = bracket(dilate_form(f, 4), theta5, 0);
    F.character = parse_character("induce(prod(trivial:5,kronecker:5),5)");
    F.level = 5;

    CHECK(f.coefficient(5) == RingValue(-5));
    auto lifted = kohnen_lift(F, 5, prec, Rational(-5));
    auto f_sq = multiply(f.series, f.series);
    for (long n = 1; n < prec; ++n) CHECK(lifted.series.coefficient(n) == f_sq.coefficient(n));
}
