#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmf/qexp_io.hpp"

using namespace qmf;

namespace {

std::mt19937 rng(112358);

FormExpansion random_form(bool cyclotomic) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<long> prec_dist(1, 40);
    std::uniform_int_distribution<int> kind(0, 3);
    long prec = prec_dist(rng);
    TruncatedQSeries s(prec);
    for (long n = 0; n < prec; ++n) {
        int k = kind(rng);
        if (k == 0) continue;
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (cyclotomic && k == 1) {
            std::vector<Rational> c(euler_phi(12), Rational(0));
            c[0] = q;
            c[3] = Rational(num(rng));
            s.set_coefficient(n, RingValue(CyclotomicElement(12, std::move(c))));
        } else if (q != 0) {
            s.set_coefficient(n, RingValue(q));
        }
    }
    std::uniform_int_distribution<long> tw(1, 30);
    std::uniform_int_distribution<long> lvl(1, 600);
    std::vector<std::string> chis = {"trivial:1", "trivial:5", "kronecker:12", "kronecker:-4",
                                     "prod(kronecker:-4,kronecker:-3)", "induce(kronecker:12,24)"};
    std::uniform_int_distribution<std::size_t> ci(0, chis.size() - 1);
    return FormExpansion{tw(rng), lvl(rng), parse_character(chis[ci(rng)]), std::move(s), false};
}

} // namespace

TEST_CASE("minimal file") {
    std::string text = "# qexp 1\ntwice_weight 1\nlevel 4\ncharacter trivial:1\norder 1\nprec 3\n1 1\n";
    auto f = parse_qexp(text);
    CHECK(f.twice_weight == 1);
    CHECK(f.level == 4);
    CHECK(f.prec() == 3);
    CHECK(f.coefficient(0) == RingValue(0));
    CHECK(f.coefficient(1) == RingValue(1));
    CHECK(write_qexp(f) == text);
}

TEST_CASE("mixed rational and cyclotomic coefficients") {
    std::string text =
        "# qexp 1\ntwice_weight 3\nlevel 100\ncharacter trivial:1\norder 4\nprec 5\n2 3/2\n3 [0,1]@4\n";
    auto f = parse_qexp(text);
    CHECK(f.series.ring_order() == 4);
    CHECK(f.coefficient(2) == RingValue(Rational(3, 2)));
    CHECK(f.coefficient(3) == RingValue(CyclotomicElement::zeta_power(4, 1)));
    CHECK(write_qexp(f) == text);
}

TEST_CASE("parse errors carry line numbers") {
    std::string bad_value =
        "# qexp 1\ntwice_weight 1\nlevel 4\ncharacter trivial:1\norder 1\nprec 9\n5 x\n";
    CHECK_THROWS_AS(parse_qexp(bad_value), ParseError);
    try {
        parse_qexp(bad_value);
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
    }

    CHECK_THROWS_AS(parse_qexp("nonsense"), ParseError);

    std::string dup =
        "# qexp 1\ntwice_weight 1\nlevel 4\ncharacter trivial:1\norder 1\nprec 9\n3 1\n3 2\n";
    CHECK_THROWS_AS(parse_qexp(dup), DuplicateIndex);

    std::string decreasing =
        "# qexp 1\ntwice_weight 1\nlevel 4\ncharacter trivial:1\norder 1\nprec 9\n3 1\n2 2\n";
    CHECK_THROWS_AS(parse_qexp(decreasing), ParseError);

    std::string out_of_range =
        "# qexp 1\ntwice_weight 1\nlevel 4\ncharacter trivial:1\norder 1\nprec 9\n9 1\n";
    CHECK_THROWS_AS(parse_qexp(out_of_range), IndexOutOfRange);

    std::string wrong_order =
        "# qexp 1\ntwice_weight 1\nlevel 4\ncharacter trivial:1\norder 4\nprec 9\n1 [1]@2\n";
    CHECK_THROWS_AS(parse_qexp(wrong_order), ParseError);
}

TEST_CASE("zero series writes a header-only file") {
    FormExpansion zero{8, 1, DirichletCharacter::trivial(1), TruncatedQSeries(5), false};
    std::string text = write_qexp(zero);
    CHECK(text == "# qexp 1\ntwice_weight 8\nlevel 1\ncharacter trivial:1\norder 1\nprec 5\n");
    auto back = parse_qexp(text);
    CHECK(back.series.is_zero());
    CHECK(back.prec() == 5);
}

TEST_CASE("round trip is exact on random forms") {
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_form(trial % 2 == 0);
        std::string text = write_qexp(f);
        auto back = parse_qexp(text);
        CHECK(back.twice_weight == f.twice_weight);
        CHECK(back.level == f.level);
        CHECK(back.character.spec() == f.character.spec());
        CHECK(back.prec() == f.prec());
        CHECK(back.series == f.series);
        CHECK(write_qexp(back) == text); // byte-identical second pass
    }
}

TEST_CASE("the eta expansion writes the listed coefficients") {
    auto f = eta_quotient({{1, 4}, {5, 4}}, 10);
    f.character = DirichletCharacter::trivial(5);
    std::string text = write_qexp(f);
    CHECK(text ==
          "# qexp 1\ntwice_weight 8\nlevel 5\ncharacter trivial:5\norder 1\nprec 10\n"
          "1 1\n2 -4\n3 2\n4 8\n5 -5\n6 -8\n7 6\n9 -23\n");
}
