#include "qmf/rankin_cohen.hpp"

#include <algorithm>

namespace qmf {

Rational gen_binomial(const Rational& x, long j) {
    if (j < 0) throw Error("gen_binomial needs j >= 0");
    Rational num(1);
    for (long i = 0; i < j; ++i) num *= x - Rational(i);
    return num / Rational(factorial(j));
}

TruncatedQSeries bracket_series(const TruncatedQSeries& f, HalfInteger k,
                                const TruncatedQSeries& g, HalfInteger l, long w) {
    if (w < 0) throw Error("bracket order must be >= 0");
    long prec = std::min(f.prec(), g.prec());
    TruncatedQSeries acc(prec);
    Rational kw = k.value() + Rational(w - 1);
    Rational lw = l.value() + Rational(w - 1);
    for (long j = 0; j <= w; ++j) {
        Rational c = gen_binomial(kw, w - j) * gen_binomial(lw, j);
        if (j % 2 == 1) c = -c;
        if (c == 0) continue;
        TruncatedQSeries term = multiply(f.hyperderivative(j), g.hyperderivative(w - j));
        acc = linear_combine(RingValue(1), acc, RingValue(c), term);
    }
    return acc;
}

FormExpansion bracket(const FormExpansion& f, const FormExpansion& g, long w) {
    TruncatedQSeries s = bracket_series(f.series, HalfInteger{f.twice_weight}, g.series,
                                        HalfInteger{g.twice_weight}, w);
    bool f_int = f.twice_weight % 2 == 0;
    bool g_int = g.twice_weight % 2 == 0;
    DirichletCharacter extra = DirichletCharacter::trivial(1);
    if (f_int && !g_int)
        extra = chi_minus4_power(f.twice_weight / 2);
    else if (!f_int && g_int)
        extra = chi_minus4_power(g.twice_weight / 2);
    else if (!f_int && !g_int)
        extra = chi_minus4_power((f.twice_weight + g.twice_weight) / 2);
    DirichletCharacter chi = multiply(multiply(f.character, g.character), extra);
    return FormExpansion{f.twice_weight + g.twice_weight + 4 * w,
                         lcm_long(f.level, g.level), std::move(chi), std::move(s),
                         w > 0 || f.cusp || g.cusp};
}

namespace {

// dense (deg+1) x (deg+1) grid of coefficients of a polynomial in x, y
using Grid = std::vector<std::vector<Rational>>;

Grid make_grid(long deg) { return Grid(deg + 1, std::vector<Rational>(deg + 1, Rational(0))); }

} // namespace

bool lemma1_check(long k, long w, int v) {
    if (k < 1 || w < 0 || (v != 0 && v != 1)) throw Error("lemma1_check needs k >= 1, w >= 0, v in {0,1}");
    long deg = 2 * w + v;
    Grid lhs = make_grid(deg), rhs = make_grid(deg);

    for (long j = 0; j <= w; ++j) {
        long e = 2 * w - 2 * j + v;
        Rational c = Rational(factorial(k + 2 * w - 1 + v)) /
                     Rational(factorial(j) * factorial(e) * factorial(k + j - 1));
        // c (xy)^j (x+y)^e
        for (long i = 0; i <= e; ++i) lhs[j + i][j + e - i] += c * Rational(binomial_int(e, i));
    }
    for (long j = 0; j <= deg; ++j) {
        rhs[j][deg - j] =
            Rational(binomial_int(k + 2 * w - 1 + v, j) * binomial_int(k + 2 * w - 1 + v, 2 * w - j + v));
    }
    return lhs == rhs;
}

} // namespace qmf
