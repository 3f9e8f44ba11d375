#include "qmf/shimura.hpp"

namespace qmf {

long lift_required_input_prec(long t_or_D, long out_prec) {
    return t_or_D * (out_prec - 1) * (out_prec - 1) + 1;
}

namespace {

long half_integral_k(const FormExpansion& f) {
    if (f.twice_weight % 2 == 0)
        throw HalfIntegralWeightUnsupported("lift input must have half-integral weight");
    return (f.twice_weight - 1) / 2;
}

void require_input_prec(const FormExpansion& f, long t_or_D, long out_prec) {
    if (out_prec < 1) throw Error("lift output precision must be >= 1");
    long required = lift_required_input_prec(t_or_D, out_prec);
    if (f.prec() < required)
        throw InsufficientPrecision(
            "lift to " + std::to_string(out_prec) + " coefficients needs input precision >= " +
                std::to_string(required) + ", have " + std::to_string(f.prec()),
            required);
}

// sum_{d | n} chi(d) d^{K-1} a(s (n/d)^2)
TruncatedQSeries divisor_convolution(const FormExpansion& f, const DirichletCharacter& chi,
                                     long K, long s, long out_prec) {
    TruncatedQSeries out(out_prec);
    for (long n = 1; n < out_prec; ++n) {
        RingValue sum(0);
        for (long d : divisors(n)) {
            RingValue c = chi.eval(d);
            if (c.is_zero()) continue;
            long m = n / d;
            const RingValue& a = f.series.coefficient(s * m * m);
            if (a.is_zero()) continue;
            sum += c * RingValue(int_pow(Integer(d), static_cast<unsigned long>(K - 1))) * a;
        }
        if (!sum.is_zero()) out.set_coefficient(n, std::move(sum));
    }
    return out;
}

} // namespace

FormExpansion shimura_lift(const FormExpansion& f, long t, long out_prec) {
    if (t < 1 || !is_squarefree(t)) throw NotSquarefree("Shimura lift needs squarefree t >= 1");
    long K = half_integral_k(f);
    require_input_prec(f, t, out_prec);
    DirichletCharacter chi =
        multiply(multiply(f.character, chi_minus4_power(K)), chi_quadratic(t));
    TruncatedQSeries out = divisor_convolution(f, chi, K, t, out_prec);
    long level = f.level % 2 == 0 ? f.level / 2 : f.level;
    return FormExpansion{4 * K, level, multiply(f.character, f.character), std::move(out), K >= 2};
}

FormExpansion kohnen_convolution(const FormExpansion& f, long D, long out_prec) {
    if (D < 1 || !is_fundamental_discriminant(D))
        throw NotFundamental("Kohnen lift needs a positive fundamental discriminant");
    long K = half_integral_k(f);
    require_input_prec(f, D, out_prec);
    DirichletCharacter chi = multiply(f.character, DirichletCharacter::kronecker(D));
    TruncatedQSeries out = divisor_convolution(f, chi, K, D, out_prec);
    return FormExpansion{4 * K, f.level, multiply(f.character, f.character), std::move(out), true};
}

FormExpansion kohnen_lift(const FormExpansion& f, long D, long out_prec,
                          std::optional<Rational> normalizer) {
    FormExpansion out = kohnen_convolution(f, D, out_prec);
    Rational nu;
    if (normalizer) {
        nu = *normalizer;
    } else {
        const RingValue& aD = f.series.coefficient(D);
        if (!aD.is_rational()) throw Error("Kohnen normalizer a(D) is not rational");
        nu = aD.rational();
    }
    if (nu == 0) throw VanishingNormalizer("Kohnen normalizer a(D) vanishes");
    TruncatedQSeries scaled(out.prec());
    for (long n = 0; n < out.prec(); ++n) {
        const RingValue& c = out.series.coefficient(n);
        if (!c.is_zero()) scaled.set_coefficient(n, c.divided_by(nu));
    }
    out.series = std::move(scaled);
    return out;
}

} // namespace qmf
