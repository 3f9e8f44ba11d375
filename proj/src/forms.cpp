#include "qmf/forms.hpp"

#include <algorithm>
#include <set>

namespace qmf {

namespace {

// prod_{n>=1} (1 - q^{delta n}) by the pentagonal number theorem
TruncatedQSeries euler_product(long delta, long prec) {
    TruncatedQSeries e(prec);
    e.set_coefficient(0, RingValue(1));
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (delta * g1 >= prec && delta * g2 >= prec) break;
        RingValue sign((k % 2 == 1) ? -1 : 1);
        if (delta * g1 < prec) e.set_coefficient(delta * g1, sign);
        if (delta * g2 < prec) e.set_coefficient(delta * g2, sign);
    }
    return e;
}

TruncatedQSeries pow_truncated(const TruncatedQSeries& base, long e, long prec) {
    TruncatedQSeries acc(prec);
    acc.set_coefficient(0, RingValue(1));
    TruncatedQSeries sq = base.truncated(prec);
    while (e > 0) {
        if (e & 1) acc = multiply(acc, sq).truncated(prec);
        e >>= 1;
        if (e) sq = multiply(sq, sq).truncated(prec);
    }
    return acc;
}

} // namespace

FormExpansion eta_quotient(const EtaQuotientSpec& spec, long prec) {
    if (prec < 1) throw Error("eta_quotient needs prec >= 1");
    std::set<long> seen;
    long weight_sum = 0, exponent_sum = 0, level = 1;
    for (const auto& [scale, exponent] : spec) {
        if (scale < 1) throw Error("eta scale must be >= 1");
        if (exponent == 0) throw Error("eta exponent must be nonzero");
        if (!seen.insert(scale).second) throw Error("eta scales must be distinct");
        weight_sum += exponent;
        exponent_sum += scale * exponent;
        level = lcm_long(level, scale);
    }
    if (exponent_sum % 24 != 0)
        throw NonIntegralEtaExponent("eta quotient has leading exponent " +
                                     std::to_string(exponent_sum) + "/24");
    long lead = exponent_sum / 24;
    if (lead < 0) throw Error("eta quotient with a pole at q = 0 is not representable");

    FormExpansion f{weight_sum, level, DirichletCharacter::trivial(1), TruncatedQSeries(prec),
                    lead >= 1};
    if (lead >= prec) return f;

    long work = prec - lead;
    TruncatedQSeries acc(work);
    acc.set_coefficient(0, RingValue(1));
    for (const auto& [scale, exponent] : spec) {
        TruncatedQSeries e = euler_product(scale, work);
        if (exponent < 0) e = invert_unit(e);
        acc = multiply(acc, pow_truncated(e, std::labs(exponent), work)).truncated(work);
    }
    for (long n = 0; n < work; ++n)
        if (!acc.coefficient(n).is_zero()) f.series.set_coefficient(lead + n, acc.coefficient(n));
    return f;
}

FormExpansion theta_series(const DirichletCharacter& psi, long d, long prec) {
    if (d < 1) throw Error("theta_series needs d >= 1");
    if (prec < 1) throw Error("theta_series needs prec >= 1");
    int v = psi.parity();
    TruncatedQSeries s(prec);
    if (psi.modulus() == 1 && v == 0) s.set_coefficient(0, RingValue(1));
    for (long n = 1; d * n * n < prec; ++n) {
        RingValue val = psi.eval(n);
        if (val.is_zero()) continue;
        RingValue weight(v == 0 ? Integer(2) : Integer(2) * Integer(n));
        s.set_coefficient(d * n * n, weight * val);
    }
    long r = psi.modulus();
    DirichletCharacter chi = multiply(multiply(psi, chi_quadratic(d)), chi_minus4_power(v));
    return FormExpansion{2 * v + 1, 4 * r * r * d, std::move(chi), std::move(s), v == 1};
}

FormExpansion eisenstein(long k, long prec) {
    if (k < 2 || k % 2 != 0) throw Error("eisenstein needs even k >= 2");
    TruncatedQSeries s(prec);
    s.set_coefficient(0, RingValue(-bernoulli(k) / Rational(2 * k)));
    for (long n = 1; n < prec; ++n) {
        Integer sigma(0);
        for (long d : divisors(n)) sigma += int_pow(Integer(d), static_cast<unsigned long>(k - 1));
        s.set_coefficient(n, RingValue(std::move(sigma)));
    }
    return FormExpansion{2 * k, 1, DirichletCharacter::trivial(1), std::move(s), false};
}

FormExpansion twist(const FormExpansion& f, const DirichletCharacter& psi) {
    TruncatedQSeries s(f.prec());
    for (long n = 0; n < f.prec(); ++n) {
        const RingValue& c = f.series.coefficient(n);
        if (c.is_zero()) continue;
        RingValue v = psi.eval(n) * c;
        if (!v.is_zero()) s.set_coefficient(n, std::move(v));
    }
    long r = psi.modulus();
    DirichletCharacter chi = multiply(f.character, multiply(psi, psi));
    return FormExpansion{f.twice_weight, f.level * r * r, std::move(chi), std::move(s), f.cusp};
}

FormExpansion dilate_form(const FormExpansion& f, long l) {
    return FormExpansion{f.twice_weight, lcm_long(f.level, l * f.level), f.character,
                         f.series.dilated(l), f.cusp};
}

FormExpansion apply_aI_bB(const FormExpansion& f, const RingValue& a, const RingValue& b, long l) {
    if (l < 1) throw Error("B(l) needs l >= 1");
    TruncatedQSeries s = linear_combine(a, f.series, b, f.series.dilated(l));
    return FormExpansion{f.twice_weight, lcm_long(f.level, l * f.level), f.character, std::move(s),
                         f.cusp};
}

FormExpansion hecke_tp(const FormExpansion& f, long p) {
    if (f.twice_weight % 2 != 0)
        throw HalfIntegralWeightUnsupported("Hecke T_p acts on integral weight only");
    if (!is_prime(p)) throw Error("hecke_tp needs a prime p");
    long k = f.twice_weight / 2;
    long out_prec = (f.prec() - 1) / p + 1;
    RingValue chi_p_weight = f.character.eval(p) * RingValue(int_pow(Integer(p), static_cast<unsigned long>(k - 1)));
    TruncatedQSeries s(out_prec);
    for (long n = 0; n < out_prec; ++n) {
        RingValue v = f.series.coefficient(p * n);
        if (n % p == 0) v += chi_p_weight * f.series.coefficient(n / p);
        if (!v.is_zero()) s.set_coefficient(n, std::move(v));
    }
    return FormExpansion{f.twice_weight, f.level, f.character, std::move(s), f.cusp};
}

EigenformCheck check_eigenform(const FormExpansion& f, long bound) {
    if (f.twice_weight % 2 != 0)
        throw HalfIntegralWeightUnsupported("eigenform relation needs integral weight");
    if (bound < 1) throw Error("check_eigenform needs bound >= 1");
    if (bound * bound >= f.prec())
        throw PrecisionExceeded("check_eigenform to bound " + std::to_string(bound) +
                                " needs precision > " + std::to_string(bound * bound));
    long k = f.twice_weight / 2;
    if (f.series.coefficient(1) != RingValue(1)) return {false, 1, 1};
    for (long m = 1; m <= bound; ++m) {
        for (long n = 1; n <= bound; ++n) {
            RingValue rhs(0);
            for (long d : divisors(gcd_long(m, n))) {
                long mu = moebius(d);
                if (mu == 0) continue;
                RingValue term = f.character.eval(d);
                if (term.is_zero()) continue;
                Integer scale = Integer(mu) * int_pow(Integer(d), static_cast<unsigned long>(k - 1));
                term *= RingValue(scale);
                rhs += term * f.series.coefficient(m / d) * f.series.coefficient(n / d);
            }
            if (f.series.coefficient(m * n) != rhs) return {false, m, n};
        }
    }
    return {true, 0, 0};
}

PlusSpaceCheck check_plus_space(const FormExpansion& f, long k_plus_v) {
    if (f.twice_weight % 2 == 0)
        throw HalfIntegralWeightUnsupported("plus-space condition applies to half-integral weight");
    bool even = (k_plus_v % 2 == 0);
    for (long n = 0; n < f.prec(); ++n) {
        if (f.series.coefficient(n).is_zero()) continue;
        long r = n % 4;
        bool ok = even ? (r == 0 || r == 1) : (r == 0 || r == 3);
        if (!ok) return {false, n};
    }
    return {true, 0};
}

FormExpansion builtin_form(const std::string& name, long prec) {
    if (name == "delta") return eta_quotient({{1, 24}}, prec);
    if (name == "f4l5") return eta_quotient({{1, 4}, {5, 4}}, prec);
    if (name.size() > 1 && name[0] == 'G') {
        long k = std::stol(name.substr(1));
        return eisenstein(k, prec);
    }
    throw Error("unknown builtin form: " + name);
}

} // namespace qmf
