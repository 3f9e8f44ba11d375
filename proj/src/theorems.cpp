#include "qmf/theorems.hpp"

#include <algorithm>
#include <sstream>

namespace qmf {

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

void require_f_prec(const FormExpansion& f, long required) {
    if (f.prec() < required)
        throw InsufficientPrecision("f needs precision >= " + std::to_string(required) +
                                        ", have " + std::to_string(f.prec()),
                                    required);
}

void check_eigenform_hypothesis(const FormExpansion& f, long bound) {
    if (f.twice_weight % 2 != 0)
        throw HypothesisViolated("f must have integral weight");
    auto check = check_eigenform(f, bound);
    if (!check.pass)
        throw HypothesisViolated("f is not a normalized eigenform: relation fails at (m,n)=(" +
                                 std::to_string(check.m) + "," + std::to_string(check.n) + ")");
}

Rational bracket_constant(long k, long w, int v) {
    // binom(2w+v, w) binom(k+2w+v-1, k+w-1)^{-1}
    return Rational(binomial_int(2 * w + v, w)) /
           Rational(binomial_int(k + 2 * w + v - 1, k + w - 1));
}

// [f(4rz), theta]_w with the supplied ambient character and level attached
FormExpansion ambient_bracket(const FormExpansion& f, const FormExpansion& theta, long r, long w,
                              long needed_prec, const DirichletCharacter& ambient, long ambient_level) {
    if (4 * r * f.prec() < needed_prec)
        throw InsufficientPrecision("f needs precision >= " +
                                        std::to_string(ceil_div(needed_prec, 4 * r)) +
                                        " for the lifted bracket",
                                    ceil_div(needed_prec, 4 * r));
    FormExpansion b = bracket(dilate_form(f, 4 * r), theta, w);
    b.character = ambient;
    b.level = ambient_level;
    return b;
}

} // namespace

FormExpansion build_g(const FormExpansion& f, long r, const DirichletCharacter& psi, long order,
                      long prec) {
    if (psi.modulus() != r) throw Error("build_g needs modulus(psi) == r");
    if (order < 0) throw Error("build_g needs order >= 0");
    require_f_prec(f, prec);
    TruncatedQSeries acc(prec);
    long level = 1;
    for (long d : divisors(r)) {
        if (gcd_long(d, r / d) != 1) continue;
        RingValue sign = psi.component_at(d).eval(-1);
        FormExpansion term = bracket(dilate_form(f, r / d), dilate_form(f, d), order);
        acc = linear_combine(RingValue(1), acc, sign, term.series.truncated(prec));
        level = lcm_long(level, term.level);
    }
    return FormExpansion{2 * f.twice_weight + 4 * order, level,
                         multiply(f.character, f.character), std::move(acc), f.cusp};
}

long thm1_required_f_prec(long r, long t, long prec, long eigen_bound) {
    long needed = lift_required_input_prec(t, prec);
    return std::max({eigen_bound * eigen_bound + 1, prec, ceil_div(needed, 4 * r), t + 1});
}

long thm2_required_f_prec(long r, long D, long prec, long eigen_bound) {
    long needed = lift_required_input_prec(D, prec);
    return std::max({eigen_bound * eigen_bound + 1, prec, ceil_div(needed, 4 * r), D + 1});
}

long thm3_required_f_prec(long r, long t, long prec, long eigen_bound) {
    return thm1_required_f_prec(r, t, prec, eigen_bound);
}

TheoremSides thm1_sides(const FormExpansion& f, long N, const DirichletCharacter& chi,
                        const DirichletCharacter& psi, long t, long w, long prec,
                        long eigen_bound) {
    long r = psi.modulus();
    if (chi.modulus() != N) throw HypothesisViolated("chi must have modulus N");
    if (t < 1 || !is_squarefree(t)) throw HypothesisViolated("t must be squarefree and positive");
    if (N % t != 0) throw HypothesisViolated("t must divide N");
    if (gcd_long(t, r) != 1) throw HypothesisViolated("t must be coprime to the modulus of psi");
    if (w < 0) throw HypothesisViolated("w must be >= 0");

    FormExpansion fe = f;
    fe.character = chi;
    require_f_prec(fe, thm1_required_f_prec(r, t, prec, eigen_bound));
    check_eigenform_hypothesis(fe, eigen_bound);

    int v = psi.parity();
    long k = fe.twice_weight / 2;
    long K = k + 2 * w + v;
    long Nprime = N / gcd_long(N, r);
    long ambient_level = 4 * Nprime * r * r;
    DirichletCharacter ambient =
        multiply(multiply(multiply(psi, chi), chi_quadratic(t)), chi_minus4_power(k + v))
            .induced(ambient_level);

    long needed = lift_required_input_prec(t, prec);
    FormExpansion theta = theta_series(psi, t, needed);
    FormExpansion b = ambient_bracket(fe, theta, r, w, needed, ambient, ambient_level);
    FormExpansion lhs = shimura_lift(b, t, prec);

    FormExpansion g_psi = twist(build_g(fe, r, psi, 2 * w + v, prec), psi);
    RingValue two_factor = psi.eval(2) * chi.eval(2) *
                           RingValue(int_pow(Integer(2), static_cast<unsigned long>(K - 1)));
    FormExpansion rhs = apply_aI_bB(g_psi, RingValue(1), -two_factor, 2);
    RingValue scalar = RingValue(bracket_constant(k, w, v)) * fe.series.coefficient(t) *
                       RingValue(int_pow(Integer(t), static_cast<unsigned long>(w)));
    rhs.series = rhs.series.scaled(scalar);
    rhs.twice_weight = lhs.twice_weight;
    rhs.level = lhs.level;
    rhs.character = lhs.character;

    bool extended = (w == 0 && v == 0 && !fe.series.coefficient(0).is_zero());
    return TheoremSides{std::move(lhs), std::move(rhs), extended};
}

TheoremSides thm2_sides(const FormExpansion& f, long N, const DirichletCharacter& chi,
                        const DirichletCharacter& psi, long D, long w, long prec,
                        long eigen_bound) {
    long r = psi.modulus();
    if (chi.modulus() != N) throw HypothesisViolated("chi must have modulus N");
    if (N % 2 == 0) throw HypothesisViolated("N must be odd in the plus-space setting");
    if (D < 1 || !is_fundamental_discriminant(D))
        throw HypothesisViolated("D must be a positive fundamental discriminant");
    if (N % D != 0) throw HypothesisViolated("D must divide N");
    if (gcd_long(D, r) != 1) throw HypothesisViolated("D must be coprime to the modulus of psi");
    if (w < 0) throw HypothesisViolated("w must be >= 0");

    FormExpansion fe = f;
    fe.character = chi;
    require_f_prec(fe, thm2_required_f_prec(r, D, prec, eigen_bound));
    check_eigenform_hypothesis(fe, eigen_bound);

    int v = psi.parity();
    long k = fe.twice_weight / 2;
    long Nprime = N / gcd_long(N, r);
    long ambient_level = Nprime * r * r;
    DirichletCharacter ambient =
        multiply(multiply(psi, chi), DirichletCharacter::kronecker(D)).induced(ambient_level);

    long needed = lift_required_input_prec(D, prec);
    FormExpansion theta = theta_series(psi, D, needed);
    FormExpansion b = ambient_bracket(fe, theta, r, w, needed, ambient, ambient_level);

    const RingValue& aD = fe.series.coefficient(D);
    if (!aD.is_rational()) throw Error("eigenform coefficient a(D) is not rational");
    if (aD.rational() == 0) throw VanishingNormalizer("eigenform coefficient a(D) vanishes");
    FormExpansion lhs = kohnen_lift(b, D, prec, aD.rational());

    FormExpansion rhs = twist(build_g(fe, r, psi, 2 * w + v, prec), psi);
    RingValue scalar = RingValue(bracket_constant(k, w, v)) *
                       RingValue(int_pow(Integer(D), static_cast<unsigned long>(w)));
    rhs.series = rhs.series.scaled(scalar);
    rhs.twice_weight = lhs.twice_weight;
    rhs.level = lhs.level;
    rhs.character = lhs.character;

    bool extended = (w == 0 && v == 0 && !fe.series.coefficient(0).is_zero());
    return TheoremSides{std::move(lhs), std::move(rhs), extended};
}

TheoremSides thm3_sides(const FormExpansion& f, long N, const DirichletCharacter& chi, long r,
                        long t, long w, long M, long prec, long eigen_bound) {
    if (chi.modulus() != N) throw HypothesisViolated("chi must have modulus N");
    if (r < 1) throw HypothesisViolated("r must be >= 1");
    if (M % (4 * N * r) != 0) throw HypothesisViolated("M must be a multiple of 4Nr");
    if (t < 1 || !is_squarefree(t)) throw HypothesisViolated("t must be squarefree and positive");
    if (N % t != 0) throw HypothesisViolated("t must divide N");
    if (gcd_long(t, r) != 1) throw HypothesisViolated("t must be coprime to r");
    if (w < 0) throw HypothesisViolated("w must be >= 0");

    FormExpansion fe = f;
    fe.character = chi;
    require_f_prec(fe, thm3_required_f_prec(r, t, prec, eigen_bound));
    check_eigenform_hypothesis(fe, eigen_bound);

    long k = fe.twice_weight / 2;
    long K = k + 2 * w;
    DirichletCharacter ambient =
        multiply(multiply(chi, chi_quadratic(t)), chi_minus4_power(k)).induced(M);

    long needed = lift_required_input_prec(t, prec);
    FormExpansion theta = theta_series(DirichletCharacter::trivial(1), t, needed);
    FormExpansion b = ambient_bracket(fe, theta, r, w, needed, ambient, M);
    FormExpansion lhs = shimura_lift(b, t, prec);

    TruncatedQSeries acc(prec);
    for (long d : divisors(r)) {
        FormExpansion left = dilate_form(fe, r / d);
        FormExpansion right = dilate_form(twist(fe, DirichletCharacter::trivial(r / d)), d);
        FormExpansion term = bracket(left, right, 2 * w);
        term.series = term.series.truncated(prec);
        for (const auto& pp : factorize(2 * M)) {
            long p = pp.prime;
            if ((r / d) % p == 0) continue;
            RingValue factor = chi.eval(p) *
                               RingValue(int_pow(Integer(p), static_cast<unsigned long>(K - 1)));
            term = apply_aI_bB(term, RingValue(1), -factor, p);
        }
        acc = linear_combine(RingValue(1), acc, RingValue(1), term.series);
    }
    RingValue scalar = RingValue(bracket_constant(k, w, 0)) * fe.series.coefficient(t) *
                       RingValue(int_pow(Integer(t), static_cast<unsigned long>(w)));
    FormExpansion rhs{lhs.twice_weight, lhs.level, lhs.character, acc.scaled(scalar), true};

    bool extended = (w == 0 && !fe.series.coefficient(0).is_zero());
    return TheoremSides{std::move(lhs), std::move(rhs), extended};
}

// ---------------------------------------------------------------------------
// verification reports

std::optional<long> first_mismatch(const TruncatedQSeries& a, const TruncatedQSeries& b, long from,
                                   long to) {
    for (long n = from; n < to; ++n)
        if (a.coefficient(n) != b.coefficient(n)) return n;
    return std::nullopt;
}

std::string VerificationReport::render() const {
    std::ostringstream out;
    out << "verification: " << statement << "\n";
    out << "parameters: " << parameters << "\n";
    if (!error.empty()) {
        out << "error: " << error << "\n";
        out << "result: ERROR\n";
        return out.str();
    }
    out << "compared: " << compared << " " << compared_units << "\n";
    if (extended_definition) out << "note: lift applied through its extended (non-cuspidal) definition\n";
    if (mismatch_index)
        out << "first mismatch: n=" << *mismatch_index << " lhs=" << mismatch_lhs
            << " rhs=" << mismatch_rhs << "\n";
    out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

VerificationReport compare_sides(const std::string& statement, const std::string& parameters,
                                 const TheoremSides& sides, long prec) {
    VerificationReport rep;
    rep.statement = statement;
    rep.parameters = parameters;
    rep.extended_definition = sides.extended_definition;
    rep.compared = prec - 1;
    auto mismatch = first_mismatch(sides.lhs.series, sides.rhs.series, 1, prec);
    if (mismatch) {
        rep.pass = false;
        rep.mismatch_index = *mismatch;
        rep.mismatch_lhs = sides.lhs.series.coefficient(*mismatch).str();
        rep.mismatch_rhs = sides.rhs.series.coefficient(*mismatch).str();
    } else {
        rep.pass = true;
    }
    return rep;
}

namespace {

template <typename Builder>
VerificationReport run_verification(const std::string& statement, const std::string& parameters,
                                    long prec, Builder build) {
    try {
        return compare_sides(statement, parameters, build(), prec);
    } catch (const Error& e) {
        VerificationReport rep;
        rep.statement = statement;
        rep.parameters = parameters;
        rep.pass = false;
        rep.error = e.what();
        return rep;
    }
}

} // namespace

VerificationReport verify_thm1(const FormExpansion& f, long N, const DirichletCharacter& chi,
                               const DirichletCharacter& psi, long t, long w, long prec,
                               long eigen_bound) {
    std::ostringstream p;
    p << "N=" << N << " chi=" << chi.spec() << " psi=" << psi.spec() << " t=" << t << " w=" << w
      << " prec=" << prec;
    return run_verification("thm1", p.str(), prec,
                            [&] { return thm1_sides(f, N, chi, psi, t, w, prec, eigen_bound); });
}

VerificationReport verify_thm2(const FormExpansion& f, long N, const DirichletCharacter& chi,
                               const DirichletCharacter& psi, long D, long w, long prec,
                               long eigen_bound) {
    std::ostringstream p;
    p << "N=" << N << " chi=" << chi.spec() << " psi=" << psi.spec() << " D=" << D << " w=" << w
      << " prec=" << prec;
    return run_verification("thm2", p.str(), prec,
                            [&] { return thm2_sides(f, N, chi, psi, D, w, prec, eigen_bound); });
}

VerificationReport verify_thm3(const FormExpansion& f, long N, const DirichletCharacter& chi,
                               long r, long t, long w, long M, long prec, long eigen_bound) {
    std::ostringstream p;
    p << "N=" << N << " chi=" << chi.spec() << " r=" << r << " t=" << t << " w=" << w
      << " M=" << M << " prec=" << prec;
    return run_verification("thm3", p.str(), prec,
                            [&] { return thm3_sides(f, N, chi, r, t, w, M, prec, eigen_bound); });
}

VerificationReport verify_lemma1(long kmax, long wmax) {
    VerificationReport rep;
    rep.statement = "lemma1";
    rep.compared_units = "grid cases";
    std::ostringstream p;
    p << "k=1.." << kmax << " w=1.." << wmax << " v=0,1";
    rep.parameters = p.str();
    rep.pass = true;
    for (long k = 1; k <= kmax; ++k)
        for (long w = 1; w <= wmax; ++w)
            for (int v = 0; v <= 1; ++v) {
                ++rep.compared;
                if (!lemma1_check(k, w, v)) {
                    rep.pass = false;
                    rep.mismatch_index = rep.compared;
                    rep.mismatch_lhs = "k=" + std::to_string(k) + " w=" + std::to_string(w) +
                                       " v=" + std::to_string(v);
                    rep.mismatch_rhs = "polynomial identity fails";
                    return rep;
                }
            }
    return rep;
}

VerificationReport verify_selberg(long prec) {
    long eigen_bound = 10;
    long f_prec = thm1_required_f_prec(1, 1, prec, eigen_bound);
    FormExpansion delta = eta_quotient({{1, 24}}, f_prec);
    auto trivial1 = DirichletCharacter::trivial(1);
    auto rep = run_verification("selberg", "f=builtin:delta t=1 w=0 prec=" + std::to_string(prec),
                                prec, [&] {
                                    return thm1_sides(delta, 1, trivial1, trivial1, 1, 0, prec,
                                                      eigen_bound);
                                });
    return rep;
}

} // namespace qmf
