#pragma once

#include <string>
#include <vector>

#include "qmf/characters.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

/// A q-expansion tagged with twice its weight (odd values encode the
/// half-integral weight (twice_weight)/2), a level and a character. The
/// metadata is carried, not verified; operators update it by the usual
/// bookkeeping rules.
struct FormExpansion {
    long twice_weight;
    long level;
    DirichletCharacter character;
    TruncatedQSeries series;
    bool cusp = false;

    long prec() const { return series.prec(); }
    const RingValue& coefficient(long n) const { return series.coefficient(n); }
};

struct EtaFactor {
    long scale;    // delta
    long exponent; // r_delta, nonzero
};
using EtaQuotientSpec = std::vector<EtaFactor>;

/// q^{sum(delta r_delta)/24} prod_delta prod_{n>=1} (1-q^{delta n})^{r_delta}.
/// Requires sum(delta r_delta) == 0 mod 24 (NonIntegralEtaExponent otherwise);
/// negative exponents go through exact inversion of the unit Euler products.
FormExpansion eta_quotient(const EtaQuotientSpec& spec, long prec);

/// theta_psi(dz) = sum_{n in Z} n^v psi(n) q^{d n^2}, v the parity of psi.
/// Weight v + 1/2, level 4 r^2 d, character psi chi_d chi_{-4}^v.
FormExpansion theta_series(const DirichletCharacter& psi, long d, long prec);

/// G_k = -B_k/(2k) + sum_{n>=1} sigma_{k-1}(n) q^n, weight k, level 1.
/// k = 2 is allowed as a quasi-form.
FormExpansion eisenstein(long k, long prec);

/// Coefficient-wise multiplication by psi(n); character gains psi^2,
/// level gains a factor of modulus(psi)^2.
FormExpansion twist(const FormExpansion& f, const DirichletCharacter& psi);

/// f(z) -> f(lz) (the B(l) operator); precision scales by l.
FormExpansion dilate_form(const FormExpansion& f, long l);

/// f | (aI + bB(l)) = a f(z) + b f(lz).
FormExpansion apply_aI_bB(const FormExpansion& f, const RingValue& a, const RingValue& b, long l);

/// Hecke T_p on integral weight: b(n) = a(pn) + chi(p) p^{k-1} a(n/p).
/// Output precision floor((prec-1)/p) + 1.
FormExpansion hecke_tp(const FormExpansion& f, long p);

struct EigenformCheck {
    bool pass = true;
    long m = 0, n = 0; // first violating pair when !pass
};

/// a(1) = 1 and a(mn) = sum_{d | gcd(m,n)} mu(d) chi(d) d^{k-1} a(m/d) a(n/d)
/// for all m, n <= bound. Needs bound^2 < prec.
EigenformCheck check_eigenform(const FormExpansion& f, long bound);

struct PlusSpaceCheck {
    bool pass = true;
    long n = 0; // first violating index when !pass
};

/// Every nonzero coefficient index n satisfies (-1)^{k_plus_v} n == 0,1 mod 4.
PlusSpaceCheck check_plus_space(const FormExpansion& f, long k_plus_v);

/// Registry used by the CLI: builtin:delta, builtin:f4l5, builtin:G<k>.
FormExpansion builtin_form(const std::string& name, long prec);

} // namespace qmf
