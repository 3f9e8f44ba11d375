#pragma once

#include <optional>
#include <string>

#include "qmf/rankin_cohen.hpp"
#include "qmf/shimura.hpp"

namespace qmf {

/// g(z) = sum over unitary divisors d of r of
///   psi_d(-1) [f(rz/d), f(dz)]_order,
/// psi_d the product of the prime-power components of psi at primes
/// dividing d. Result truncated to prec.
FormExpansion build_g(const FormExpansion& f, long r, const DirichletCharacter& psi, long order,
                      long prec);

struct TheoremSides {
    FormExpansion lhs;
    FormExpansion rhs;
    /// Set when the lifted bracket is a w = 0 product of two non-cuspidal
    /// factors, where the lift exists only through its convolution formula.
    bool extended_definition = false;
};

/// Minimal precision of f for the corresponding builder.
long thm1_required_f_prec(long r, long t, long prec, long eigen_bound);
long thm2_required_f_prec(long r, long D, long prec, long eigen_bound);
long thm3_required_f_prec(long r, long t, long prec, long eigen_bound);

/// lhs: S_t of [f(4rz), theta_psi(tz)]_w carrying the ambient character
///   psi chi chi_t chi_{-4}^{k+v} induced to modulus 4 N' r^2.
/// rhs: binom(2w+v,w) binom(k+2w+v-1,k+w-1)^{-1} a(t) t^w
///   (g_psi - psi(2) chi(2) 2^{k+2w+v-1} g_psi(2z)).
TheoremSides thm1_sides(const FormExpansion& f, long N, const DirichletCharacter& chi,
                        const DirichletCharacter& psi, long t, long w, long prec,
                        long eigen_bound = 10);

/// lhs: S_D^+ of [f(4rz), theta_psi(Dz)]_w with ambient character
///   psi chi chi_D at modulus N' r^2, normalized by the eigenform
///   coefficient a(D) (the input form's own D-th coefficient is
///   binom-const * a(D) * c(1), which vanishes on every cuspidal instance).
/// rhs: binom(2w+v,w) binom(k+2w+v-1,k+w-1)^{-1} D^w g_psi.
TheoremSides thm2_sides(const FormExpansion& f, long N, const DirichletCharacter& chi,
                        const DirichletCharacter& psi, long D, long w, long prec,
                        long eigen_bound = 10);

/// lhs: S_t of [f(4rz), theta(tz)]_w with the modulus-M induced character.
/// rhs: binom(2w,w) binom(k+2w-1,k+w-1)^{-1} a(t) t^w
///   sum_{d | r} [f(rz/d), f_{chi_{0,r/d}}(dz)]_{2w}
///     | prod (I - chi(p) p^{k+2w-1} B(p)),
/// the product over primes p dividing 2M and not dividing r/d (the Euler
/// factors removed between the modulus-(r/d) and modulus-4M L-series).
TheoremSides thm3_sides(const FormExpansion& f, long N, const DirichletCharacter& chi, long r,
                        long t, long w, long M, long prec, long eigen_bound = 10);

struct VerificationReport {
    std::string statement;
    std::string parameters;
    long compared = 0;
    std::string compared_units = "coefficients";
    bool pass = false;
    bool extended_definition = false;
    std::optional<long> mismatch_index;
    std::string mismatch_lhs, mismatch_rhs;
    std::string error;

    std::string render() const;
};

/// First index in [from, to) where the series differ.
std::optional<long> first_mismatch(const TruncatedQSeries& a, const TruncatedQSeries& b, long from,
                                   long to);

/// Compares sides coefficient-by-coefficient on indices 1..prec-1.
VerificationReport compare_sides(const std::string& statement, const std::string& parameters,
                                 const TheoremSides& sides, long prec);

VerificationReport verify_thm1(const FormExpansion& f, long N, const DirichletCharacter& chi,
                               const DirichletCharacter& psi, long t, long w, long prec,
                               long eigen_bound = 10);
VerificationReport verify_thm2(const FormExpansion& f, long N, const DirichletCharacter& chi,
                               const DirichletCharacter& psi, long D, long w, long prec,
                               long eigen_bound = 10);
VerificationReport verify_thm3(const FormExpansion& f, long N, const DirichletCharacter& chi,
                               long r, long t, long w, long M, long prec, long eigen_bound = 10);
/// Exact polynomial identity over the grid k in 1..kmax, w in 1..wmax, v in {0,1}.
VerificationReport verify_lemma1(long kmax, long wmax);
/// S_1(Delta(4z) theta(z)) against the general right-hand side.
VerificationReport verify_selberg(long prec);

} // namespace qmf
