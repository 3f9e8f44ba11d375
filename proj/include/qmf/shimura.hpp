#pragma once

#include <optional>

#include "qmf/forms.hpp"

namespace qmf {

/// Minimal input precision for lifting to out_prec coefficients: the
/// convolution reads a(t n^2) up to n = out_prec - 1.
long lift_required_input_prec(long t_or_D, long out_prec);

/// Shimura lift S_t of a weight K+1/2 form with character X:
///   A_t(n) = sum_{d | n} (X chi_{-4}^K chi_t)(d) d^{K-1} a(t (n/d)^2),
/// the Dirichlet-series definition read off coefficient-wise as a finite
/// divisor convolution. A_t(0) = 0; the same formula serves non-cuspidal
/// inputs. Output weight 2K, character X^2.
FormExpansion shimura_lift(const FormExpansion& f, long t, long out_prec);

/// Unnormalized plus-space convolution: the series a(|D|) A_D(n), i.e.
///   U(n) = sum_{d | n} (X chi_D)(d) d^{K-1} a(D (n/d)^2).
FormExpansion kohnen_convolution(const FormExpansion& f, long D, long out_prec);

/// Kohnen lift S_D^+ for D > 0 fundamental: the convolution above divided by
/// the normalizer a(D) (VanishingNormalizer when it is 0). An explicit
/// rational normalizer may be supplied instead, for instances where the D-th
/// input coefficient degenerates to 0 while the lift itself is still the
/// meaningful object.
FormExpansion kohnen_lift(const FormExpansion& f, long D, long out_prec,
                          std::optional<Rational> normalizer = std::nullopt);

} // namespace qmf
