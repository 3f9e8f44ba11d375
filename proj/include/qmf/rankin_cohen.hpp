#pragma once

#include "qmf/forms.hpp"

namespace qmf {

/// Weight that may be integral or half-integral, stored as twice its value.
struct HalfInteger {
    long twice;

    bool is_integral() const { return twice % 2 == 0; }
    Rational value() const {
        Rational v(twice, 2);
        v.canonicalize();
        return v;
    }
};

/// Generalized binomial coefficient: prod_{i=0}^{j-1} (x - i) / j!.
Rational gen_binomial(const Rational& x, long j);

/// w-th Rankin-Cohen bracket in q-coordinates:
///   sum_{j=0}^w (-1)^j binom(k+w-1, w-j) binom(l+w-1, j) D^j f D^{w-j} g,
/// with D = q d/dq absorbing the (2 pi i)^{-w} normalization exactly.
/// Output weight k + l + 2w; output precision is the smaller input precision.
FormExpansion bracket(const FormExpansion& f, const FormExpansion& g, long w);

/// Series-level bracket with explicitly supplied weights.
TruncatedQSeries bracket_series(const TruncatedQSeries& f, HalfInteger k,
                                const TruncatedQSeries& g, HalfInteger l, long w);

/// Exact bivariate polynomial identity:
///   sum_{j=0}^w (k+2w-1+v)!/(j! (2w-2j+v)! (k+j-1)!) (xy)^j (x+y)^{2w-2j+v}
///     = sum_{j=0}^{2w+v} binom(k+2w-1+v, j) binom(k+2w-1+v, 2w-j+v) x^j y^{2w-j+v}.
/// Both sides are expanded on a dense coefficient grid and compared.
bool lemma1_check(long k, long w, int v);

} // namespace qmf
