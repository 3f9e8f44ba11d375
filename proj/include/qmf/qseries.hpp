#pragma once

#include <vector>

#include "qmf/exact_ring.hpp"

namespace qmf {

/// Formal q-expansion known modulo q^prec: coefficients c_0..c_{prec-1}.
///
/// Precision is tracked pessimistically and never silently extended; reading
/// past it raises PrecisionExceeded instead of fabricating zeros. The
/// normalized derivative D = q d/dq scales c_n by n, which is the exact
/// q-coordinate form of (2 pi i)^{-1} d/dz.
class TruncatedQSeries {
public:
    explicit TruncatedQSeries(long prec);
    explicit TruncatedQSeries(std::vector<RingValue> coeffs);

    static TruncatedQSeries zero(long prec) { return TruncatedQSeries(prec); }
    /// c * q^n + O(q^prec)
    static TruncatedQSeries monomial(const RingValue& c, long n, long prec);

    long prec() const { return prec_; }
    const std::vector<RingValue>& coeffs() const { return coeffs_; }

    /// c_n; throws PrecisionExceeded when n >= prec.
    const RingValue& coefficient(long n) const;
    void set_coefficient(long n, RingValue v);

    /// 1 for all-rational coefficients, else the common cyclotomic order.
    long ring_order() const { return ring_order_; }

    /// Index of the first nonzero coefficient; prec for the zero series.
    long order_of_vanishing() const;
    bool is_zero() const { return order_of_vanishing() == prec_; }

    /// Truncation to a smaller precision (never an extension).
    TruncatedQSeries truncated(long new_prec) const;

    /// Coefficient n goes to n^j c_n; j = 0 is the identity.
    TruncatedQSeries hyperderivative(long j) const;

    /// f(q) -> f(q^l): coefficient at l*n is c_n; output precision l*prec.
    TruncatedQSeries dilated(long l) const;

    TruncatedQSeries scaled(const RingValue& a) const;

    friend bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b);

private:
    void compute_ring_order();

    long prec_;
    std::vector<RingValue> coeffs_;
    long ring_order_ = 1;
};

/// a*f + b*g to the smaller of the two precisions.
TruncatedQSeries linear_combine(const RingValue& a, const TruncatedQSeries& f,
                                const RingValue& b, const TruncatedQSeries& g);

/// Cauchy product. Output precision is
///   min(prec(f) + ord(g), prec(g) + ord(f), prec(f) + prec(g) - 1),
/// the largest number of coefficients the truncated inputs determine.
TruncatedQSeries multiply(const TruncatedQSeries& f, const TruncatedQSeries& g);

/// Inverse of a series with a nonzero rational constant term.
TruncatedQSeries invert_unit(const TruncatedQSeries& f);

/// Values agree on indices [from, to); both series must reach `to`.
bool equal_on_range(const TruncatedQSeries& a, const TruncatedQSeries& b, long from, long to);

} // namespace qmf
