#include "qmf/qseries.hpp"

#include <algorithm>

namespace qmf {

TruncatedQSeries::TruncatedQSeries(long prec) : prec_(prec), coeffs_(prec, RingValue(0)) {
    if (prec < 1) throw Error("series precision must be >= 1");
}

TruncatedQSeries::TruncatedQSeries(std::vector<RingValue> coeffs)
    : prec_(static_cast<long>(coeffs.size())), coeffs_(std::move(coeffs)) {
    if (prec_ < 1) throw Error("series precision must be >= 1");
    compute_ring_order();
}

void TruncatedQSeries::compute_ring_order() {
    ring_order_ = 1;
    for (const auto& c : coeffs_) {
        if (c.is_rational()) continue;
        long m = c.ring_order();
        if (ring_order_ == 1) {
            ring_order_ = m;
        } else if (ring_order_ != m) {
            throw IncompatibleOrder("series mixes cyclotomic coefficients of different orders");
        }
    }
}

TruncatedQSeries TruncatedQSeries::monomial(const RingValue& c, long n, long prec) {
    TruncatedQSeries f(prec);
    if (n < 0 || n >= prec) throw PrecisionExceeded("monomial exponent outside precision");
    f.set_coefficient(n, c);
    return f;
}

const RingValue& TruncatedQSeries::coefficient(long n) const {
    if (n < 0 || n >= prec_)
        throw PrecisionExceeded("coefficient index " + std::to_string(n) +
                                " not determined at precision " + std::to_string(prec_));
    return coeffs_[n];
}

void TruncatedQSeries::set_coefficient(long n, RingValue v) {
    if (n < 0 || n >= prec_) throw PrecisionExceeded("coefficient index outside precision");
    coeffs_[n] = std::move(v);
    if (!coeffs_[n].is_rational()) {
        long m = coeffs_[n].ring_order();
        if (ring_order_ == 1)
            ring_order_ = m;
        else if (ring_order_ != m)
            throw IncompatibleOrder("series mixes cyclotomic coefficients of different orders");
    }
}

long TruncatedQSeries::order_of_vanishing() const {
    for (long n = 0; n < prec_; ++n)
        if (!coeffs_[n].is_zero()) return n;
    return prec_;
}

TruncatedQSeries TruncatedQSeries::truncated(long new_prec) const {
    if (new_prec > prec_)
        throw PrecisionExceeded("cannot extend a series from precision " + std::to_string(prec_) +
                                " to " + std::to_string(new_prec));
    TruncatedQSeries out(new_prec);
    for (long n = 0; n < new_prec; ++n) out.set_coefficient(n, coeffs_[n]);
    return out;
}

TruncatedQSeries TruncatedQSeries::hyperderivative(long j) const {
    if (j < 0) throw Error("hyperderivative order must be >= 0");
    if (j == 0) return *this;
    TruncatedQSeries out(prec_);
    for (long n = 0; n < prec_; ++n) {
        if (coeffs_[n].is_zero()) continue;
        out.set_coefficient(n, RingValue(int_pow(Integer(n), static_cast<unsigned long>(j))) * coeffs_[n]);
    }
    return out;
}

TruncatedQSeries TruncatedQSeries::dilated(long l) const {
    if (l < 1) throw Error("dilation factor must be >= 1");
    if (l == 1) return *this;
    TruncatedQSeries out(l * prec_);
    for (long n = 0; n < prec_; ++n)
        if (!coeffs_[n].is_zero()) out.set_coefficient(l * n, coeffs_[n]);
    return out;
}

TruncatedQSeries TruncatedQSeries::scaled(const RingValue& a) const {
    TruncatedQSeries out(prec_);
    if (a.is_zero()) return out;
    for (long n = 0; n < prec_; ++n)
        if (!coeffs_[n].is_zero()) out.set_coefficient(n, a * coeffs_[n]);
    return out;
}

bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b) {
    if (a.prec_ != b.prec_) return false;
    for (long n = 0; n < a.prec_; ++n)
        if (a.coeffs_[n] != b.coeffs_[n]) return false;
    return true;
}

TruncatedQSeries linear_combine(const RingValue& a, const TruncatedQSeries& f,
                                const RingValue& b, const TruncatedQSeries& g) {
    long prec = std::min(f.prec(), g.prec());
    TruncatedQSeries out(prec);
    for (long n = 0; n < prec; ++n) {
        RingValue v = a * f.coefficient(n) + b * g.coefficient(n);
        if (!v.is_zero()) out.set_coefficient(n, std::move(v));
    }
    return out;
}

TruncatedQSeries multiply(const TruncatedQSeries& f, const TruncatedQSeries& g) {
    long ord_f = f.order_of_vanishing();
    long ord_g = g.order_of_vanishing();
    long prec = std::min({f.prec() + ord_g, g.prec() + ord_f, f.prec() + g.prec() - 1});
    TruncatedQSeries out(prec);
    std::vector<RingValue> acc(prec, RingValue(0));
    for (long i = ord_f; i < f.prec(); ++i) {
        if (i >= prec) break;
        const RingValue& fi = f.coefficient(i);
        if (fi.is_zero()) continue;
        long jmax = std::min(g.prec(), prec - i);
        for (long j = ord_g; j < jmax; ++j) {
            const RingValue& gj = g.coefficient(j);
            if (gj.is_zero()) continue;
            acc[i + j] += fi * gj;
        }
    }
    for (long n = 0; n < prec; ++n)
        if (!acc[n].is_zero()) out.set_coefficient(n, std::move(acc[n]));
    return out;
}

TruncatedQSeries invert_unit(const TruncatedQSeries& f) {
    const RingValue& c0 = f.coefficient(0);
    if (!c0.is_rational() || c0.is_zero())
        throw Error("series inversion needs a nonzero rational constant term");
    Rational u = c0.rational();
    long prec = f.prec();
    std::vector<RingValue> b(prec, RingValue(0));
    b[0] = RingValue(Rational(1) / u);
    for (long n = 1; n < prec; ++n) {
        RingValue s(0);
        for (long i = 1; i <= n; ++i) {
            const RingValue& fi = f.coefficient(i);
            if (fi.is_zero() || b[n - i].is_zero()) continue;
            s += fi * b[n - i];
        }
        b[n] = (-s).divided_by(u);
    }
    return TruncatedQSeries(std::move(b));
}

bool equal_on_range(const TruncatedQSeries& a, const TruncatedQSeries& b, long from, long to) {
    for (long n = from; n < to; ++n)
        if (a.coefficient(n) != b.coefficient(n)) return false;
    return true;
}

} // namespace qmf
