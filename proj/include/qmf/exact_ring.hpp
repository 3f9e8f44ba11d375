#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "qmf/errors.hpp"

namespace qmf {

using Integer = mpz_class;
using Rational = mpq_class;

Integer int_pow(const Integer& base, unsigned long e);
Integer factorial(long n);
Integer binomial_int(long n, long k);

/// Canonical "p/q" (denominator omitted when 1).
std::string rational_str(const Rational& q);
/// Parses "p" or "p/q" with q > 0; the result is reduced.
Rational parse_rational(const std::string& text);

/// Coefficient vector of the m-th cyclotomic polynomial, ascending degree,
/// monic of degree phi(m). Computed by exact division of x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
const std::vector<Integer>& cyclotomic_polynomial(long m);

long euler_phi(long m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1},
/// stored canonically reduced mod the m-th cyclotomic polynomial.
class CyclotomicElement {
public:
    CyclotomicElement(long order, std::vector<Rational> coeffs);

    static CyclotomicElement embed(const Rational& value, long order);
    /// zeta_m^e, reduced.
    static CyclotomicElement zeta_power(long order, long e);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when all power-basis coordinates above the constant vanish.
    bool is_constant() const;
    Rational constant_value() const;

    CyclotomicElement operator-() const;
    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    std::string str() const; // "[c0,c1,...]@m"

private:
    long order_;
    std::vector<Rational> coeffs_; // size phi(order_)
};

/// Exact coefficient: a rational, or an element of a fixed cyclotomic field.
/// Rationals embed into any order; two cyclotomic values must share an order.
class RingValue {
public:
    RingValue() : v_(Rational(0)) {}
    RingValue(long n) : v_(Rational(n)) {}
    RingValue(Rational q) : v_(std::move(q)) {}
    RingValue(Integer n) : v_(Rational(std::move(n))) {}
    RingValue(CyclotomicElement c) : v_(std::move(c)) {}

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const CyclotomicElement& cyclotomic() const { return std::get<CyclotomicElement>(v_); }

    /// 1 for rationals, the field order otherwise.
    long ring_order() const;
    bool is_zero() const;

    RingValue operator-() const;
    RingValue& operator+=(const RingValue& o);
    RingValue& operator-=(const RingValue& o);
    RingValue& operator*=(const RingValue& o);
    friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
    friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
    friend RingValue operator*(RingValue a, const RingValue& b) { return a *= b; }

    /// Exact division by a nonzero rational (multiplication by its inverse).
    RingValue divided_by(const Rational& q) const;

    /// Mathematical equality; constants compare equal across representations.
    friend bool operator==(const RingValue& a, const RingValue& b);
    friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

    std::string str() const;

private:
    std::variant<Rational, CyclotomicElement> v_;
};

RingValue embed_rational(const Rational& q, long order);
/// Parses the textual forms produced by RingValue::str().
RingValue parse_ring_value(const std::string& text);

} // namespace qmf
