#include "qmf/exact_ring.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qmf {

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    auto slash = text.find('/');
    Rational q;
    if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (slash != std::string::npos) {
        // reject "p/0" and "p/-q": the grammar wants a positive denominator
        std::string den = text.substr(slash + 1);
        if (den.empty() || den[0] == '-' || den == "0")
            throw Error("bad rational literal: " + text);
    }
    q.canonicalize();
    return q;
}

namespace {

// exact division of integer polynomials, divisor monic; asserts zero remainder
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
        Integer c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("cyclotomic division left a remainder");
    return quot;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long m) {
    if (m < 1) throw Error("cyclotomic_polynomial needs m >= 1");
    static std::map<long, std::vector<Integer>> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<Integer> phi;
    if (m == 1) {
        phi = {Integer(-1), Integer(1)}; // x - 1
    } else {
        std::vector<Integer> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1; // x^m - 1
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
        phi = std::move(num);
    }
    auto [jt, inserted] = cache.emplace(m, std::move(phi));
    return jt->second;
}

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---------------------------------------------------------------------------
// CyclotomicElement

CyclotomicElement::CyclotomicElement(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) throw Error("cyclotomic order must be >= 1");
    if (static_cast<long>(coeffs_.size()) != euler_phi(order_))
        throw Error("cyclotomic coefficient vector has wrong length");
}

CyclotomicElement CyclotomicElement::embed(const Rational& value, long order) {
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[0] = value;
    return CyclotomicElement(order, std::move(c));
}

namespace {

// reduce a raw polynomial (any degree) mod Phi_m, returning phi(m) coordinates
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long m) {
    const auto& phi = cyclotomic_polynomial(m);
    long deg_phi = static_cast<long>(phi.size()) - 1;
    for (long i = static_cast<long>(poly.size()) - 1; i >= deg_phi; --i) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        for (long j = 0; j <= deg_phi; ++j)
            poly[i - deg_phi + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg_phi, Rational(0));
    return poly;
}

} // namespace

CyclotomicElement CyclotomicElement::zeta_power(long order, long e) {
    e %= order;
    if (e < 0) e += order;
    std::vector<Rational> poly(e + 1, Rational(0));
    poly[e] = 1;
    return CyclotomicElement(order, reduce_mod_phi(std::move(poly), order));
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicElement::is_constant() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CyclotomicElement::constant_value() const {
    if (!is_constant()) throw Error("cyclotomic value is not constant");
    return coeffs_[0];
}

CyclotomicElement CyclotomicElement::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CyclotomicElement(order_, std::move(c));
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.order_ != b.order_) throw IncompatibleOrder("cyclotomic orders differ");
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return CyclotomicElement(a.order_, std::move(c));
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.order_ != b.order_) throw IncompatibleOrder("cyclotomic orders differ");
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return CyclotomicElement(a.order_, std::move(c));
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.order_ != b.order_) throw IncompatibleOrder("cyclotomic orders differ");
    std::size_t n = a.coeffs_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CyclotomicElement(a.order_, reduce_mod_phi(std::move(prod), a.order_));
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicElement::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << rational_str(coeffs_[i]);
    }
    out << "]@" << order_;
    return out.str();
}

// ---------------------------------------------------------------------------
// RingValue

long RingValue::ring_order() const {
    return is_rational() ? 1 : cyclotomic().order();
}

bool RingValue::is_zero() const {
    return is_rational() ? rational() == 0 : cyclotomic().is_zero();
}

RingValue RingValue::operator-() const {
    if (is_rational()) return RingValue(Rational(-rational()));
    return RingValue(-cyclotomic());
}

namespace {

template <typename RatOp, typename CycOp>
RingValue combine(const RingValue& a, const RingValue& b, RatOp rop, CycOp cop) {
    if (a.is_rational() && b.is_rational())
        return RingValue(rop(a.rational(), b.rational()));
    if (a.is_rational())
        return RingValue(cop(CyclotomicElement::embed(a.rational(), b.cyclotomic().order()),
                             b.cyclotomic()));
    if (b.is_rational())
        return RingValue(cop(a.cyclotomic(),
                             CyclotomicElement::embed(b.rational(), a.cyclotomic().order())));
    return RingValue(cop(a.cyclotomic(), b.cyclotomic()));
}

} // namespace

RingValue& RingValue::operator+=(const RingValue& o) {
    *this = combine(*this, o, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                    [](const CyclotomicElement& x, const CyclotomicElement& y) { return x + y; });
    return *this;
}

RingValue& RingValue::operator-=(const RingValue& o) {
    *this = combine(*this, o, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                    [](const CyclotomicElement& x, const CyclotomicElement& y) { return x - y; });
    return *this;
}

RingValue& RingValue::operator*=(const RingValue& o) {
    *this = combine(*this, o, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                    [](const CyclotomicElement& x, const CyclotomicElement& y) { return x * y; });
    return *this;
}

RingValue RingValue::divided_by(const Rational& q) const {
    if (q == 0) throw Error("division by zero rational");
    if (is_rational()) return RingValue(Rational(rational() / q));
    std::vector<Rational> c(cyclotomic().coeffs());
    for (auto& x : c) x /= q;
    return RingValue(CyclotomicElement(cyclotomic().order(), std::move(c)));
}

bool operator==(const RingValue& a, const RingValue& b) {
    if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
    if (a.is_rational())
        return b.cyclotomic().is_constant() && b.cyclotomic().constant_value() == a.rational();
    if (b.is_rational())
        return a.cyclotomic().is_constant() && a.cyclotomic().constant_value() == b.rational();
    const auto& x = a.cyclotomic();
    const auto& y = b.cyclotomic();
    if (x.order() == y.order()) return x == y;
    return x.is_constant() && y.is_constant() && x.constant_value() == y.constant_value();
}

std::string RingValue::str() const {
    return is_rational() ? rational_str(rational()) : cyclotomic().str();
}

RingValue embed_rational(const Rational& q, long order) {
    return RingValue(CyclotomicElement::embed(q, order));
}

RingValue parse_ring_value(const std::string& text) {
    if (text.empty()) throw Error("empty coefficient literal");
    if (text[0] != '[') return RingValue(parse_rational(text));
    auto close = text.rfind(']');
    auto at = text.rfind('@');
    if (close == std::string::npos || at == std::string::npos || at < close)
        throw Error("bad cyclotomic literal: " + text);
    long order = std::stol(text.substr(at + 1));
    std::vector<Rational> coeffs;
    std::string body = text.substr(1, close - 1);
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ','))
        coeffs.push_back(parse_rational(item));
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        throw Error("cyclotomic literal has wrong coefficient count: " + text);
    return RingValue(CyclotomicElement(order, std::move(coeffs)));
}

} // namespace qmf
