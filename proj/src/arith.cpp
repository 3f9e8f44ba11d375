#include "qmf/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace qmf {

Factorization factorize(long n) {
    if (n < 1) throw Error("factorize needs n >= 1");
    Factorization f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        long e = 0, v = 1;
        while (n % p == 0) {
            n /= p;
            ++e;
            v *= p;
        }
        f.push_back({p, e, v});
    }
    if (n > 1) f.push_back({n, 1, n});
    return f;
}

long moebius(long n) {
    if (n < 1) throw Error("moebius needs n >= 1");
    long sign = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long radical(long n) {
    if (n < 1) throw Error("radical needs n >= 1");
    long r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw Error("divisors needs n >= 1");
    std::vector<long> d = {1};
    for (const auto& pp : factorize(n)) {
        std::size_t base = d.size();
        long q = 1;
        for (long e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * q);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (const auto& pp : factorize(n))
        if (pp.exponent > 1) return false;
    return true;
}

long squarefree_part(long n) {
    long s = 1;
    for (const auto& pp : factorize(n))
        if (pp.exponent % 2 == 1) s *= pp.prime;
    return s;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

int kronecker_symbol(long D, long n) {
    Integer a(D), b(n);
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

bool is_discriminant(long D) {
    long r = ((D % 4) + 4) % 4;
    return D != 0 && (r == 0 || r == 1);
}

bool is_fundamental_discriminant(long D) {
    if (D == 1) return true;
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(D < 0 ? -D : D);
    if (D % 4 != 0) return false;
    long m = D / 4;
    long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && is_squarefree(m < 0 ? -m : m);
}

long fundamental_discriminant_of(long t) {
    if (t < 1 || !is_squarefree(t)) throw NotSquarefree("fundamental_discriminant_of needs squarefree t >= 1");
    if (t == 1) return 1;
    return t % 4 == 1 ? t : 4 * t;
}

Rational bernoulli(long k) {
    if (k < 0) throw Error("bernoulli needs k >= 0");
    static std::vector<Rational> table = {Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    // sum_{j=0}^{k} binom(k+1, j) B_j = 0
    for (long n = static_cast<long>(table.size()); n <= k; ++n) {
        Rational s(0);
        for (long j = 0; j < n; ++j) s += Rational(binomial_int(n + 1, j)) * table[j];
        table.push_back(-s / Rational(n + 1));
    }
    return table[k];
}

} // namespace qmf
