#pragma once

#include <vector>

#include "qmf/exact_ring.hpp"

namespace qmf {

struct PrimePower {
    long prime;
    long exponent;
    long value; // prime^exponent
};

/// Prime factorization, primes ascending. factorize(1) is empty.
using Factorization = std::vector<PrimePower>;

Factorization factorize(long n);

long moebius(long n);
long radical(long n);
std::vector<long> divisors(long n);
bool is_prime(long n);
bool is_squarefree(long n);
long squarefree_part(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Kronecker symbol (D/n), defined on all of Z x Z.
int kronecker_symbol(long D, long n);

/// D == 0 or 1 mod 4, covering both fundamental and non-fundamental cases.
bool is_discriminant(long D);
/// 1, or squarefree D == 1 mod 4, or 4m with m == 2,3 mod 4 squarefree.
bool is_fundamental_discriminant(long D);

/// t squarefree positive: t when t == 1 mod 4, else 4t; 1 for t = 1.
long fundamental_discriminant_of(long t);

/// Bernoulli number B_k by the defining recurrence.
Rational bernoulli(long k);

} // namespace qmf
