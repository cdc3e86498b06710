#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "chatelet/errors.hpp"

namespace chatelet {

// Deterministic primality for the full uint64 range (Miller-Rabin with the
// first twelve prime bases, a witness set proven complete far beyond 2^64).
bool is_prime(uint64_t n);

// A positive integer together with its certified prime factorization.
// Invariants: primes strictly increasing, every exponent >= 1, the product
// of p^e reconstructs value, and every listed prime passes is_prime.
struct FactoredInteger {
    uint64_t value = 1;
    std::vector<std::pair<uint64_t, int>> factors;  // (prime, exponent)

    int omega() const { return static_cast<int>(factors.size()); }
    bool check_invariants() const;
};

// Factorization of |n|. Trial division by a small prime table, then
// Brent-Pollard rho splitting with Miller-Rabin certification of every
// emitted prime. Deterministic (fixed rho seeds). n = 0 is rejected;
// callers that meet F(u,v) = 0 apply the zero-weight convention upstream.
FactoredInteger factorize(int64_t n);
FactoredInteger factorize_u64(uint64_t n);

// Jacobi symbol (a/n) for odd n >= 1; throws InvalidArgument otherwise.
int jacobi(int64_t a, uint64_t n);

// Legendre symbol extended to p = 2 by the convention (a/2) = 0.
// For odd primes this is jacobi(a, p).
int legendre_extended(int64_t a, uint64_t p);

// Multiplicative weight  prod_{p || n} (1 + (a/p))/2  over primes exactly
// dividing n, with the (a/2) = 0 convention. Zero iff some p || n has
// (a/p) = -1; in that case the conic y^2 - a z^2 = n t^2 is anisotropic
// at p. Always a dyadic rational in [0, 1].
mpq_class isotropy_weight(const FactoredInteger& n, int64_t a);

// 2^{omega(n)} * isotropy_weight(n, a). Bounded by 2 on prime powers.
mpq_class sieve_weight(const FactoredInteger& n, int64_t a);

// A place of Q: a finite prime or the real place.
struct Place {
    uint64_t p = 0;  // 0 encodes the real place

    static Place infinity() { return Place{0}; }
    static Place prime(uint64_t q) { return Place{q}; }
    bool is_real() const { return p == 0; }
};

// Hilbert symbol (a,b)_v in {-1,+1}: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion at v. a, b nonzero.
int hilbert_symbol(int64_t a, int64_t b, Place v);

// True iff the ternary form <1, -a, -b> is isotropic over every
// completion of Q, i.e. (a,b)_v = 1 at the real place and at every
// p | 2ab. Equivalent to y^2 - a z^2 = b t^2 having a rational point.
bool locally_isotropic(int64_t a, int64_t b);

// True iff n is a perfect square (0 and 1 are squares).
bool is_square_int(int64_t n);

// Throws InvalidArgument unless a is a nonzero nonsquare integer.
void require_nonsquare(int64_t a);

}  // namespace chatelet
