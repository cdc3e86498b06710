#include "chatelet/arith.hpp"

#include <algorithm>
#include <map>

#include "chatelet/checked.hpp"
#include "chatelet/prime_sieve.hpp"

namespace chatelet {

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// Trial-division table; 64 primes strip the common small factors before
// rho takes over.
const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> table = primes_up_to(311);
    return table;
}

// Brent's cycle variant of Pollard rho with gcd batching and backtracking.
// n must be odd, composite, and free of factors below the trial table.
// The polynomial increment advances deterministically, so factorizations
// are reproducible.
uint64_t brent_rho(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        auto step = [&](uint64_t v) {
            uint64_t w = mulmod_u64(v, v, n) + c;
            if (w >= n) w -= n;
            return w;
        };
        uint64_t y = 2, r = 1, q = 1, d = 1;
        uint64_t x = 0, ys = 0;
        const uint64_t batch = 128;
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = step(y);
            for (uint64_t k = 0; k < r && d == 1; k += batch) {
                ys = y;
                uint64_t lim = std::min(batch, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // the batch swallowed every factor at once; replay one step at a time
            d = 1;
            while (d == 1) {
                ys = step(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
        // collision with the full cycle; retry with the next increment
    }
}

void factor_rec(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    uint64_t root;
    if (perfect_square_u64(n, &root)) {
        std::map<uint64_t, int> half;
        factor_rec(root, half);
        for (auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    uint64_t d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    static const uint64_t bases[12] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t p : bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Smallest composite surviving the first k prime bases (OEIS A014233);
    // testing against the first k below each threshold is deterministic.
    int k = 12;
    if (n < 2047ull) k = 1;
    else if (n < 1373653ull) k = 2;
    else if (n < 25326001ull) k = 3;
    else if (n < 3215031751ull) k = 4;
    else if (n < 2152302898747ull) k = 5;
    else if (n < 3474749660383ull) k = 6;
    else if (n < 341550071728321ull) k = 7;
    else if (n < 3825123056546413051ull) k = 9;
    for (int i = 0; i < k; ++i) {
        if (miller_rabin_witness(n, bases[i], d, s)) return false;
    }
    return true;
}

bool FactoredInteger::check_invariants() const {
    uint64_t prod = 1;
    uint64_t prev = 0;
    for (const auto& [p, e] : factors) {
        if (e < 1) return false;
        if (p <= prev) return false;
        if (!is_prime(p)) return false;
        for (int i = 0; i < e; ++i) {
            if (__builtin_mul_overflow(prod, p, &prod)) return false;
        }
        prev = p;
    }
    return prod == value;
}

FactoredInteger factorize_u64(uint64_t n) {
    if (n == 0) throw InvalidArgument("factorize: n must be nonzero");
    FactoredInteger out;
    out.value = n;
    std::map<uint64_t, int> acc;
    for (uint32_t p : small_primes()) {
        if (static_cast<uint64_t>(p) * p > n) break;
        while (n % p == 0) {
            acc[p] += 1;
            n /= p;
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            acc[n] += 1;
        } else {
            factor_rec(n, acc);
        }
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

FactoredInteger factorize(int64_t n) {
    if (n == 0) throw InvalidArgument("factorize: n must be nonzero");
    return factorize_u64(checked_abs_u64(n));
}

int jacobi(int64_t a, uint64_t n) {
    if (n == 0 || (n & 1) == 0) throw InvalidArgument("jacobi: modulus must be odd and positive");
    int sign = 1;
    uint64_t x;
    if (a < 0) {
        if ((n & 3) == 3) sign = -sign;  // (-1/n) = (-1)^((n-1)/2)
        x = checked_abs_u64(a) % n;
    } else {
        x = static_cast<uint64_t>(a) % n;
    }
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            uint64_t r = n & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, n);
        if ((x & 3) == 3 && (n & 3) == 3) sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

int legendre_extended(int64_t a, uint64_t p) {
    if (p == 2) return 0;
    return jacobi(a, p);
}

mpq_class isotropy_weight(const FactoredInteger& n, int64_t a) {
    require_nonsquare(a);
    int halvings = 0;
    for (const auto& [p, e] : n.factors) {
        if (e != 1) continue;  // only primes exactly dividing n weigh in
        int s = legendre_extended(a, p);
        if (s == -1) return mpq_class(0);
        if (s == 0) ++halvings;
    }
    mpq_class w(1);
    w /= mpq_class(mpz_class(1) << halvings);
    return w;
}

mpq_class sieve_weight(const FactoredInteger& n, int64_t a) {
    mpq_class w = isotropy_weight(n, a);
    w *= mpq_class(mpz_class(1) << n.omega());
    return w;
}

namespace {

// (p, e, u) with n = p^e * u, p odd prime.
void split_place(int64_t n, uint64_t p, int& e, int64_t& u) {
    e = 0;
    while (n % static_cast<int64_t>(p) == 0) {
        n /= static_cast<int64_t>(p);
        ++e;
    }
    u = n;
}

int sign_exp(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

int hilbert_symbol(int64_t a, int64_t b, Place v) {
    if (a == 0 || b == 0) throw InvalidArgument("hilbert_symbol: arguments must be nonzero");
    if (v.is_real()) {
        return (a < 0 && b < 0) ? -1 : 1;
    }
    uint64_t p = v.p;
    if (p == 2) {
        int alpha, beta;
        int64_t u, w;
        alpha = 0;
        while (a % 2 == 0) { a /= 2; ++alpha; }
        u = a;
        beta = 0;
        while (b % 2 == 0) { b /= 2; ++beta; }
        w = b;
        // (m-1)/2 mod 2 and (m^2-1)/8 mod 2 via residues, safe for any int64.
        auto eps = [](int64_t m) { int r = static_cast<int>(((m % 4) + 4) % 4); return r == 3 ? 1 : 0; };
        auto omg = [](int64_t m) { int r = static_cast<int>(((m % 8) + 8) % 8); return (r == 3 || r == 5) ? 1 : 0; };
        int e = eps(u) * eps(w) + alpha * omg(w) + beta * omg(u);
        return sign_exp(e);
    }
    if (!is_prime(p)) throw InvalidArgument("hilbert_symbol: place must be prime or infinity");
    int alpha, beta;
    int64_t u, w;
    split_place(a, p, alpha, u);
    split_place(b, p, beta, w);
    int eps_p = static_cast<int>(((p - 1) / 2) & 1);
    int s = sign_exp(alpha * beta * eps_p);
    if (beta & 1) s *= jacobi(u, p);
    if (alpha & 1) s *= jacobi(w, p);
    return s;
}

bool locally_isotropic(int64_t a, int64_t b) {
    if (hilbert_symbol(a, b, Place::infinity()) != 1) return false;
    if (hilbert_symbol(a, b, Place::prime(2)) != 1) return false;
    for (int64_t n : {a, b}) {
        for (const auto& [p, e] : factorize(n).factors) {
            if (p == 2) continue;
            if (hilbert_symbol(a, b, Place::prime(p)) != 1) return false;
        }
    }
    return true;
}

bool is_square_int(int64_t n) {
    if (n < 0) return false;
    return perfect_square_u64(static_cast<uint64_t>(n));
}

void require_nonsquare(int64_t a) {
    if (a == 0) throw InvalidArgument("parameter a must be nonzero");
    if (is_square_int(a)) throw InvalidArgument("parameter a must not be a perfect square");
}

}  // namespace chatelet
