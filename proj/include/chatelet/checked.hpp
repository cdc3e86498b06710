#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>

#include "chatelet/errors.hpp"

namespace chatelet {

// Exact int64 arithmetic that refuses to wrap. Counting code works in
// int64; anything that can outgrow it goes through GMP instead.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}

inline uint64_t checked_abs_u64(int64_t a) {
    return a < 0 ? ~static_cast<uint64_t>(a) + 1 : static_cast<uint64_t>(a);
}

// Floor square root of a u64. std::sqrt gets within one ulp; fix up exactly.
inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

namespace detail {
// Bitmasks of quadratic residues mod 64 and mod 63; rejects ~97% of
// non-squares before the isqrt.
inline bool square_residue_ok(uint64_t n) {
    static const uint64_t mask64 = [] {
        uint64_t m = 0;
        for (uint64_t i = 0; i < 64; ++i) m |= uint64_t(1) << ((i * i) & 63);
        return m;
    }();
    static const uint64_t mask63 = [] {
        uint64_t m = 0;
        for (uint64_t i = 0; i < 63; ++i) m |= uint64_t(1) << ((i * i) % 63);
        return m;
    }();
    if (!(mask64 >> (n & 63) & 1)) return false;
    if (!(mask63 >> (n % 63) & 1)) return false;
    return true;
}
}  // namespace detail

// True iff n is a perfect square; *root gets the nonnegative square root.
inline bool perfect_square_u64(uint64_t n, uint64_t* root = nullptr) {
    if (!detail::square_residue_ok(n)) return false;
    uint64_t r = isqrt_u64(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace chatelet
