#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "chatelet/poly.hpp"

namespace chatelet {

// True iff x is the square of a rational; *root gets the nonnegative root.
bool is_rational_square(const mpq_class& x, mpq_class* root = nullptr);

// Element p + q*sqrt(a) of Q(sqrt(a)), a a fixed nonzero nonsquare.
// The representation is unique because sqrt(a) is irrational.
struct QuadFieldElement {
    mpq_class p, q;
    int64_t a = 0;

    QuadFieldElement(mpq_class p_, mpq_class q_, int64_t a_);
    static QuadFieldElement rational(const mpq_class& r, int64_t a);

    QuadFieldElement operator+(const QuadFieldElement& o) const;
    QuadFieldElement operator-(const QuadFieldElement& o) const;
    QuadFieldElement operator*(const QuadFieldElement& o) const;
    bool operator==(const QuadFieldElement& o) const;

    QuadFieldElement conj() const { return {p, -q, a}; }
    mpq_class norm() const { return p * p - a * q * q; }  // x * conj(x)
    bool is_rational() const { return q == 0; }

    std::string to_string() const;
};

// Square root of x in Q(sqrt(a)) if one exists. Decision: for rational x
// test x or x/a a rational square; otherwise x = p + q sqrt(a) is a square
// iff N = p^2 - a q^2 = r^2 for rational r >= 0 and (p+r)/2 or (p-r)/2 is a
// rational square s^2 (then s + (q/2s) sqrt(a) is a root).
std::optional<QuadFieldElement> sqrt_in_field(const QuadFieldElement& x);

// Evaluate a rational polynomial at a field element (test helper and
// resolvent-root verification).
QuadFieldElement eval_at(const RatPoly& f, const QuadFieldElement& x);

// Decides sqrt(a) in Q[x]/(g) for g irreducible over Q of degree <= 4.
//   deg 1, 3: false (odd degree cannot contain a quadratic subfield).
//   deg 2:    true iff a * disc(g) is a rational square.
//   deg 4:    true iff g splits into two quadratics over Q(sqrt(a)),
//             decided exactly through the resolvent cubic: find its roots
//             in Q(sqrt(a)) (rational roots plus roots of its rational
//             quadratic factors z^2+uz+v with a(u^2-4v) a rational square)
//             and check the square conditions with sqrt_in_field.
// Throws InvalidArgument if g is reducible over Q.
bool sqrt_a_in_field_of(const RatPoly& g, int64_t a);

enum class ProbeVerdict {
    CertifiedNonmember,    // found p with a root of g mod p and (a/p) = -1
    ConsistentWithMember,  // no witness below the bound (heuristic only)
};

struct ProbeResult {
    ProbeVerdict verdict;
    uint64_t witness_prime = 0;  // set when certified
};

// Prime-scanning cross-check: a single unramified prime p with
// rho_g(p) >= 1 and (a/p) = -1 is a sound certificate that
// sqrt(a) is not in Q[x]/(g). Scans p <= bound, p not dividing
// 2 a disc(g) lc(g). Never overrides the deterministic test; disagreement
// is a bug.
ProbeResult membership_probe(const RatPoly& g, int64_t a, uint64_t bound);

}  // namespace chatelet
