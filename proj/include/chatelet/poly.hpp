#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chatelet/errors.hpp"

namespace chatelet {

// Integer polynomial of degree <= 4, coefficients leading-first:
//   f(x) = c[0] x^4 + c[1] x^3 + c[2] x^2 + c[3] x + c[4].
// This matches the on-disk surface format.
struct IntPoly {
    std::array<int64_t, 5> c{};

    static IntPoly from_desc(const std::array<int64_t, 5>& desc) { return IntPoly{desc}; }

    int degree() const;          // -1 for the zero polynomial
    int64_t leading() const;     // 0 for the zero polynomial
    int64_t constant() const { return c[4]; }
    int64_t eval(int64_t x) const;  // overflow-checked
    mpz_class eval_z(const mpz_class& x) const;
    bool is_zero() const;
    std::string to_string() const;

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

// Binary quartic form F(u,v) = v^4 f(u/v); shares f's coefficient array:
//   F(u,v) = c[0] u^4 + c[1] u^3 v + c[2] u^2 v^2 + c[3] u v^3 + c[4] v^4.
struct BinaryForm {
    std::array<int64_t, 5> c{};

    int64_t eval(int64_t u, int64_t v) const;  // overflow-checked
    mpz_class eval_z(const mpz_class& u, const mpz_class& v) const;
    std::string to_string() const;

    bool operator==(const BinaryForm& o) const { return c == o.c; }
};

// F with F(u,1) = f(u); requires deg f in {3,4}.
BinaryForm homogenize(const IntPoly& f);

int64_t eval_form(const BinaryForm& F, int64_t u, int64_t v);

// Resultant-normalized discriminant:
//   disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f),  n = deg f in {2,3,4}.
// Zero iff f has a repeated root over the algebraic closure. This is the
// convention every square-class test downstream relies on; do not change it.
mpz_class discriminant(const IntPoly& f);

// Exact number of residues x mod p with f(x) = 0 mod p (not counting
// multiplicity). Uses deg gcd(x^p - x, f mod p); if f vanishes identically
// mod p the count is p.
int64_t count_roots_mod_p(const IntPoly& f, uint64_t p);

// Dense rational polynomial, ascending coefficients. General degrees are
// allowed (products show up in tests); the factorization routines only
// accept degree <= 4.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> ascending);
    static RatPoly from_int(const IntPoly& f);
    static RatPoly constant(const mpq_class& v);
    static RatPoly x_power(int k);  // x^k

    int degree() const { return static_cast<int>(a_.size()) - 1; }
    bool is_zero() const { return a_.empty(); }
    const mpq_class& leading() const;
    mpq_class coeff(int k) const;  // 0 beyond the stored range

    mpq_class eval(const mpq_class& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;
    RatPoly shifted(const mpq_class& c) const;  // x -> x + c
    RatPoly scaled_var(const mpq_class& k) const;  // x -> k x

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& s) const;
    bool operator==(const RatPoly& o) const { return a_ == o.a_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

    std::string to_string() const;

private:
    std::vector<mpq_class> a_;  // a_[k] multiplies x^k; trailing zeros stripped
    void normalize();
};

// Monic gcd over Q (1 for coprime inputs, 0 only if both are zero).
RatPoly gcd_monic(RatPoly a, RatPoly b);

// f = content * prod factors[i].first ^ factors[i].second, with every
// factor monic and irreducible over Q.
struct FactorizationQ {
    mpq_class content = 0;
    std::vector<std::pair<RatPoly, int>> factors;

    RatPoly reassemble() const;
};

// Complete irreducible factorization over Q for degree <= 4: rational-root
// extraction by divisor search, then an exhaustive bounded search for
// integer quadratic factors of the primitive part. Exact and certified by
// exhaustion; no float anywhere.
FactorizationQ factor_over_Q(const IntPoly& f);
FactorizationQ factor_over_Q(const RatPoly& f);

// For a monic depressed quartic x^4 + p x^2 + q x + r returns
//   z^3 - p z^2 - 4 r z + (4 p r - q^2),
// whose roots z in a field K are exactly the values m+n over the
// factorizations (x^2+sx+m)(x^2-sx+n) of the quartic with s^2 = z - p;
// the quartic splits into quadratics over K iff some root z in K passes
// the square conditions (see quadfield).
RatPoly resolvent_cubic(const RatPoly& g);

// Primitive integer model of a nonzero rational polynomial (positive
// leading coefficient); requires degree <= 4.
IntPoly integer_model(const RatPoly& g);

}  // namespace chatelet
