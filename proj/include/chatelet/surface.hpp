#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chatelet/poly.hpp"
#include "chatelet/quadfield.hpp"

namespace chatelet {

// Image of the anticanonical map in P^4: the rank-3 quadric x0 x2 = x1^2
// intersected with x3^2 - a x4^2 = Q(x0, x1, x2), where
//   Q(x0,x1,x2) = c4 x0^2 + c3 x0 x1 + c2 x0 x2 + c1 x1 x2 + c0 x2^2
// and Q(v^2, uv, u^2) = F(u,v) identically.
struct DelPezzoModel {
    int64_t a = 0;
    std::array<int64_t, 5> q{};  // stored as (c4, c3, c2, c1, c0)

    mpz_class quadric_residual(const std::array<mpz_class, 5>& x) const;  // x0 x2 - x1^2
    mpz_class conic_residual(const std::array<mpz_class, 5>& x) const;    // x3^2 - a x4^2 - Q
    bool contains(const std::array<int64_t, 5>& x) const;

    std::string quadric_equation_string() const;  // "x0*x2 = x1^2"
    std::string conic_equation_string() const;
};

// Validated surface y^2 - a z^2 = f(x): a a nonzero nonsquare, f of degree
// 3 or 4 with nonzero discriminant. Immutable after construction; the
// factorization of f, per-factor membership verdicts, the Picard rank and
// the P^4 model are all computed eagerly.
class Surface {
public:
    static Surface validate(int64_t a, const std::array<int64_t, 5>& f_desc,
                            std::string label = "");

    int64_t a() const { return a_; }
    const IntPoly& f() const { return f_; }
    const BinaryForm& form() const { return F_; }
    const mpz_class& disc() const { return disc_; }
    const std::string& label() const { return label_; }

    const FactorizationQ& factorization() const { return fq_; }
    // Parallel to factorization().factors: does sqrt(a) lie in the field
    // cut out by that factor?
    const std::vector<bool>& factor_membership() const { return member_; }

    // 2 + #{irreducible factors f_i with sqrt(a) in Q[x]/(f_i)}; always in {2,3,4}.
    int picard_rank() const { return rho_; }

    const DelPezzoModel& delpezzo() const { return model_; }

    // Counting needs negative a (definite conic fibers); throws RegimeError.
    void require_counting_regime() const;

private:
    Surface() = default;

    int64_t a_ = 0;
    IntPoly f_;
    BinaryForm F_;
    mpz_class disc_;
    std::string label_;
    FactorizationQ fq_;
    std::vector<bool> member_;
    int rho_ = 0;
    DelPezzoModel model_;
};

}  // namespace chatelet
