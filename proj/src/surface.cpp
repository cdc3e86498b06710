#include "chatelet/surface.hpp"

#include <sstream>

#include "chatelet/arith.hpp"
#include "chatelet/checked.hpp"

namespace chatelet {

mpz_class DelPezzoModel::quadric_residual(const std::array<mpz_class, 5>& x) const {
    return x[0] * x[2] - x[1] * x[1];
}

mpz_class DelPezzoModel::conic_residual(const std::array<mpz_class, 5>& x) const {
    mpz_class Q = q[0] * x[0] * x[0] + q[1] * x[0] * x[1] + q[2] * x[0] * x[2] +
                  q[3] * x[1] * x[2] + q[4] * x[2] * x[2];
    return x[3] * x[3] - a * x[4] * x[4] - Q;
}

bool DelPezzoModel::contains(const std::array<int64_t, 5>& x) const {
    std::array<mpz_class, 5> z;
    for (int i = 0; i < 5; ++i) z[i] = x[i];
    return quadric_residual(z) == 0 && conic_residual(z) == 0;
}

std::string DelPezzoModel::quadric_equation_string() const { return "x0*x2 = x1^2"; }

std::string DelPezzoModel::conic_equation_string() const {
    std::ostringstream os;
    os << "x3^2 - (" << a << ")*x4^2 = ";
    static const char* mono[5] = {"x0^2", "x0*x1", "x0*x2", "x1*x2", "x2^2"};
    bool first = true;
    bool any = false;
    for (int i = 0; i < 5; ++i) {
        if (q[i] == 0) continue;
        any = true;
        if (first) {
            if (q[i] < 0) os << "-";
        } else {
            os << (q[i] < 0 ? " - " : " + ");
        }
        uint64_t mag = checked_abs_u64(q[i]);
        if (mag != 1) os << mag << "*";
        os << mono[i];
        first = false;
    }
    if (!any) os << "0";
    return os.str();
}

Surface Surface::validate(int64_t a, const std::array<int64_t, 5>& f_desc, std::string label) {
    if (a == 0) {
        throw HypothesisError(HypothesisError::Kind::ZeroA, "a must be nonzero");
    }
    if (is_square_int(a)) {
        throw HypothesisError(HypothesisError::Kind::SquareA,
                              "a = " + std::to_string(a) + " is a perfect square");
    }
    IntPoly f = IntPoly::from_desc(f_desc);
    int deg = f.degree();
    if (deg != 3 && deg != 4) {
        throw HypothesisError(HypothesisError::Kind::BadDegree,
                              "deg f = " + std::to_string(deg) + ", expected 3 or 4");
    }
    mpz_class disc = discriminant(f);
    if (disc == 0) {
        throw HypothesisError(HypothesisError::Kind::RepeatedRoot,
                              "f has a repeated root (discriminant 0)");
    }

    Surface s;
    s.a_ = a;
    s.f_ = f;
    s.F_ = homogenize(f);
    s.disc_ = disc;
    s.label_ = std::move(label);

    // P^4 model coefficients, plus a symbolic check that substituting
    // (v^2, uv, u^2) into Q reproduces F(u,v) coefficient by coefficient.
    s.model_.a = a;
    s.model_.q = {f.c[4], f.c[3], f.c[2], f.c[1], f.c[0]};
    std::array<int64_t, 5> expanded{};  // coefficient of u^{4-i} v^i
    expanded[4] += s.model_.q[0];       // c4 * (v^2)^2
    expanded[3] += s.model_.q[1];       // c3 * v^2 * uv
    expanded[2] += s.model_.q[2];       // c2 * v^2 * u^2
    expanded[1] += s.model_.q[3];       // c1 * uv * u^2
    expanded[0] += s.model_.q[4];       // c0 * (u^2)^2
    if (expanded != s.F_.c) throw Error("internal: del Pezzo form does not match F");

    s.fq_ = factor_over_Q(f);
    int contributing = 0;
    for (const auto& [g, mult] : s.fq_.factors) {
        (void)mult;
        bool member = sqrt_a_in_field_of(g, a);
        s.member_.push_back(member);
        if (member) ++contributing;
    }
    s.rho_ = 2 + contributing;
    return s;
}

void Surface::require_counting_regime() const {
    if (a_ >= 0) {
        throw RegimeError("counting requires a < 0 (got a = " + std::to_string(a_) + ")");
    }
}

}  // namespace chatelet
