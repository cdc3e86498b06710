#include "chatelet/quadfield.hpp"

#include <sstream>

#include "chatelet/arith.hpp"
#include "chatelet/prime_sieve.hpp"

namespace chatelet {

bool is_rational_square(const mpq_class& x, mpq_class* root) {
    if (sgn(x) < 0) return false;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return false;
    }
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = mpq_class(rn, rd);
    }
    return true;
}

QuadFieldElement::QuadFieldElement(mpq_class p_, mpq_class q_, int64_t a_)
    : p(std::move(p_)), q(std::move(q_)), a(a_) {
    require_nonsquare(a_);
}

QuadFieldElement QuadFieldElement::rational(const mpq_class& r, int64_t a) {
    return {r, mpq_class(0), a};
}

namespace {
void require_same_field(const QuadFieldElement& x, const QuadFieldElement& y) {
    if (x.a != y.a) throw InvalidArgument("quadfield: mixed field parameters");
}
}  // namespace

QuadFieldElement QuadFieldElement::operator+(const QuadFieldElement& o) const {
    require_same_field(*this, o);
    return {p + o.p, q + o.q, a};
}

QuadFieldElement QuadFieldElement::operator-(const QuadFieldElement& o) const {
    require_same_field(*this, o);
    return {p - o.p, q - o.q, a};
}

QuadFieldElement QuadFieldElement::operator*(const QuadFieldElement& o) const {
    require_same_field(*this, o);
    return {p * o.p + a * q * o.q, p * o.q + q * o.p, a};
}

bool QuadFieldElement::operator==(const QuadFieldElement& o) const {
    return a == o.a && p == o.p && q == o.q;
}

std::string QuadFieldElement::to_string() const {
    std::ostringstream os;
    os << p.get_str();
    if (q != 0) {
        os << (sgn(q) < 0 ? " - " : " + ") << mpq_class(abs(q)).get_str() << "*sqrt(" << a << ")";
    }
    return os.str();
}

std::optional<QuadFieldElement> sqrt_in_field(const QuadFieldElement& x) {
    if (x.q == 0) {
        mpq_class r;
        if (is_rational_square(x.p, &r)) return QuadFieldElement(r, 0, x.a);
        if (is_rational_square(x.p / x.a, &r)) return QuadFieldElement(0, r, x.a);
        return std::nullopt;
    }
    mpq_class r;
    if (!is_rational_square(x.norm(), &r)) return std::nullopt;
    for (int sign : {1, -1}) {
        mpq_class half = (x.p + sign * r) / 2;
        mpq_class s;
        if (is_rational_square(half, &s) && s != 0) {
            return QuadFieldElement(s, x.q / (2 * s), x.a);
        }
    }
    return std::nullopt;
}

QuadFieldElement eval_at(const RatPoly& f, const QuadFieldElement& x) {
    QuadFieldElement acc = QuadFieldElement::rational(0, x.a);
    for (int k = f.degree(); k >= 0; --k) {
        acc = acc * x + QuadFieldElement::rational(f.coeff(k), x.a);
    }
    return acc;
}

namespace {

void require_irreducible(const FactorizationQ& fq, const char* who) {
    if (fq.factors.size() != 1 || fq.factors[0].second != 1) {
        throw InvalidArgument(std::string(who) + ": polynomial must be irreducible over Q");
    }
}

// Roots of a rational cubic inside Q(sqrt(a)): rational roots, plus the
// conjugate pairs coming from rational quadratic factors whose
// discriminant lands in the square class of a.
std::vector<QuadFieldElement> roots_in_field(const RatPoly& cubic, int64_t a) {
    std::vector<QuadFieldElement> roots;
    FactorizationQ fq = factor_over_Q(cubic);
    for (const auto& [g, mult] : fq.factors) {
        (void)mult;
        if (g.degree() == 1) {
            roots.push_back(QuadFieldElement::rational(-g.coeff(0), a));
        } else if (g.degree() == 2) {
            mpq_class u = g.coeff(1), v = g.coeff(0);
            mpq_class d = u * u - 4 * v;
            mpq_class w;
            if (is_rational_square(a * d, &w)) {
                // d = a s^2 with s = w / a, so the roots are -u/2 +- (w/2a) sqrt(a).
                mpq_class s = w / a;
                roots.emplace_back(-u / 2, s / 2, a);
                roots.emplace_back(-u / 2, -s / 2, a);
            }
        }
    }
    return roots;
}

}  // namespace

bool sqrt_a_in_field_of(const RatPoly& g, int64_t a) {
    require_nonsquare(a);
    if (g.degree() < 1 || g.degree() > 4) {
        throw InvalidArgument("membership test: degree must be in {1,2,3,4}");
    }
    require_irreducible(factor_over_Q(g), "membership test");

    switch (g.degree()) {
        case 1:
        case 3:
            return false;  // odd degree: no quadratic subfield
        case 2: {
            RatPoly m = g.monic();
            mpq_class b = m.coeff(1), c = m.coeff(0);
            return is_rational_square(a * (b * b - 4 * c));
        }
        default:
            break;
    }

    // Degree 4: true iff g splits into two quadratics over K = Q(sqrt(a)).
    RatPoly m = g.monic();
    mpq_class shift = -m.coeff(3) / 4;
    RatPoly h = m.shifted(shift);  // depressed, same field
    mpq_class hp = h.coeff(2), hq = h.coeff(1), hr = h.coeff(0);
    RatPoly res = resolvent_cubic(h);

    for (const QuadFieldElement& z : roots_in_field(res, a)) {
        QuadFieldElement z_minus_p = z - QuadFieldElement::rational(hp, a);
        if (z_minus_p.p == 0 && z_minus_p.q == 0) {
            // z = p forces q = 0 (the resolvent has R(p) = -q^2); the
            // biquadratic route needs z^2 - 4r a square in K.
            QuadFieldElement disc = QuadFieldElement::rational(hp * hp - 4 * hr, a);
            if (sqrt_in_field(disc)) return true;
        } else if (sqrt_in_field(z_minus_p)) {
            return true;
        }
    }
    (void)hq;
    return false;
}

ProbeResult membership_probe(const RatPoly& g, int64_t a, uint64_t bound) {
    require_nonsquare(a);
    if (bound < 100) throw InvalidArgument("membership probe: bound must be >= 100");
    require_irreducible(factor_over_Q(g), "membership probe");

    IntPoly gi = integer_model(g);
    mpz_class bad = mpz_class(2) * mpz_class(a) * mpz_class(gi.leading());
    if (gi.degree() >= 2) bad *= discriminant(gi);
    bad = abs(bad);

    ProbeResult result{ProbeVerdict::ConsistentWithMember, 0};
    SegmentedPrimeSieve sieve(bound);
    sieve.for_each([&](uint64_t p) {
        if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) return true;
        if (count_roots_mod_p(gi, p) >= 1 && jacobi(a, p) == -1) {
            result = {ProbeVerdict::CertifiedNonmember, p};
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace chatelet
