#include <doctest.h>

#include <random>

#include "chatelet/arith.hpp"
#include "chatelet/quadfield.hpp"

using namespace chatelet;

namespace {

RatPoly from_desc(std::vector<int64_t> desc) {
    std::vector<mpq_class> asc;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) asc.emplace_back(*it);
    return RatPoly(std::move(asc));
}

QuadFieldElement qfe(int64_t p, int64_t q, int64_t a) {
    return QuadFieldElement(mpq_class(p), mpq_class(q), a);
}

// (g, a, member?) corpus used for the probe consistency checks.
struct MemberCase {
    RatPoly g;
    int64_t a;
    bool member;
};

std::vector<MemberCase> membership_corpus() {
    std::vector<MemberCase> cases;
    auto add = [&](std::vector<int64_t> desc, int64_t a, bool member) {
        cases.push_back({from_desc(std::move(desc)), a, member});
    };
    add({1, 1}, -1, false);          // x + 1
    add({1, -1}, -3, false);         // x - 1
    add({1, 0, 1}, -1, true);        // x^2 + 1
    add({1, 0, 2}, -1, false);       // x^2 + 2
    add({1, 0, 2}, -2, true);
    add({1, 0, 3}, -3, true);
    add({1, 0, 3}, -1, false);
    add({1, 0, -2}, 2, true);
    add({1, 0, -2}, 8, true);        // Q(sqrt 8) = Q(sqrt 2)
    add({1, 0, -2}, 3, false);
    add({1, 0, 1, 1}, -1, false);    // irreducible cubic (x^3 + x + 1)
    add({1, 0, -2, 2}, -2, false);   // Eisenstein cubic
    add({1, 0, 0, 0, 1}, -1, true);  // x^4 + 1 over the eighth cyclotomic field
    add({1, 0, 0, 0, 1}, 2, true);
    add({1, 0, 0, 0, 1}, -2, true);
    add({1, 0, 0, 0, 1}, 3, false);
    add({1, 0, 0, 0, 1}, -3, false);
    add({1, 0, 0, 0, 1}, 5, false);
    add({1, 0, 0, 0, 1}, -4, true);  // square class of -1
    add({1, 0, 0, 0, 1}, 8, true);   // square class of 2
    add({1, 0, 2, 0, 2}, -1, true);  // x^4 + 2x^2 + 2 = (x^2+1)^2 + 1
    add({1, 0, 2, 0, 2}, 2, false);
    add({1, 0, 2, 0, 2}, -2, false); // Q(i) is its only quadratic subfield
    add({1, 0, 0, 1, 1}, -1, false);  // x^4 + x + 1 has no quadratic subfield (S4)
    add({1, 0, 0, 1, 1}, 2, false);
    add({1, 0, 0, 1, 1}, -3, false);
    add({1, 0, -1, 0, 1}, -1, true);  // x^4 - x^2 + 1: twelfth cyclotomic field,
    add({1, 0, -1, 0, 1}, 3, true);   // subfields Q(i), Q(sqrt 3), Q(sqrt -3)
    add({1, 0, -1, 0, 1}, -3, true);
    add({1, 0, -1, 0, 1}, 2, false);
    add({1, 0, -1, 0, 1}, 5, false);
    add({1, 0, -5, 0, 5}, 5, true);   // disc 5 quartic with sqrt(5) subfield
    add({1, 1, 1, 1, 1}, 5, true);    // 5th cyclotomic: Q(zeta_5) contains sqrt(5)
    add({1, 1, 1, 1, 1}, -5, false);
    add({1, 1, 1, 1, 1}, -1, false);
    return cases;
}

}  // namespace

TEST_CASE("is_rational_square") {
    mpq_class r;
    CHECK(is_rational_square(mpq_class(49, 9), &r));
    CHECK(r == mpq_class(7, 3));
    CHECK(is_rational_square(mpq_class(0), &r));
    CHECK(r == 0);
    CHECK_FALSE(is_rational_square(mpq_class(-4)));
    CHECK_FALSE(is_rational_square(mpq_class(2)));
    CHECK_FALSE(is_rational_square(mpq_class(1, 2)));
}

TEST_CASE("sqrt_in_field golden values") {
    // 2 sqrt(-1) = (1 + sqrt(-1))^2
    auto w = sqrt_in_field(qfe(0, 2, -1));
    REQUIRE(w.has_value());
    CHECK(*w * *w == qfe(0, 2, -1));
    CHECK((w->p == 1 || w->p == -1));

    CHECK_FALSE(sqrt_in_field(qfe(3, 0, -1)).has_value());
    CHECK_FALSE(sqrt_in_field(qfe(0, 1, -1)).has_value());  // sqrt(i) not in Q(i)

    // rational squares and a-multiples of squares
    CHECK(sqrt_in_field(qfe(9, 0, -1)).has_value());
    CHECK(sqrt_in_field(qfe(-4, 0, -1)).has_value());   // (2 sqrt(-1))^2
    CHECK(sqrt_in_field(qfe(8, 0, 2)).has_value());     // (2 sqrt(2))^2
    CHECK_FALSE(sqrt_in_field(qfe(-8, 0, 2)).has_value());
}

TEST_CASE("sqrt_in_field witness property on random squares") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64_t> dist(-20, 20);
    std::uniform_int_distribution<int64_t> as(-20, 20);
    int done = 0;
    while (done < 300) {
        int64_t a = as(rng);
        if (a == 0 || is_square_int(a)) continue;
        mpq_class wp(dist(rng), 1 + (done % 3)), wq(dist(rng), 2);
        wp.canonicalize();
        wq.canonicalize();
        QuadFieldElement w(wp, wq, a);
        QuadFieldElement x = w * w;
        auto root = sqrt_in_field(x);
        REQUIRE(root.has_value());
        CHECK(*root * *root == x);
        ++done;
    }
    // and non-squares stay non-squares: x vs a*x for x a square with q != 0
    int refused = 0;
    while (refused < 100) {
        int64_t a = as(rng);
        if (a == 0 || is_square_int(a)) continue;
        QuadFieldElement w(mpq_class(dist(rng)), mpq_class(dist(rng)), a);
        if (w.q == 0 || w.p == 0) continue;
        QuadFieldElement x = w * w * QuadFieldElement(mpq_class(a), mpq_class(0), a);
        // a * square is a square iff a is a square in the field iff ... a = (sqrt a)^2: true!
        // Use a nonsquare twist instead: multiply by a small non-square rational.
        QuadFieldElement y = x * QuadFieldElement(mpq_class(7), mpq_class(0), a);
        auto ry = sqrt_in_field(y);
        if (ry.has_value()) {
            CHECK(*ry * *ry == y);  // accepted only with a valid witness
        }
        ++refused;
    }
}

TEST_CASE("membership golden values") {
    CHECK(sqrt_a_in_field_of(from_desc({1, 0, 1}), -1));
    CHECK_FALSE(sqrt_a_in_field_of(from_desc({1, 0, 2}), -1));
    CHECK(sqrt_a_in_field_of(from_desc({1, 0, 0, 0, 1}), 2));
    CHECK_FALSE(sqrt_a_in_field_of(from_desc({1, 0, 0, 0, 1}), 3));
    // odd degrees never contain a quadratic field
    CHECK_FALSE(sqrt_a_in_field_of(from_desc({1, -1}), -1));
    CHECK_FALSE(sqrt_a_in_field_of(from_desc({1, 0, 1, 1}), -1));
    // reducible input is a caller bug
    CHECK_THROWS_AS(sqrt_a_in_field_of(from_desc({1, 0, -1}), -1), InvalidArgument);
    CHECK_THROWS_AS(sqrt_a_in_field_of(from_desc({1, 0, 3, 0, 2}), -1), InvalidArgument);
}

TEST_CASE("cyclotomic quartic x^4 + 1: quadratic subfields are exactly -1, 2, -2") {
    RatPoly g = from_desc({1, 0, 0, 0, 1});
    for (int64_t a : {-1, 2, -2}) CHECK(sqrt_a_in_field_of(g, a));
    for (int64_t a : {3, -3, 5, -5, 6, 7, 10}) CHECK_FALSE(sqrt_a_in_field_of(g, a));
}

TEST_CASE("membership is invariant under scaling and shifts") {
    std::mt19937_64 rng(151);
    std::uniform_int_distribution<int64_t> shifts(-6, 6);
    std::uniform_int_distribution<int64_t> scales(1, 9);
    auto corpus = membership_corpus();
    int transforms = 0;
    for (const auto& mc : corpus) {
        for (int i = 0; i < 2 && transforms < 50; ++i, ++transforms) {
            mpq_class c(shifts(rng));
            mpq_class s(scales(rng), 1 + (transforms % 2));
            RatPoly g2 = mc.g.shifted(c) * s;
            CAPTURE(mc.g.to_string());
            CAPTURE(mc.a);
            CHECK(sqrt_a_in_field_of(g2, mc.a) == mc.member);
        }
    }
}

TEST_CASE("membership corpus against expected values and the probe") {
    auto corpus = membership_corpus();
    REQUIRE(corpus.size() >= 30);
    for (const auto& mc : corpus) {
        CAPTURE(mc.g.to_string());
        CAPTURE(mc.a);
        CHECK(sqrt_a_in_field_of(mc.g, mc.a) == mc.member);
        ProbeResult probe = membership_probe(mc.g, mc.a, 10000);
        if (mc.member) {
            // members can never be certified nonmembers
            CHECK(probe.verdict == ProbeVerdict::ConsistentWithMember);
        }
        if (probe.verdict == ProbeVerdict::CertifiedNonmember) {
            CHECK_FALSE(mc.member);
            CHECK(probe.witness_prime >= 3);
        }
        // degree <= 2: the square-class test is the whole story
        if (mc.g.degree() == 2) {
            RatPoly m = mc.g.monic();
            mpq_class d = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
            CHECK(is_rational_square(mc.a * d) == mc.member);
        }
    }
}

TEST_CASE("probe golden verdicts") {
    ProbeResult r1 = membership_probe(from_desc({1, 0, 2}), -1, 100);
    CHECK(r1.verdict == ProbeVerdict::CertifiedNonmember);
    CHECK(r1.witness_prime == 3);  // x^2 + 2 has the root 1 mod 3 and (-1/3) = -1

    ProbeResult r2 = membership_probe(from_desc({1, 0, 1}), -1, 10000);
    CHECK(r2.verdict == ProbeVerdict::ConsistentWithMember);

    ProbeResult r3 = membership_probe(from_desc({1, -1}), -1, 100);
    CHECK(r3.verdict == ProbeVerdict::CertifiedNonmember);

    CHECK_THROWS_AS(membership_probe(from_desc({1, 0, 1}), -1, 50), InvalidArgument);
}
