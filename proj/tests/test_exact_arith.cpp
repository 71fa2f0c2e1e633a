#include <catch2/catch_amalgamated.hpp>

#include "alexmod/cyclotomic.hpp"
#include "alexmod/factor.hpp"
#include "alexmod/parse.hpp"
#include "support.hpp"

using namespace alexmod;
using testsupport::Rng;

namespace {
FPoly fp(const char* text, unsigned long n = 1) { return parse_poly(text, n); }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ZPoly(std::vector<Integer>{-1, 1}));
    CHECK(cyclotomic_poly(3) == ZPoly(std::vector<Integer>{1, 1, 1}));
    CHECK(cyclotomic_poly(12) == ZPoly(std::vector<Integer>{1, 0, -1, 0, 1}));
    for (unsigned long n = 1; n <= 30; ++n) {
        ZPoly phi = cyclotomic_poly(n);
        CHECK(phi.degree() == static_cast<int>(euler_phi(n)));
        CHECK(phi.leading() == 1);
    }
}

TEST_CASE("field element algebra on randomized inputs") {
    Rng rng(2026'08'01);
    const unsigned long orders[] = {1, 3, 4, 5, 8, 12};
    for (int iter = 0; iter < 200; ++iter) {
        unsigned long n = orders[iter % 6];
        FieldElement a = testsupport::random_field_element(rng, n);
        FieldElement b = testsupport::random_field_element(rng, n);
        FieldElement c = testsupport::random_field_element(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == FieldElement(1));
        }
    }
}

TEST_CASE("primitive root powers and embeddings") {
    FieldElement j = FieldElement::zeta(3);
    CHECK(j * j * j == FieldElement(1));
    CHECK(FieldElement(1) + j + j * j == FieldElement(0));
    FieldElement i = FieldElement::zeta(4);
    CHECK(i * i == FieldElement(-1));
    // mixed-order contact promotes to the lcm field
    FieldElement m = j * i;
    CHECK(m.field_order() == 12);
    CHECK(m.pow(12) == FieldElement(1));
}

TEST_CASE("square roots in cyclotomic fields") {
    // Gauss sum: sqrt(-3) lies in Q(zeta_3) and equals 1 + 2*zeta_3
    auto r = sqrt_in_field(FieldElement(-3).embed(3));
    REQUIRE(r.status == SqrtStatus::found);
    CHECK(r.root * r.root == FieldElement(-3));
    CHECK((r.root == parse_entry("1+2*z", 3) || r.root == parse_entry("-1-2*z", 3)));
    // sqrt(2) lies in Q(zeta_8)
    auto s = sqrt_in_field(FieldElement(2).embed(8));
    REQUIRE(s.status == SqrtStatus::found);
    CHECK(s.root * s.root == FieldElement(2));
    // sqrt(2) does not lie in Q
    CHECK(sqrt_in_field(FieldElement(2)).status == SqrtStatus::none);
    CHECK(sqrt_in_field(FieldElement(4)).root == FieldElement(2));
}

TEST_CASE("polynomial gcd examples") {
    CHECK(poly_gcd(fp("t^2-1"), fp("t-1")) == fp("t-1"));
    CHECK(poly_gcd(fp("(t-1)*(t-1)"), fp("(t-1)*(t-1)*(t-1)")) == fp("(t-1)*(t-1)"));
    CHECK(poly_gcd(fp("t^2+t+1"), fp("t^3-1")) == fp("t^2+t+1"));
    CHECK(poly_gcd(FPoly(), FPoly()).is_zero());
}

TEST_CASE("polynomial gcd divides both inputs") {
    Rng rng(2026'08'02);
    for (int iter = 0; iter < 200; ++iter) {
        FPoly p = testsupport::random_monic(rng, static_cast<int>(testsupport::pick(rng, 1, 4)));
        FPoly q = testsupport::random_monic(rng, static_cast<int>(testsupport::pick(rng, 1, 4)));
        FPoly c = testsupport::random_monic(rng, static_cast<int>(testsupport::pick(rng, 0, 2)));
        FPoly g = poly_gcd(p * c, q * c);
        CHECK(poly_divides(g, p * c));
        CHECK(poly_divides(g, q * c));
        CHECK(poly_divides(c, g)); // the common factor divides the gcd
        if (g.degree() >= 0) CHECK(g.leading() == FieldElement(1));
    }
}

TEST_CASE("resultant examples and conventions") {
    CHECK(sylvester_resultant(fp("t-1"), fp("t+1")) == FieldElement(2));
    CHECK(sylvester_resultant(fp("t^3-1"), fp("t+1")) == FieldElement(2));
    CHECK(sylvester_resultant(fp("t^3-1"), FPoly::constant(FieldElement(1))) ==
          FieldElement(1));
    CHECK_THROWS_AS(sylvester_resultant(FPoly(), fp("t-1")), math_error);
    CHECK_THROWS_AS(sylvester_resultant(fp("t-1"), FPoly()), math_error);
}

TEST_CASE("resultant antisymmetry and product formula") {
    Rng rng(2026'08'03);
    for (int iter = 0; iter < 200; ++iter) {
        int dp = static_cast<int>(testsupport::pick(rng, 1, 3));
        int dq = static_cast<int>(testsupport::pick(rng, 1, 3));
        FPoly p = testsupport::random_monic(rng, dp);
        FPoly q = testsupport::random_monic(rng, dq);
        FieldElement sign((dp * dq) % 2 == 0 ? 1 : -1);
        CHECK(sylvester_resultant(p, q) == sign * sylvester_resultant(q, p));
    }
    // product formula: Res(p, q) = prod q(alpha) over roots alpha of monic p
    FPoly p = fp("(t-1)*(t-2)");
    FPoly q = fp("t^2+1");
    FieldElement expected = (FieldElement(1) + FieldElement(1)) *
                            (FieldElement(4) + FieldElement(1));
    CHECK(sylvester_resultant(p, q) == expected);
}

TEST_CASE("factorize worked examples") {
    FactorizationReport r1 = factorize(fp("t^2-1"), 12);
    REQUIRE(r1.complete);
    REQUIRE(r1.resolved.size() == 2);
    CHECK(r1.unresolved.empty());

    FactorizationReport r2 = factorize(fp("(t-1)*(t-1)*(t^2+t+1)"), 12);
    REQUIRE(r2.complete);
    bool saw_linear = false, saw_phi3 = false;
    for (const auto& [f, e] : r2.resolved) {
        if (f == fp("t-1") && e == 2) saw_linear = true;
        if (f == fp("t^2+t+1") && e == 1) saw_phi3 = true;
    }
    CHECK(saw_linear);
    CHECK(saw_phi3);

    FactorizationReport r3 = factorize(fp("t^2-2"), 12);
    REQUIRE(r3.complete);
    REQUIRE(r3.resolved.size() == 1);
    CHECK(r3.resolved[0].first == fp("t^2-2"));

    // degree >= 3 with no rational or cyclotomic structure stays unresolved
    FactorizationReport r4 = factorize(fp("t^3-t-1"), 12);
    CHECK(!r4.complete);
    CHECK(!r4.unresolved.empty());
}

TEST_CASE("factorize reconstructs its input") {
    Rng rng(2026'08'04);
    for (int iter = 0; iter < 200; ++iter) {
        FPoly p = FPoly::constant(FieldElement(1));
        int parts = static_cast<int>(testsupport::pick(rng, 1, 3));
        for (int k = 0; k < parts; ++k) {
            switch (testsupport::pick(rng, 0, 3)) {
            case 0: p = p * fp("t-1"); break;
            case 1: p = p * fp("t+1"); break;
            case 2: p = p * fp("t^2+t+1"); break;
            default:
                p = p * FPoly(std::vector<FieldElement>{
                            FieldElement(testsupport::pick(rng, 1, 3)), FieldElement(1)});
            }
        }
        FactorizationReport r = factorize(p, 12);
        FPoly prod = FPoly::constant(r.unit);
        for (const auto& [f, e] : r.resolved)
            for (unsigned k = 0; k < e; ++k) prod = prod * f;
        for (const auto& [f, e] : r.unresolved)
            for (unsigned k = 0; k < e; ++k) prod = prod * f;
        CHECK(prod == p);
    }
}

TEST_CASE("factorization over larger cyclotomic fields") {
    // rational coefficients are factored over Q, where t^2 + t + 1 is prime
    FactorizationReport rational = factorize(fp("t^2+t+1", 3), 12);
    REQUIRE(rational.complete);
    REQUIRE(rational.resolved.size() == 1);
    CHECK(rational.resolved[0].first.degree() == 2);

    // coefficients mentioning zeta_3 promote the working field, where it splits
    FactorizationReport r = factorize(fp("(t-z)*(t-z^2)", 3), 12);
    REQUIRE(r.complete);
    REQUIRE(r.resolved.size() == 2);
    for (const auto& [f, e] : r.resolved) CHECK(f.degree() == 1);
    CHECK(is_certified_irreducible(fp("t^2+t+1"), 12));
    CHECK(!is_certified_irreducible(fp("t^2-1"), 12));
}

TEST_CASE("cyclotomic membership test") {
    CHECK(is_cyclotomic_within(to_fpoly(cyclotomic_poly(12)), 12));
    CHECK(!is_cyclotomic_within(to_fpoly(cyclotomic_poly(12)), 11));
    CHECK(!is_cyclotomic_within(fp("t^2-2"), 60));
}
