#include <catch2/catch_amalgamated.hpp>

#include "alexmod/verify.hpp"
#include "support.hpp"

using namespace alexmod;
using testsupport::Rng;

namespace {
FPoly fp(const char* text) { return parse_poly(text, 3); }
}

TEST_CASE("fiber modules of the reference Jordan forms") {
    CHECK(module_from_automorphism(two_loop_jordan_m1()) == verify_detail::expect_m1());
    CHECK(module_from_automorphism(two_loop_jordan_m2()) == verify_detail::expect_m2());
    CHECK(module_from_automorphism(two_loop_jordan_infinity()) ==
          verify_detail::expect_infinity());
}

TEST_CASE("module construction guards") {
    CHECK_THROWS_AS(module_from_automorphism(FMatrix(2, 3)), math_error);
    CHECK_THROWS_AS(module_from_automorphism(FMatrix(2, 2)), math_error); // singular
    LaurentModule id3 = module_from_automorphism(FMatrix::identity(3));
    CHECK(id3.invariant_factors == std::vector<FPoly>(3, fp("t-1")));
    CHECK(id3.is_torsion());
    CHECK(!id3.is_zero());
    CHECK(LaurentModule{}.is_zero());
}

TEST_CASE("order polynomial is the product of the chain") {
    CHECK(alexander_polynomial(verify_detail::expect_infinity()) ==
          fp("(t-1)*(t-1)*(t+1)*(t+1)"));
    CHECK(alexander_polynomial(LaurentModule{}) == FPoly::constant(FieldElement(1)));
}

TEST_CASE("prime torsion sequences") {
    CHECK(p_torsion_sequence(verify_detail::expect_m1(), fp("t-1")).exponents ==
          std::vector<unsigned>{2, 1, 1});
    CHECK(p_torsion_sequence(verify_detail::expect_infinity(), fp("t+1")).exponents ==
          std::vector<unsigned>{2});
    CHECK(p_torsion_sequence(verify_detail::expect_infinity(), fp("t-z")).exponents.empty());
    CHECK_THROWS_AS(p_torsion_sequence(verify_detail::expect_m1(), fp("t^2-1")), math_error);
}

TEST_CASE("dominance examples") {
    LaurentModule one = module_from_prime_powers({{fp("t-1"), {1}}});
    LaurentModule other = module_from_prime_powers({{fp("t+1"), {1}}});
    CHECK(dominance_check(one, LaurentModule{}));
    CHECK(!dominance_check(other, one));
    CHECK(dominance_check(verify_detail::expect_m1(), one));
}

TEST_CASE("dominance transitivity and order-polynomial divisibility") {
    Rng rng(2026'08'13);
    std::vector<FPoly> primes = {fp("t-1"), fp("t+1"), fp("t-z")};
    auto random_exponents = [&](unsigned cap) {
        std::vector<unsigned> e;
        for (long k = testsupport::pick(rng, 0, 3); k > 0; --k)
            e.push_back(static_cast<unsigned>(testsupport::pick(rng, 1, cap)));
        return e;
    };
    auto shrink = [&](const std::vector<unsigned>& e) {
        // drop some entries and lower the rest: a module dominated by e
        std::vector<unsigned> out;
        for (unsigned x : e) {
            if (testsupport::pick(rng, 0, 3) == 0) continue;
            unsigned y = static_cast<unsigned>(
                testsupport::pick(rng, 1, static_cast<long>(x)));
            out.push_back(y);
        }
        return out;
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::pair<FPoly, std::vector<unsigned>>> big, mid, small;
        for (const FPoly& p : primes) {
            std::vector<unsigned> e = random_exponents(3);
            std::vector<unsigned> m = shrink(e);
            std::vector<unsigned> s = shrink(m);
            if (!e.empty()) big.push_back({p, e});
            if (!m.empty()) mid.push_back({p, m});
            if (!s.empty()) small.push_back({p, s});
        }
        LaurentModule M = module_from_prime_powers(big);
        LaurentModule N = module_from_prime_powers(mid);
        LaurentModule P = module_from_prime_powers(small);
        if (dominance_check(M, N) && dominance_check(N, P)) {
            CHECK(dominance_check(M, P));
        }
        if (dominance_check(M, N)) {
            CHECK(poly_divides(alexander_polynomial(N), alexander_polynomial(M)));
        }
    }
}

TEST_CASE("power transform examples") {
    CHECK(power_transform(fp("t^2+t+1"), 3) == fp("(t-1)*(t-1)"));
    FPoly p = fp("(t-1)*(t+1)*(t-z)");
    CHECK(power_transform(p, 1) == p);
    CHECK(power_transform(p, 0) == fp("(t-1)*(t-1)*(t-1)"));
    // ell = -1 takes roots to their inverses
    FPoly q = FPoly(std::vector<FieldElement>{FieldElement(-2), FieldElement(1)});
    FPoly r = power_transform(q, -1);
    REQUIRE(r.degree() == 1);
    CHECK(r.coeff(0) == FieldElement(Rational(-1, 2)));
    CHECK_THROWS_AS(power_transform(fp("t"), 2), math_error);
}

TEST_CASE("power transform agrees with the companion-matrix oracle") {
    Rng rng(2026'08'14);
    for (int iter = 0; iter < 200; ++iter) {
        FPoly p = testsupport::random_monic(rng, static_cast<int>(testsupport::pick(rng, 1, 4)));
        long ell = testsupport::pick(rng, -3, 4);
        FMatrix c = companion_matrix(p);
        FMatrix power = ell >= 0 ? c.pow(static_cast<std::size_t>(ell))
                                 : inverse(c).pow(static_cast<std::size_t>(-ell));
        CHECK(power_transform(p, ell) == charpoly(power));
    }
}

TEST_CASE("integer lattice modules and covers") {
    ZMatrix minus1(1, 1);
    minus1.at(0, 0) = -1;
    ZLaurentModule m = z_module_from_automorphism(minus1);
    CHECK(m.lattice_rank == 1);
    CHECK(m.torsion_free());
    CHECK(cover_homology(m, ZLaurentModule{}, 1) == AbelianGroup::cyclic(Integer(2)));
    CHECK(cover_homology(m, ZLaurentModule{}, 2).rank == 1); // T^2 = I

    ZLaurentModule free5 = z_module_from_automorphism(ZMatrix::identity(5));
    AbelianGroup h = cover_homology(free5, ZLaurentModule{}, 3);
    CHECK(h.rank == 5);
    CHECK(h.torsion.empty());

    ZMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK_THROWS_AS(z_module_from_automorphism(two), math_error);
}

TEST_CASE("degree-one cover homology matches the direct Wang computation") {
    Rng rng(2026'08'15);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t dim = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        ZMatrix t = testsupport::random_unimodular(rng, dim);
        ZLaurentModule m = z_module_from_automorphism(t);
        ZMatrix ti = t - ZMatrix::identity(dim);
        CHECK(cover_homology(m, ZLaurentModule{}, 1) == cokernel_Z(ti));
        // degree e with the same module one level down: the kernel of
        // T^e - I contributes a free summand on top of the cokernel
        unsigned long e = static_cast<unsigned long>(testsupport::pick(rng, 1, 4));
        ZMatrix te = t.pow(e) - ZMatrix::identity(dim);
        AbelianGroup expected =
            direct_sum(cokernel_Z(te), AbelianGroup::free(dim - rank_z(te)));
        CHECK(cover_homology(m, m, e) == expected);
    }
}

TEST_CASE("order of the homology at t = 1") {
    CHECK(torsion_order_at_one(ZPoly(std::vector<Integer>{1, 1})) == Integer(2));
    CHECK(!torsion_order_at_one(ZPoly(std::vector<Integer>{-1, 1})).has_value());
    CHECK(torsion_order_at_one(ZPoly(std::vector<Integer>{-3, 1})) == Integer(2));
}

TEST_CASE("local system dimensions from the torsion modules") {
    std::map<std::size_t, LaurentModule> byd;
    byd[3] = module_from_prime_powers({{fp("t-1"), {1}}});
    auto dims = local_system_dims(byd, FieldElement(1), 3, 0);
    CHECK(dims.at(3) == 1);
    CHECK(dims.at(4) == 1); // N(1,3) + |chi| = 1 + 0
    auto dims_j = local_system_dims(byd, FieldElement::zeta(3), 3, 0);
    CHECK(dims_j.at(3) == 0);
    CHECK_THROWS_AS(local_system_dims(byd, FieldElement(0), 3, 0), math_error);
}

TEST_CASE("roots of unity audit") {
    RootsOfUnityAudit good = roots_of_unity_audit(verify_detail::expect_m2(), 60);
    CHECK(good.all_cyclotomic);
    CHECK(good.offending.empty());
    LaurentModule bad = module_from_prime_powers({{fp("t-2"), {1}}});
    RootsOfUnityAudit audit = roots_of_unity_audit(bad, 60);
    CHECK(!audit.all_cyclotomic);
    REQUIRE(audit.offending.size() == 1);
    CHECK(audit.offending[0] == fp("t-2"));
}

TEST_CASE("prime power assembly orders the chain correctly") {
    LaurentModule m = module_from_prime_powers({{fp("t-1"), {3, 1}}, {fp("t+1"), {2, 2, 1}}});
    REQUIRE(m.invariant_factors.size() == 3);
    // top of the chain carries the largest exponent of every prime
    CHECK(m.invariant_factors[2] == fp("(t-1)*(t-1)*(t-1)*(t+1)*(t+1)"));
    CHECK(m.invariant_factors[1] == fp("(t-1)*(t+1)*(t+1)"));
    CHECK(m.invariant_factors[0] == fp("t+1"));
    // chain divisibility
    CHECK(poly_divides(m.invariant_factors[0], m.invariant_factors[1]));
    CHECK(poly_divides(m.invariant_factors[1], m.invariant_factors[2]));
}
