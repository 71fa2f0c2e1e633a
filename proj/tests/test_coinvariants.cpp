#include <catch2/catch_amalgamated.hpp>

#include "alexmod/parse.hpp"
#include "alexmod/verify.hpp"
#include "support.hpp"

using namespace alexmod;
using testsupport::Rng;

namespace {
FPoly fp(const char* text) { return parse_poly(text, 3); }

MonodromyRep conjugated(const MonodromyRep& rep, const FMatrix& p) {
    MonodromyRep out = rep;
    FMatrix pi = inverse(p);
    for (FMatrix& m : out.matrices) m = p * m * pi;
    return out;
}
}

TEST_CASE("group coinvariants of the built-in representations") {
    CoinvariantsResult zq = group_coinvariants(quadric_rep(), CoeffMode::integers);
    CHECK(zq.group == AbelianGroup::cyclic(Integer(2)));
    CHECK(zq.dimension == 0);

    CoinvariantsResult fq = group_coinvariants(quadric_rep(), CoeffMode::field);
    CHECK(fq.dimension == 0);
    CHECK(fq.group.is_trivial());

    CHECK(group_coinvariants(two_loop_family(FieldElement(0), 1), CoeffMode::field).dimension == 0);

    CoinvariantsResult c2 = group_coinvariants(two_loop_family(FieldElement(0), 2), CoeffMode::field);
    CHECK(c2.dimension == 1);
    REQUIRE(c2.witness.size() == 1);
    CHECK(c2.witness[0] == 1); // the class of the second basis vector survives
}

TEST_CASE("global module of the two-loop family") {
    for (long a : {0L, 5L}) {
        MultiActionModule g = global_alexander_module(
            two_loop_family(FieldElement(a), 2), CoeffMode::field);
        CHECK(g.ambient == 4);
        CHECK(g.quotient_dim == 1);
        REQUIRE(g.induced.size() == 2);
        CHECK(g.induced[0] == FMatrix::identity(1));
        CHECK(g.induced[1] == FMatrix::identity(1));
    }
    MultiActionModule g1 = global_alexander_module(
        two_loop_family(FieldElement(0), 1), CoeffMode::field);
    CHECK(g1.quotient_dim == 0);
}

TEST_CASE("a single generator leaves the fiber module untouched") {
    MonodromyRep rep = quadric_rep();
    MultiActionModule g = global_alexander_module(rep, CoeffMode::field);
    CHECK(g.quotient_dim == 1);
    CHECK(g.induced[0] == rep.matrices[0]);

    LocalModuleResult loc = local_alexander_module(rep, CoeffMode::field);
    CHECK(loc.module == module_from_automorphism(rep.matrices[0]));
    CHECK(loc.module.invariant_factors ==
          std::vector<FPoly>{parse_poly("t+1", 1)});
}

TEST_CASE("local module of the two-loop family") {
    for (std::size_t dist : {std::size_t{1}, std::size_t{0}}) {
        MonodromyRep rep = two_loop_family(FieldElement(0), 2);
        rep.distinguished = dist;
        LocalModuleResult loc = local_alexander_module(rep, CoeffMode::field);
        CHECK(loc.module == module_from_prime_powers({{fp("t-1"), {1}}}));
        CHECK(loc.induced_t == FMatrix::identity(1));
    }
}

TEST_CASE("integral local module of the quadric") {
    LocalModuleResult loc = local_alexander_module(quadric_rep(), CoeffMode::integers);
    CHECK(loc.z_module.lattice_rank == 1);
    CHECK(loc.z_module.action.at(0, 0) == Integer(-1));
    CHECK(loc.z_module.torsion_free());
    // companion oracle: the order polynomial of the action is t + 1
    CHECK(charpoly_z(loc.z_module.action) == ZPoly(std::vector<Integer>{1, 1}));
}

TEST_CASE("collapsing the global module reproduces the coinvariants") {
    MonodromyRep ref = two_loop_family(FieldElement(0), 2);
    MultiActionModule g = global_alexander_module(ref, CoeffMode::field);
    CoinvariantsResult collapsed = collapse_global_module(ref, g);
    CHECK(collapsed.dimension == group_coinvariants(ref, CoeffMode::field).dimension);

    for (CoeffMode mode : {CoeffMode::field, CoeffMode::integers}) {
        MultiActionModule qg = global_alexander_module(quadric_rep(), mode);
        CHECK(collapse_global_module(quadric_rep(), qg).group ==
              group_coinvariants(quadric_rep(), mode).group);
    }

    Rng rng(2026'08'19);
    for (int iter = 0; iter < 200; ++iter) {
        MonodromyRep rep = testsupport::random_integral_rep(rng);
        for (CoeffMode mode : {CoeffMode::field, CoeffMode::integers}) {
            MultiActionModule global = global_alexander_module(rep, mode);
            CoinvariantsResult a = collapse_global_module(rep, global);
            CoinvariantsResult b = group_coinvariants(rep, mode);
            CHECK(a.dimension == b.dimension);
            CHECK(a.group == b.group);
        }
    }
}

TEST_CASE("module data is invariant under a change of fiber basis") {
    Rng rng(2026'08'20);
    for (int iter = 0; iter < 200; ++iter) {
        MonodromyRep rep = testsupport::random_integral_rep(rng);
        FMatrix p = testsupport::random_invertible_fmatrix(rng, rep.fiber_rank, 1);
        MonodromyRep moved = conjugated(rep, p);
        CHECK(group_coinvariants(moved, CoeffMode::field).dimension ==
              group_coinvariants(rep, CoeffMode::field).dimension);
        MultiActionModule ga = global_alexander_module(rep, CoeffMode::field);
        MultiActionModule gb = global_alexander_module(moved, CoeffMode::field);
        CHECK(ga.quotient_dim == gb.quotient_dim);
        CHECK(local_alexander_module(rep, CoeffMode::field).module ==
              local_alexander_module(moved, CoeffMode::field).module);
    }
}

TEST_CASE("homology of the total space") {
    TotalSpaceHomology q = total_space_homology(quadric_rep(), CoeffMode::integers);
    CHECK(q.h1_rank == 1);
    CHECK(q.hn.group == AbelianGroup::cyclic(Integer(2)));
    CHECK(q.h_np1_rank == 0); // multiplication by -2 is injective
    CHECK(!q.extension_ends_only);

    MonodromyRep trivial;
    trivial.g = 2;
    trivial.fiber_rank = 3;
    trivial.matrices = {FMatrix::identity(3), FMatrix::identity(3)};
    trivial.labels = {"0", "1"};
    trivial.n = 1;
    TotalSpaceHomology t = total_space_homology(trivial, CoeffMode::field);
    CHECK(t.h1_rank == 2);
    CHECK(t.hn.dimension == 3);
    CHECK(t.h_np1_rank == 6);
    CHECK(t.extension_ends_only);
}

TEST_CASE("surjection chain of the reference family") {
    MonodromyRep rep = two_loop_family(FieldElement(0), 2);
    ChainReport chain = factorization_chain_report(rep);
    CHECK(chain.dim_fiber == 4);
    CHECK(chain.dim_global == 1);
    CHECK(chain.dim_local == 1);
    CHECK(chain.fiber_module == verify_detail::expect_m2());
    CHECK(chain.global_module == module_from_prime_powers({{fp("t-1"), {1}}}));
    CHECK(chain.local_module == chain.global_module);
    CHECK(chain.dominance_fiber_global);
    CHECK(chain.dominance_global_local);
    CHECK(chain.h_good);

    rep.distinguished = 0;
    ChainReport other = factorization_chain_report(rep);
    CHECK(other.fiber_module == verify_detail::expect_m1());
    CHECK(other.dominance_fiber_global);
    CHECK(other.dominance_global_local);
}

TEST_CASE("divisibility of word characteristic polynomials") {
    MonodromyRep rep = two_loop_family(FieldElement(0), 2);

    DivisibilityResult one = divisibility_check(rep, FreeWord::generator(2));
    CHECK(one.divides);
    CHECK(one.ell == 1);
    CHECK(one.transformed == fp("t-1"));
    CHECK(one.certificate * one.transformed == one.word_charpoly);

    DivisibilityResult big = divisibility_check(rep, FreeWord::parse("g1 g2"));
    CHECK(big.divides);
    CHECK(big.ell == 1);

    DivisibilityResult empty = divisibility_check(rep, FreeWord{});
    CHECK(empty.divides);
    CHECK(empty.ell == 0);
    CHECK(empty.word_charpoly == fp("(t-1)*(t-1)*(t-1)*(t-1)"));

    Rng rng(2026'08'21);
    for (int iter = 0; iter < 50; ++iter) {
        FreeWord w = testsupport::random_word(rng, rep.g, 6);
        DivisibilityResult r = divisibility_check(rep, w);
        CHECK(r.divides);
        CHECK(r.ell == winding(rep, w));
    }
}
