#include <catch2/catch_amalgamated.hpp>

#include "alexmod/builtin.hpp"
#include "alexmod/parse.hpp"
#include "alexmod/saturate.hpp"
#include "alexmod/smith.hpp"
#include "support.hpp"

using namespace alexmod;
using testsupport::Rng;

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(FMatrix::identity(3)).empty());
    CHECK(kernel_basis(FMatrix(2, 3)).size() == 3);
    FMatrix t = two_loop_jordan_m2();
    CHECK(kernel_basis(t - FMatrix::identity(4)).size() == 2);
}

TEST_CASE("rref, kernel, inverse, determinant on random matrices") {
    Rng rng(2026'08'05);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t rows = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        std::size_t cols = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        unsigned long n = iter % 3 == 0 ? 3 : 1;
        FMatrix a = testsupport::random_fmatrix(rng, rows, cols, n);
        auto r = rref(a);
        CHECK(r.rank <= std::min(rows, cols));
        auto kern = kernel_basis(a);
        CHECK(kern.size() == cols - r.rank);
        for (const auto& v : kern) {
            for (std::size_t i = 0; i < rows; ++i) {
                FieldElement acc;
                for (std::size_t j = 0; j < cols; ++j) acc = acc + a.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
        if (rows == cols) {
            FieldElement d = determinant(a);
            if (!d.is_zero()) {
                FMatrix inv = inverse(a);
                CHECK(a * inv == FMatrix::identity(rows));
            }
        }
    }
}

TEST_CASE("determinant is multiplicative and matches the charpoly constant") {
    Rng rng(2026'08'06);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t dim = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        FMatrix a = testsupport::random_fmatrix(rng, dim, dim);
        FMatrix b = testsupport::random_fmatrix(rng, dim, dim);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
        FPoly cp = charpoly(a);
        FieldElement sign(dim % 2 == 0 ? 1 : -1);
        CHECK(cp.coeff(0) == sign * determinant(a));
        CHECK(cp.leading() == FieldElement(1));
    }
}

TEST_CASE("charpoly of a companion matrix is the polynomial") {
    Rng rng(2026'08'07);
    for (int iter = 0; iter < 100; ++iter) {
        FPoly p = testsupport::random_monic(rng, static_cast<int>(testsupport::pick(rng, 1, 5)));
        CHECK(charpoly(companion_matrix(p)) == p);
    }
}

TEST_CASE("integer Smith normal form examples") {
    ZMatrix neg2(1, 1);
    neg2.at(0, 0) = -2;
    auto s1 = smith_normal_form_Z(neg2);
    REQUIRE(s1.diagonal.size() == 1);
    CHECK(s1.diagonal[0] == 2);

    ZMatrix d13(2, 2);
    d13.at(0, 0) = 1;
    d13.at(1, 1) = 3;
    auto s2 = smith_normal_form_Z(d13);
    CHECK(s2.diagonal == std::vector<Integer>{Integer(1), Integer(3)});

    AbelianGroup zero_cok = cokernel_Z(ZMatrix(3, 3));
    CHECK(zero_cok.rank == 3);
    CHECK(zero_cok.torsion.empty());
}

TEST_CASE("cokernel examples and canonicalization") {
    ZMatrix neg2(1, 1);
    neg2.at(0, 0) = -2;
    CHECK(cokernel_Z(neg2) == AbelianGroup::cyclic(Integer(2)));
    ZMatrix three(1, 1);
    three.at(0, 0) = 3;
    CHECK(cokernel_Z(three) == AbelianGroup::cyclic(Integer(3)));
    // diag(2,3) plus a zero row: rank 1 with torsion canonicalized to Z/6
    ZMatrix m(3, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    AbelianGroup g = cokernel_Z(m);
    CHECK(g.rank == 1);
    CHECK(g.torsion == std::vector<Integer>{Integer(6)});
}

TEST_CASE("Smith form transforms and divisibility chain") {
    Rng rng(2026'08'08);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t rows = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        std::size_t cols = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        ZMatrix a = testsupport::random_zmatrix(rng, rows, cols);
        auto s = smith_normal_form_Z(a);
        ZMatrix prod = s.u * a * s.v;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                CHECK(prod.at(i, j) == (i == j && i < s.diagonal.size() ? s.diagonal[i]
                                                                        : Integer(0)));
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            if (s.diagonal[i + 1] != 0)
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        if (rows == cols) {
            Integer det = determinant_z(a);
            if (det != 0) {
                Integer prod_d(1);
                for (const Integer& d : s.diagonal) prod_d *= d;
                CHECK(prod_d == int_abs(det));
            }
        }
    }
}

TEST_CASE("cokernel is invariant under unimodular transforms") {
    Rng rng(2026'08'09);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t rows = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        std::size_t cols = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        ZMatrix a = testsupport::random_zmatrix(rng, rows, cols);
        ZMatrix u = testsupport::random_unimodular(rng, rows);
        ZMatrix v = testsupport::random_unimodular(rng, cols);
        CHECK(cokernel_Z(u * a * v) == cokernel_Z(a));
    }
}

TEST_CASE("polynomial Smith normal form examples") {
    auto chain_of = [](const FMatrix& t) {
        return module_from_automorphism(t).invariant_factors;
    };
    CHECK(chain_of(FMatrix::identity(2)) ==
          std::vector<FPoly>{parse_poly("t-1", 1), parse_poly("t-1", 1)});
    CHECK(chain_of(companion_matrix(parse_poly("t^2-5*t+6", 1))) ==
          std::vector<FPoly>{parse_poly("t^2-5*t+6", 1)});
    FMatrix jordan(2, 2);
    jordan.at(0, 0) = jordan.at(1, 1) = jordan.at(0, 1) = FieldElement(1);
    CHECK(chain_of(jordan) == std::vector<FPoly>{parse_poly("(t-1)*(t-1)", 1)});
}

TEST_CASE("polynomial Smith form multiplies to the charpoly") {
    Rng rng(2026'08'10);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t dim = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        FMatrix t = testsupport::random_invertible_fmatrix(rng, dim);
        LaurentModule m = module_from_automorphism(t);
        FPoly prod = FPoly::constant(FieldElement(1));
        for (const FPoly& d : m.invariant_factors) prod = prod * d;
        CHECK(prod == charpoly(t));
    }
}

TEST_CASE("Hermite form is a lattice invariant") {
    Rng rng(2026'08'11);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t rows = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        std::size_t cols = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        ZMatrix a = testsupport::random_zmatrix(rng, rows, cols);
        ZMatrix u = testsupport::random_unimodular(rng, rows);
        CHECK(hnf_rows(u * a) == hnf_rows(a));
    }
}

TEST_CASE("saturation examples") {
    // empty generators span nothing
    CHECK(saturate_subspace(3, {}, {FMatrix::identity(3)}).rows() == 0);
    // e1 under the identity spans only e1
    std::vector<FieldElement> e1(3);
    e1[0] = FieldElement(1);
    FMatrix w = saturate_subspace(3, {e1}, {FMatrix::identity(3)});
    REQUIRE(w.rows() == 1);
    CHECK(w.at(0, 0) == FieldElement(1));
    CHECK(w.at(0, 1).is_zero());
    // integer mode: e1 under a swap of coordinates spans the first two
    ZMatrix swap01 = ZMatrix::identity(3);
    std::swap(swap01.at(0, 0), swap01.at(0, 1));
    std::swap(swap01.at(1, 1), swap01.at(1, 0));
    ZMatrix lw = saturate_lattice(3, {{Integer(1), Integer(0), Integer(0)}}, {swap01});
    CHECK(lw.rows() == 2);
}

TEST_CASE("saturation is a fixed point and closed under the operators") {
    Rng rng(2026'08'12);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t dim = static_cast<std::size_t>(testsupport::pick(rng, 1, 4));
        std::vector<FMatrix> ops;
        std::vector<ZMatrix> zops;
        for (long k = testsupport::pick(rng, 1, 2); k > 0; --k) {
            ZMatrix u = testsupport::random_unimodular(rng, dim);
            zops.push_back(u);
            ops.push_back(testsupport::to_field(u));
        }
        std::vector<std::vector<FieldElement>> seed;
        std::vector<std::vector<Integer>> zseed;
        for (long k = testsupport::pick(rng, 0, 2); k > 0; --k) {
            std::vector<FieldElement> v(dim);
            std::vector<Integer> zv(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                long x = testsupport::pick(rng, -2, 2);
                v[j] = FieldElement(x);
                zv[j] = Integer(x);
            }
            seed.push_back(v);
            zseed.push_back(zv);
        }
        FMatrix w = saturate_subspace(dim, seed, ops);
        std::vector<std::vector<FieldElement>> wrows;
        for (std::size_t i = 0; i < w.rows(); ++i) {
            std::vector<FieldElement> row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = w.at(i, j);
            wrows.push_back(row);
        }
        CHECK(saturate_subspace(dim, wrows, ops) == w);

        ZMatrix lw = saturate_lattice(dim, zseed, zops);
        std::vector<std::vector<Integer>> lrows;
        for (std::size_t i = 0; i < lw.rows(); ++i) {
            std::vector<Integer> row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = lw.at(i, j);
            lrows.push_back(row);
        }
        CHECK(saturate_lattice(dim, lrows, zops) == lw);
    }
}

TEST_CASE("quotient by a row lattice") {
    ZMatrix rel(1, 2);
    rel.at(0, 0) = 2;
    AbelianGroup q = quotient_by_row_lattice(2, rel);
    CHECK(q.rank == 1);
    CHECK(q.torsion == std::vector<Integer>{Integer(2)});
}
