#pragma once

// Deterministic random generators shared by the unit and acceptance suites.
// Every suite fixes its own seed, so failures reproduce exactly.

#include <random>
#include <vector>

#include "alexmod/coinvariants.hpp"
#include "alexmod/builtin.hpp"

namespace testsupport {

using namespace alexmod;
using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long span = 4) {
    long den = pick(rng, 0, 4) == 0 ? 2 : 1;
    return Rational(pick(rng, -span, span), den);
}

inline FieldElement random_field_element(Rng& rng, unsigned long n, long span = 3) {
    FieldElement v(random_rational(rng, span));
    if (n > 1 && pick(rng, 0, 1) == 0) {
        v = v + FieldElement(random_rational(rng, span)) *
                    FieldElement::zeta(n, pick(rng, 1, static_cast<long>(n) - 1));
    }
    return v;
}

inline FMatrix random_fmatrix(Rng& rng, std::size_t rows, std::size_t cols,
                              unsigned long n = 1) {
    FMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_field_element(rng, n);
    return m;
}

inline FMatrix random_invertible_fmatrix(Rng& rng, std::size_t dim, unsigned long n = 1) {
    for (;;) {
        FMatrix m = random_fmatrix(rng, dim, dim, n);
        if (!determinant(m).is_zero()) return m;
    }
}

inline ZMatrix random_zmatrix(Rng& rng, std::size_t rows, std::size_t cols, long span = 4) {
    ZMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Integer(pick(rng, -span, span));
    return m;
}

// Product of elementary row operations: always determinant +-1.
inline ZMatrix random_unimodular(Rng& rng, std::size_t dim, std::size_t ops = 0) {
    ZMatrix m = ZMatrix::identity(dim);
    if (dim == 0) return m;
    if (ops == 0) ops = 2 * dim + 2;
    for (std::size_t k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(dim) - 1));
        std::size_t j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(dim) - 1));
        switch (pick(rng, 0, 2)) {
        case 0:
            if (i != j) {
                Integer c(pick(rng, -2, 2));
                for (std::size_t col = 0; col < dim; ++col)
                    m.at(i, col) = m.at(i, col) + c * m.at(j, col);
            }
            break;
        case 1:
            if (i != j)
                for (std::size_t col = 0; col < dim; ++col)
                    std::swap(m.at(i, col), m.at(j, col));
            break;
        default:
            for (std::size_t col = 0; col < dim; ++col) m.at(i, col) = -m.at(i, col);
        }
    }
    return m;
}

inline FMatrix to_field(const ZMatrix& m) {
    FMatrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f.at(i, j) = FieldElement(m.at(i, j));
    return f;
}

// Monic polynomial with small integer coefficients and nonzero constant term.
inline FPoly random_monic(Rng& rng, int deg, long span = 3) {
    std::vector<FieldElement> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[static_cast<std::size_t>(k)] = FieldElement(pick(rng, -span, span));
    c[static_cast<std::size_t>(deg)] = FieldElement(1);
    if (c[0].is_zero()) c[0] = FieldElement(pick(rng, 0, 1) == 0 ? 1 : -1);
    return FPoly(c);
}

// Representation with unimodular integer matrices: valid in both modes.
inline MonodromyRep random_integral_rep(Rng& rng, std::size_t max_g = 3,
                                        std::size_t max_rank = 5) {
    MonodromyRep rep;
    rep.g = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(max_g)));
    rep.fiber_rank = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(max_rank)));
    for (std::size_t i = 0; i < rep.g; ++i) {
        rep.matrices.push_back(to_field(random_unimodular(rng, rep.fiber_rank)));
        rep.labels.push_back("v" + std::to_string(i));
    }
    rep.distinguished = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(rep.g) - 1));
    rep.n = 2;
    rep.h_good = true;
    return rep;
}

inline FreeWord random_word(Rng& rng, std::size_t g, std::size_t len) {
    FreeWord w;
    for (std::size_t k = 0; k < len; ++k) {
        std::size_t i = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(g)));
        FreeWord letter = FreeWord::generator(i);
        w = pick(rng, 0, 1) == 0 ? w * letter : w * letter.inverse();
    }
    return w;
}

} // namespace testsupport
