#pragma once

// Smallest subspace (or full-rank sublattice data) containing a seed set
// and invariant under a family of operators.  Bases are kept in a canonical
// form (reduced row echelon over a field, Hermite form over Z) so that
// subobject equality is matrix equality.

#include "alexmod/matrix.hpp"
#include "alexmod/smith.hpp"

namespace alexmod {

namespace detail {

inline FMatrix rows_to_matrix(std::size_t cols, const std::vector<std::vector<FieldElement>>& rows) {
    FMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw math_error("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

inline FMatrix rref_rows(const FMatrix& m) {
    RrefResult r = rref(m);
    FMatrix out(r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.m.at(i, j);
    return out;
}

inline FMatrix stack_rows(const FMatrix& a, const FMatrix& b) {
    FMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

inline ZMatrix stack_rows(const ZMatrix& a, const ZMatrix& b) {
    ZMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

} // namespace detail

// Is v in the row span of the canonical (RREF) basis?
inline bool in_row_span(const FMatrix& basis, const std::vector<FieldElement>& v) {
    FMatrix test = detail::stack_rows(basis, detail::rows_to_matrix(basis.cols(), {v}));
    return rank(test) == basis.rows();
}

// Canonical basis (RREF rows) of the smallest subspace of F^n containing
// the seed rows and invariant under every operator and its inverse.
inline FMatrix saturate_subspace(std::size_t ambient_dim,
                                 const std::vector<std::vector<FieldElement>>& seed,
                                 const std::vector<FMatrix>& ops) {
    std::vector<FMatrix> all = ops;
    for (const FMatrix& o : ops) {
        if (o.rows() != ambient_dim || o.cols() != ambient_dim)
            throw math_error("operator shape mismatch");
        all.push_back(inverse(o));
    }
    FMatrix basis = detail::rref_rows(detail::rows_to_matrix(ambient_dim, seed));
    for (;;) {
        FMatrix next = basis;
        for (const FMatrix& o : all) next = detail::stack_rows(next, basis * o.transpose());
        next = detail::rref_rows(next);
        if (next.rows() == basis.rows()) {
            basis = next;
            break;
        }
        basis = next;
    }
    for (const auto& v : seed)
        if (!in_row_span(basis, v)) throw math_error("saturation lost a seed vector");
    for (const FMatrix& o : all) {
        FMatrix img = basis * o.transpose();
        for (std::size_t i = 0; i < img.rows(); ++i) {
            std::vector<FieldElement> row(img.cols());
            for (std::size_t j = 0; j < img.cols(); ++j) row[j] = img.at(i, j);
            if (!in_row_span(basis, row)) throw math_error("saturation not closed");
        }
    }
    return basis;
}

// Canonical basis (Hermite form rows) of the smallest sublattice of Z^n
// containing the seed rows and invariant under every operator and its
// inverse.  Operators must be invertible over Z.
inline ZMatrix saturate_lattice(std::size_t ambient_dim,
                                const std::vector<std::vector<Integer>>& seed,
                                const std::vector<ZMatrix>& ops) {
    std::vector<ZMatrix> all = ops;
    for (const ZMatrix& o : ops) {
        if (o.rows() != ambient_dim || o.cols() != ambient_dim)
            throw math_error("operator shape mismatch");
        all.push_back(unimodular_inverse(o));
    }
    ZMatrix seedm(seed.size(), ambient_dim);
    for (std::size_t i = 0; i < seed.size(); ++i) {
        if (seed[i].size() != ambient_dim) throw math_error("row length mismatch");
        for (std::size_t j = 0; j < ambient_dim; ++j) seedm.at(i, j) = seed[i][j];
    }
    ZMatrix basis = hnf_rows(seedm);
    for (;;) {
        ZMatrix next = basis;
        for (const ZMatrix& o : all) next = detail::stack_rows(next, basis * o.transpose());
        next = hnf_rows(next);
        if (next == basis) break;
        basis = next;
    }
    return basis;
}

} // namespace alexmod
