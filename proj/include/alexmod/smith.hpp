#pragma once

// Smith normal form over Z and over K[t] (one algorithm, two Euclidean
// structures), Hermite normal form for integer row lattices, and the
// canonical finitely generated abelian group they produce.

#include "alexmod/matrix.hpp"

#include <tuple>

namespace alexmod {

// Canonical form: rank plus torsion chain c_1 | c_2 | ..., every c_i >= 2.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const AbelianGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_finite() const { return rank == 0; }
    Integer torsion_order() const {
        Integer p = 1;
        for (const auto& c : torsion) p *= c;
        return p;
    }

    static AbelianGroup free(std::size_t r) { return AbelianGroup{r, {}}; }
    static AbelianGroup cyclic(Integer c) {
        if (c == 0) return free(1);
        c = int_abs(c);
        return c == 1 ? AbelianGroup{} : AbelianGroup{0, {c}};
    }
};

// Direct sum, re-canonicalized via the Smith form of a diagonal matrix.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

namespace detail {

struct IntegerEuclid {
    using Value = Integer;
    static bool is_zero(const Integer& a) { return a == 0; }
    // strictly positive for nonzero entries; pivot choice minimizes this
    static Integer norm(const Integer& a) { return int_abs(a); }
    static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
        Integer q = a / b;  // truncated; |r| < |b|
        return {q, a - q * b};
    }
    static bool divides(const Integer& d, const Integer& a) { return a % d == 0; }
    // unit u with u*a canonical (positive / monic)
    static Integer canonical_unit(const Integer& a) { return a < 0 ? Integer(-1) : Integer(1); }
};

struct FPolyEuclid {
    using Value = FPoly;
    static bool is_zero(const FPoly& a) { return a.is_zero(); }
    static Integer norm(const FPoly& a) { return Integer(a.degree()); }
    static std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) {
        return poly_divmod(a, b);
    }
    static bool divides(const FPoly& d, const FPoly& a) { return poly_divides(d, a); }
    static FPoly canonical_unit(const FPoly& a) {
        return FPoly::constant(FieldElement(1) / a.leading());
    }
};

} // namespace detail

template <typename T>
struct SmithResult {
    Matrix<T> u, d, v;        // u * input * v == d, with u, v invertible over the ring
    std::vector<T> diagonal;  // length min(rows, cols), divisibility chain
};

namespace detail {

template <typename E>
SmithResult<typename E::Value> smith_normal_form(Matrix<typename E::Value> m) {
    using T = typename E::Value;
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix<T> u = Matrix<T>::identity(rows);
    Matrix<T> v = Matrix<T>::identity(cols);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    // row[a] -= q * row[b]; col[a] -= q * col[b]
    auto row_sub = [&](std::size_t a, const T& q, std::size_t b) {
        for (std::size_t j = 0; j < cols; ++j) m.at(a, j) = m.at(a, j) - q * m.at(b, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(a, j) = u.at(a, j) - q * u.at(b, j);
    };
    auto col_sub = [&](std::size_t a, const T& q, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) m.at(i, a) = m.at(i, a) - q * m.at(i, b);
        for (std::size_t i = 0; i < cols; ++i) v.at(i, a) = v.at(i, a) - q * v.at(i, b);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t s = 0; s < steps; ++s) {
        // minimal-norm pivot in the trailing submatrix
        bool found = false;
        std::size_t pi = s, pj = s;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                if (E::is_zero(m.at(i, j))) continue;
                if (!found || E::norm(m.at(i, j)) < E::norm(m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(s, pi);
        swap_cols(s, pj);

        for (;;) {
            // Euclidean clearing of column s and row s
            bool dirty = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (E::is_zero(m.at(i, s))) continue;
                auto [q, r] = E::divmod(m.at(i, s), m.at(s, s));
                row_sub(i, q, s);
                if (!E::is_zero(r)) {
                    swap_rows(s, i);
                    dirty = true;
                }
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (E::is_zero(m.at(s, j))) continue;
                auto [q, r] = E::divmod(m.at(s, j), m.at(s, s));
                col_sub(j, q, s);
                if (!E::is_zero(r)) {
                    swap_cols(s, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide every entry of the trailing submatrix
            bool fixed = true;
            for (std::size_t i = s + 1; i < rows && fixed; ++i)
                for (std::size_t j = s + 1; j < cols && fixed; ++j)
                    if (!E::divides(m.at(s, s), m.at(i, j))) {
                        row_sub(s, T() - T(1), i);  // row_s += row_i
                        fixed = false;
                    }
            if (fixed) break;
        }
        // canonical unit (sign / monic); scale row s
        T unit = E::canonical_unit(m.at(s, s));
        if (!(unit == T(1))) {
            for (std::size_t j = 0; j < cols; ++j) m.at(s, j) = unit * m.at(s, j);
            for (std::size_t j = 0; j < rows; ++j) u.at(s, j) = unit * u.at(s, j);
        }
    }

    SmithResult<T> res;
    res.diagonal.reserve(steps);
    for (std::size_t s = 0; s < steps; ++s) res.diagonal.push_back(m.at(s, s));
    for (std::size_t i = 0; i + 1 < res.diagonal.size(); ++i) {
        if (E::is_zero(res.diagonal[i + 1])) continue;
        if (E::is_zero(res.diagonal[i]) || !E::divides(res.diagonal[i], res.diagonal[i + 1]))
            throw math_error("smith normal form lost the divisibility chain");
    }
    res.u = std::move(u);
    res.d = std::move(m);
    res.v = std::move(v);
    return res;
}

} // namespace detail

// Minimal |entry| pivots; diagonal nonnegative with d_i | d_{i+1}.
inline SmithResult<Integer> smith_normal_form_Z(const ZMatrix& m) {
    return detail::smith_normal_form<detail::IntegerEuclid>(m);
}

// Minimal degree pivots; diagonal monic with d_i | d_{i+1}.
inline SmithResult<FPoly> smith_normal_form_poly(const Matrix<FPoly>& m) {
    return detail::smith_normal_form<detail::FPolyEuclid>(m);
}

// Z^rows modulo the column image of a.
inline AbelianGroup cokernel_Z(const ZMatrix& a) {
    SmithResult<Integer> s = smith_normal_form_Z(a);
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const auto& d : s.diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) g.torsion.push_back(d);
    }
    g.rank = a.rows() - nonzero;
    return g;
}

inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> all;
    all.insert(all.end(), a.torsion.begin(), a.torsion.end());
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    ZMatrix diag(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) diag.at(i, i) = all[i];
    AbelianGroup g = cokernel_Z(diag);
    g.rank = a.rank + b.rank;
    return g;
}

// Canonical row-style Hermite normal form of the lattice spanned by the rows
// of a: pivots positive, entries above each pivot reduced into [0, pivot),
// zero rows dropped.  Two generating sets span the same lattice iff their
// forms are identical.
inline ZMatrix hnf_rows(const ZMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Integer>> w(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = a.at(i, j);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // Euclidean elimination below position (row, col)
        for (;;) {
            std::size_t p = rows;
            for (std::size_t r = row; r < rows; ++r)
                if (w[r][col] != 0 && (p == rows || int_abs(w[r][col]) < int_abs(w[p][col])))
                    p = r;
            if (p == rows) break;
            std::swap(w[p], w[row]);
            bool cleared = true;
            for (std::size_t r = row + 1; r < rows; ++r) {
                if (w[r][col] == 0) continue;
                Integer q = w[r][col] / w[row][col];
                for (std::size_t j = 0; j < cols; ++j) w[r][j] -= q * w[row][j];
                if (w[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (row < rows && w[row][col] != 0) {
            if (w[row][col] < 0)
                for (auto& x : w[row]) x = -x;
            for (std::size_t r = 0; r < row; ++r) {
                // floor division so the residue lands in [0, pivot)
                Integer q = w[r][col] / w[row][col];
                if (q * w[row][col] > w[r][col]) q -= 1;
                if (w[r][col] - q * w[row][col] < 0) throw math_error("hnf reduction failed");
                if (q != 0)
                    for (std::size_t j = 0; j < cols; ++j) w[r][j] -= q * w[row][j];
            }
            ++row;
        }
    }
    ZMatrix h(row, cols);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < cols; ++j) h.at(i, j) = w[i][j];
    return h;
}

// Quotient Z^cols / row lattice of rel (rows are relation vectors).
inline AbelianGroup quotient_by_row_lattice(std::size_t ambient, const ZMatrix& rel) {
    if (rel.rows() == 0) return AbelianGroup::free(ambient);
    if (rel.cols() != ambient) throw math_error("relation width mismatch");
    return cokernel_Z(rel.transpose());
}

} // namespace alexmod
