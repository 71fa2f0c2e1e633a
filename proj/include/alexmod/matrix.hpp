#pragma once

// Dense matrices over exact coefficient types, plus the field algorithms
// (RREF, kernel, inverse, determinant, characteristic polynomial) shared by
// the module-theoretic layers.

#include "alexmod/cyclotomic.hpp"

#include <vector>

namespace alexmod {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), d_(std::move(data)) {
        if (d_.size() != rows_ * cols_) throw math_error("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return d_.at(i * cols_ + j); }
    const T& at(std::size_t i, std::size_t j) const { return d_.at(i * cols_ + j); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("matrix shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw math_error("matrix shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw math_error("matrix shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& av = a.at(i, k);
                if (av == T()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + av * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.d_.size(); ++i) r.d_[i] = s * m.d_[i];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw math_error("matrix-vector shape mismatch");
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
        return r;
    }

    Matrix pow(unsigned long e) const {
        if (!is_square()) throw math_error("matrix power of non-square matrix");
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> d_;
};

using FMatrix = Matrix<FieldElement>;
using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

inline QMatrix to_qmatrix(const ZMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j));
    return r;
}

inline FMatrix to_fmatrix(const ZMatrix& m) {
    FMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = FieldElement(m.at(i, j));
    return r;
}

// Integer matrix from a field matrix with rational-integer entries.
inline std::optional<ZMatrix> to_zmatrix(const FMatrix& m) {
    ZMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto v = m.at(i, j).as_integer();
            if (!v) return std::nullopt;
            r.at(i, j) = *v;
        }
    return r;
}

// -- field algorithms --------------------------------------------------------

template <typename F>
struct RrefResult {
    Matrix<F> m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

template <typename F>
RrefResult<F> rref(Matrix<F> a) {
    RrefResult<F> res;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a.at(p, col) == F()) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        F inv = F(1) / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = inv * a.at(row, j);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col) == F()) continue;
            F f = a.at(r, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(r, j) = a.at(r, j) - f * a.at(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    res.m = std::move(a);
    return res;
}

template <typename F>
std::size_t rank(const Matrix<F>& a) { return rref(a).rank; }

inline std::size_t rank_z(const ZMatrix& a) { return rank(to_qmatrix(a)); }

// Echelon-normalized kernel basis: one vector per free column, with a unit
// at the free coordinate.  Size checks the rank-nullity theorem.
template <typename F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& a) {
    RrefResult<F> r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(a.cols());
        v[free_col] = F(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    if (basis.size() + r.rank != a.cols())
        throw math_error("kernel dimension violates rank-nullity");
    return basis;
}

template <typename F>
Matrix<F> inverse(const Matrix<F>& a) {
    if (!a.is_square()) throw math_error("inverse of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Matrix<F>(0, 0);
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = F(1);
    }
    RrefResult<F> r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1)
        throw math_error("matrix is singular");
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

template <typename F>
F determinant(Matrix<F> a) {
    if (!a.is_square()) throw math_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    F det = F(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col) == F()) ++p;
        if (p == n) return F();
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
            det = -det;
        }
        det = det * a.at(col, col);
        F inv = F(1) / a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col) == F()) continue;
            F f = inv * a.at(r, col);
            for (std::size_t j = col; j < n; ++j)
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        }
    }
    return det;
}

inline Integer determinant_z(const ZMatrix& a) {
    Rational d = determinant(to_qmatrix(a));
    if (!is_integral(d)) throw math_error("integer determinant came out fractional");
    return numerator(d);
}

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recurrence
// (exact in characteristic zero).  Monic of degree n.
template <typename F>
Poly<F> charpoly(const Matrix<F>& a) {
    if (!a.is_square()) throw math_error("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<F> c(n + 1);
    c[n] = F(1);
    Matrix<F> m = Matrix<F>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        F tr{};
        for (std::size_t i = 0; i < n; ++i) tr = tr + m.at(i, i);
        F ck = -(tr / F(static_cast<long>(k)));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + ck;
    }
    return Poly<F>(std::move(c));
}

inline ZPoly charpoly_z(const ZMatrix& a) {
    Poly<Rational> p = charpoly(to_qmatrix(a));
    std::vector<Integer> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_integral(p.coeff(i))) throw math_error("integer charpoly came out fractional");
        c[i] = numerator(p.coeff(i));
    }
    return ZPoly(std::move(c));
}

// Inverse of an integer matrix with det = +-1 (exact, stays integral).
inline ZMatrix unimodular_inverse(const ZMatrix& a) {
    QMatrix inv = inverse(to_qmatrix(a));
    ZMatrix r(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (!is_integral(inv.at(i, j)))
                throw math_error("matrix inverse is not integral");
            r.at(i, j) = numerator(inv.at(i, j));
        }
    return r;
}

} // namespace alexmod
