#pragma once

// Dense univariate polynomials over an exact coefficient ring R.
// R() must be the additive identity; coefficient vectors never carry
// trailing zeros, so representations are unique and == is structural.

#include "alexmod/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace alexmod {

template <typename R>
class Poly {
public:
    Poly() = default;
    explicit Poly(int v) : c_{R(v)} { trim(); }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
    static Poly monomial(R v, std::size_t k) {
        std::vector<R> c(k + 1);
        c[k] = std::move(v);
        return Poly(std::move(c));
    }

    // degree() == -1 identifies the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
    const std::vector<R>& coeffs() const { return c_; }

    R leading() const {
        if (c_.empty()) throw math_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    R constant_term() const { return coeff(0); }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<R> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<R> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const R& s, const Poly& p) {
        std::vector<R> r(p.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.c_[i];
        return Poly(std::move(r));
    }

    R evaluate(const R& x) const {
        R acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = R(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    // P(s*x): coefficient i scaled by s^i.
    Poly scale_variable(const R& s) const {
        std::vector<R> r(c_.size());
        R pw = R(1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i] = c_[i] * pw;
            pw = pw * s;
        }
        return Poly(std::move(r));
    }

    Poly pow(unsigned long e) const {
        Poly result = Poly::constant(R(1));
        Poly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R()) c_.pop_back();
    }
    std::vector<R> c_;
};

template <typename T> struct is_poly : std::false_type {};
template <typename R> struct is_poly<Poly<R>> : std::true_type {};

// Exact division in the supported rings; throws if the quotient does not
// exist in the ring.  Polynomial and Integer cases check their remainders.
template <typename R>
R exact_div(const R& a, const R& b);

// -- field polynomial algorithms --------------------------------------------

template <typename F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    Poly<F> q, r = a;
    F inv_lead = F(1) / b.leading();
    if (!(inv_lead * b.leading() == F(1)))
        throw math_error("polynomial division needs an invertible leading coefficient");
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        F coef = r.leading() * inv_lead;
        Poly<F> term = Poly<F>::monomial(coef, k);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

template <typename F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) { return poly_divmod(a, b).first; }
template <typename F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) { return poly_divmod(a, b).second; }

template <typename F>
bool poly_divides(const Poly<F>& d, const Poly<F>& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divmod(a, d).second.is_zero();
}

template <typename F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return (F(1) / p.leading()) * p;
}

// Euclidean gcd, monic-normalized; gcd(0,0) = 0.
template <typename F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <typename F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(F(1)), s1;
    Poly<F> t0, t1 = Poly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

// Yun's squarefree decomposition (characteristic zero): returns the list of
// (monic squarefree factor, multiplicity); trivial factors are skipped.
template <typename F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& p) {
    if (p.is_zero()) throw math_error("squarefree decomposition of zero");
    std::vector<std::pair<Poly<F>, unsigned>> out;
    Poly<F> f = monic(p);
    if (f.degree() == 0) return out;
    Poly<F> g = poly_gcd(f, f.derivative());
    Poly<F> b = f / g;
    Poly<F> c = f.derivative() / g;
    Poly<F> d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly<F> a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Monic reciprocal: roots a -> 1/a.  Requires nonzero constant term.
template <typename F>
Poly<F> reciprocal(const Poly<F>& p) {
    if (p.is_zero() || p.constant_term() == F())
        throw math_error("reciprocal requires nonzero constant term");
    std::vector<F> r(p.coeffs().rbegin(), p.coeffs().rend());
    return monic(Poly<F>(std::move(r)));
}

// Modular exponentiation of x in F[x]/(m): x^e mod m.
template <typename F>
Poly<F> powmod_x(unsigned long e, const Poly<F>& m) {
    if (m.degree() < 1) throw math_error("powmod_x modulus must have positive degree");
    Poly<F> result = Poly<F>::constant(F(1)) % m;
    Poly<F> base = Poly<F>::monomial(F(1), 1) % m;
    while (e) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return result;
}

// -- determinants and resultants --------------------------------------------

// Fraction-free Bareiss determinant over an integral domain with exact_div.
template <typename R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    for (const auto& row : m)
        if (row.size() != n) throw math_error("determinant of non-square matrix");
    bool negate = false;
    R prev = R(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == R()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == R()) ++swap_row;
            if (swap_row == n) return R();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
        prev = m[k][k];
    }
    return negate ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Resultant via the Sylvester matrix; valid over any integral domain with
// exact_div.  Conventions: Res(a, c) = c^deg(a) for constant c, and
// Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the roots of a, so
// Res(a, b) = (-1)^(deg a * deg b) Res(b, a).
template <typename R>
R sylvester_resultant(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) throw math_error("resultant of zero polynomial");
    const int da = a.degree(), db = b.degree();
    if (da == 0 && db == 0) return R(1);
    if (da == 0) {
        R r = R(1);
        for (int i = 0; i < db; ++i) r = r * a.coeff(0);
        return r;
    }
    if (db == 0) {
        R r = R(1);
        for (int i = 0; i < da; ++i) r = r * b.coeff(0);
        return r;
    }
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<R>> s(n, std::vector<R>(n));
    for (int row = 0; row < db; ++row)
        for (int j = 0; j <= da; ++j)
            s[row][row + j] = a.coeff(static_cast<std::size_t>(da - j));
    for (int row = 0; row < da; ++row)
        for (int j = 0; j <= db; ++j)
            s[db + row][row + j] = b.coeff(static_cast<std::size_t>(db - j));
    return bareiss_determinant(std::move(s));
}

template <typename R>
R exact_div(const R& a, const R& b) {
    if constexpr (std::is_same_v<R, Integer>) {
        if (b == 0) throw math_error("exact_div by zero");
        Integer q = a / b;
        if (q * b != a) throw math_error("exact_div: not divisible");
        return q;
    } else if constexpr (is_poly<R>::value) {
        auto [q, r] = poly_divmod(a, b);
        if (!r.is_zero()) throw math_error("exact_div: polynomial not divisible");
        return q;
    } else {
        if (b == R()) throw math_error("exact_div by zero");
        return a / b;
    }
}

} // namespace alexmod
