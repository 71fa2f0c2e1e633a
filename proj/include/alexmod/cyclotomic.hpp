#pragma once

// Exact arithmetic in Q and in the cyclotomic fields Q(zeta_N), represented
// as Q[z]/(Phi_N) on the power basis 1, z, ..., z^(phi(N)-1).  Coordinates
// are exact rationals; N = 1 is Q itself.  Elements of different fields
// promote to Q(zeta_lcm) on contact, so rational constants mix freely.

#include "alexmod/numeric.hpp"
#include "alexmod/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

namespace alexmod {

using QPoly = Poly<Rational>;
using ZPoly = Poly<Integer>;

// Phi_k over Z: t^k - 1 divided by the Phi_d for proper divisors d | k.
inline const ZPoly& cyclotomic_poly(unsigned long k) {
    static std::mutex mu;
    static std::map<unsigned long, ZPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    if (k == 0) throw math_error("cyclotomic_poly(0)");
    // compute recursively without re-locking
    std::vector<unsigned long> todo = divisors(k);
    for (unsigned long d : todo) {
        if (cache.count(d)) continue;
        std::vector<Integer> xk(d + 1);
        xk[0] = -1;
        xk[d] = 1;
        ZPoly num{std::vector<Integer>(xk)};
        for (unsigned long e : divisors(d)) {
            if (e == d) continue;
            num = exact_div(num, cache.at(e));
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(k);
}

inline QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    return QPoly(std::move(c));
}

namespace detail {

struct CyclotomicContext {
    unsigned long n = 1;
    unsigned long phi = 1;
    QPoly modulus;                             // Phi_n, monic of degree phi
    std::vector<std::vector<Rational>> xpow;   // z^(phi+i) mod Phi_n

    explicit CyclotomicContext(unsigned long N) : n(N), phi(euler_phi(N)) {
        modulus = to_qpoly(cyclotomic_poly(N));
        xpow.resize(phi > 1 ? phi - 1 : 0);
        QPoly cur = powmod_x(phi, modulus);
        for (auto& row : xpow) {
            row.assign(phi, Rational(0));
            for (std::size_t j = 0; j < cur.coeffs().size(); ++j) row[j] = cur.coeff(j);
            cur = cur * QPoly::monomial(Rational(1), 1) % modulus;
        }
    }

    // Reduce a raw coefficient vector (degree < 2*phi - 1) mod Phi_n.
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const {
        std::vector<Rational> out(phi, Rational(0));
        for (std::size_t i = 0; i < raw.size() && i < phi; ++i) out[i] = raw[i];
        for (std::size_t i = phi; i < raw.size(); ++i) {
            if (raw[i] == 0) continue;
            const auto& row = xpow.at(i - phi);
            for (std::size_t j = 0; j < phi; ++j) out[j] += raw[i] * row[j];
        }
        return out;
    }
};

inline const CyclotomicContext& field_context(unsigned long N) {
    static std::mutex mu;
    static std::map<unsigned long, std::unique_ptr<CyclotomicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[N];
    if (!slot) slot = std::make_unique<CyclotomicContext>(N);
    return *slot;
}

} // namespace detail

class FieldElement {
public:
    FieldElement() : n_(1), c_{Rational(0)} {}
    FieldElement(int v) : n_(1), c_{Rational(v)} {}
    FieldElement(long v) : n_(1), c_{Rational(v)} {}
    FieldElement(const Integer& v) : n_(1), c_{Rational(v)} {}
    FieldElement(const Rational& v) : n_(1), c_{v} {}

    static FieldElement from_coords(unsigned long N, std::vector<Rational> coords) {
        const auto& ctx = detail::field_context(N);
        if (coords.size() != ctx.phi)
            throw math_error("coordinate vector length must equal phi(N)");
        FieldElement e;
        e.n_ = N;
        e.c_ = std::move(coords);
        return e;
    }

    // zeta_N^k
    static FieldElement zeta(unsigned long N, long k = 1) {
        if (N == 0) throw math_error("zeta order must be positive");
        const auto& ctx = detail::field_context(N);
        long r = k % static_cast<long>(N);
        if (r < 0) r += static_cast<long>(N);
        QPoly zp = powmod_x(static_cast<unsigned long>(r), ctx.modulus);
        std::vector<Rational> coords(ctx.phi, Rational(0));
        for (std::size_t i = 0; i < zp.coeffs().size(); ++i) coords[i] = zp.coeff(i);
        return from_coords(N, std::move(coords));
    }

    unsigned long field_order() const { return n_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_) if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
        return true;
    }
    Rational as_rational() const {
        if (!is_rational()) throw math_error("field element is not rational");
        return c_[0];
    }
    std::optional<Integer> as_integer() const {
        if (!is_rational() || !is_integral(c_[0])) return std::nullopt;
        return numerator(c_[0]);
    }

    // Rewrite in Q(zeta_M); requires N | M.
    FieldElement embed(unsigned long M) const {
        if (M == n_) return *this;
        if (M % n_ != 0) throw math_error("embed target must be a multiple of the field order");
        const auto& ctx = detail::field_context(M);
        std::vector<Rational> out(ctx.phi, Rational(0));
        const unsigned long step = M / n_;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            QPoly zi = powmod_x(step * i, ctx.modulus);
            for (std::size_t j = 0; j < zi.coeffs().size(); ++j) out[j] += c_[i] * zi.coeff(j);
        }
        return from_coords(M, std::move(out));
    }

    friend unsigned long common_order(const FieldElement& a, const FieldElement& b) {
        if (a.n_ == b.n_) return a.n_;
        return a.n_ / std::gcd(a.n_, b.n_) * b.n_;
    }

    bool operator==(const FieldElement& o) const {
        if (n_ == o.n_) return c_ == o.c_;
        unsigned long m = common_order(*this, o);
        return embed(m).c_ == o.embed(m).c_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator-() const {
        FieldElement r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        if (a.n_ != b.n_) {
            unsigned long m = common_order(a, b);
            return a.embed(m) + b.embed(m);
        }
        FieldElement r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        if (a.n_ != b.n_) {
            unsigned long m = common_order(a, b);
            return a.embed(m) * b.embed(m);
        }
        if (a.n_ == 1) {
            FieldElement r;
            r.c_[0] = a.c_[0] * b.c_[0];
            return r;
        }
        const auto& ctx = detail::field_context(a.n_);
        std::vector<Rational> raw(2 * ctx.phi - 1, Rational(0));
        for (std::size_t i = 0; i < ctx.phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < ctx.phi; ++j) {
                if (b.c_[j] == 0) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return from_coords(a.n_, ctx.reduce(raw));
    }

    FieldElement inverse() const {
        if (is_zero()) throw math_error("division by zero field element");
        if (n_ == 1) {
            FieldElement r;
            r.c_[0] = Rational(1) / c_[0];
            return r;
        }
        const auto& ctx = detail::field_context(n_);
        QPoly self{std::vector<Rational>(c_)};
        auto [g, u, v] = poly_ext_gcd(self, ctx.modulus);
        if (g.degree() != 0) throw math_error("cyclotomic modulus not coprime to element");
        QPoly inv = u % ctx.modulus;
        std::vector<Rational> coords(ctx.phi, Rational(0));
        for (std::size_t i = 0; i < inv.coeffs().size(); ++i) coords[i] = inv.coeff(i);
        return from_coords(n_, std::move(coords));
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    FieldElement pow(long e) const {
        FieldElement base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
        FieldElement result(1);
        while (k) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

private:
    unsigned long n_;
    std::vector<Rational> c_;
};

// Total order used only for canonical output: by field order, then by
// lexicographic coordinate comparison in the common field.
inline int field_compare(const FieldElement& a, const FieldElement& b) {
    unsigned long m = common_order(a, b);
    const auto av = a.embed(m).coords(), bv = b.embed(m).coords();
    for (std::size_t i = 0; i < av.size(); ++i) {
        if (av[i] < bv[i]) return -1;
        if (av[i] > bv[i]) return 1;
    }
    return 0;
}

using FPoly = Poly<FieldElement>;

inline FPoly to_fpoly(const ZPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return FPoly(std::move(c));
}

inline FPoly to_fpoly(const QPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return FPoly(std::move(c));
}

// A field polynomial whose coefficients are all rational integers.
inline std::optional<ZPoly> to_zpoly(const FPoly& p) {
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        auto v = x.as_integer();
        if (!v) return std::nullopt;
        c.push_back(*v);
    }
    return ZPoly(std::move(c));
}

inline std::optional<QPoly> to_qpoly(const FPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_rational()) return std::nullopt;
        c.push_back(x.as_rational());
    }
    return QPoly(std::move(c));
}

// All roots of unity contained in Q(zeta_N): the group generated by -1 and
// zeta_N, of order lcm(2, N).
inline std::vector<FieldElement> roots_of_unity_in(unsigned long N) {
    std::vector<FieldElement> out;
    for (unsigned long i = 0; i < N; ++i) {
        FieldElement z = FieldElement::zeta(N, static_cast<long>(i));
        out.push_back(z);
        if (N % 2 == 1) out.push_back(-z);
    }
    return out;
}

// Multiplicative order of a root of unity in Q(zeta_N), if x is one.
inline std::optional<unsigned long> order_of_unity(const FieldElement& x) {
    unsigned long N = x.field_order();
    unsigned long bound = N % 2 == 0 ? N : 2 * N;
    FieldElement acc(1);
    for (unsigned long k = 1; k <= bound; ++k) {
        acc = acc * x;
        if (acc == FieldElement(1)) return k;
    }
    return std::nullopt;
}

namespace detail {

// Solve sum_i x_i * basis_i = y exactly over Q; basis vectors of length m.
// Returns nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_rational(
    std::vector<std::vector<Rational>> cols, const std::vector<Rational>& y) {
    const std::size_t m = y.size(), k = cols.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
    for (std::size_t i = 0; i < m; ++i) a[i][k] = y[i];
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        Rational inv = Rational(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t cc = col; cc <= k; ++cc) a[r][cc] -= f * a[row][cc];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (a[r][k] != 0) return std::nullopt;
    std::vector<Rational> x(k, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][k];
    return x;
}

} // namespace detail

// Rewrite x in Q(zeta_M) for M | field order, when x actually lies there.
inline std::optional<FieldElement> field_descend(const FieldElement& x, unsigned long M) {
    if (x.field_order() == M) return x;
    if (x.field_order() % M != 0) throw math_error("field_descend target must divide the order");
    const auto& small = detail::field_context(M);
    std::vector<std::vector<Rational>> cols;
    for (unsigned long i = 0; i < small.phi; ++i) {
        FieldElement b = FieldElement::zeta(M, static_cast<long>(i)).embed(x.field_order());
        cols.push_back(b.coords());
    }
    auto sol = detail::solve_rational(std::move(cols), x.coords());
    if (!sol) return std::nullopt;
    return FieldElement::from_coords(M, std::move(*sol));
}

// -- exact square roots ------------------------------------------------------

enum class SqrtStatus { found, none, unknown };

struct SqrtResult {
    SqrtStatus status = SqrtStatus::unknown;
    FieldElement root;  // valid when status == found
};

namespace detail {

// Conductor of Q(sqrt(s)) for squarefree s != 0, 1.
inline Integer quadratic_conductor(const Integer& s) {
    Integer m = int_abs(s);
    // s == 1 (mod 4) keeps conductor |s|; otherwise 4|s|.
    Integer r = ((s % 4) + 4) % 4;
    return r == 1 ? m : 4 * m;
}

// Quadratic Gauss sum for an odd prime p inside Q(zeta_N) (requires p | N):
// squares to p for p = 1 (mod 4) and to -p for p = 3 (mod 4).
inline FieldElement gauss_sum(unsigned long p, unsigned long N) {
    FieldElement g(0);
    for (unsigned long a = 1; a < p; ++a) {
        // Euler's criterion with machine integers (p is small).
        unsigned long ls = 1, base = a % p, e = (p - 1) / 2;
        while (e) {
            if (e & 1) ls = ls * base % p;
            base = base * base % p;
            e >>= 1;
        }
        FieldElement term = FieldElement::zeta(N, static_cast<long>(N / p * a));
        g = ls == 1 ? g + term : g - term;
    }
    return g;
}

} // namespace detail

// Exact square root of a rational value inside Q(zeta_N).  Decidable in all
// cases: sqrt(q) lies in the field iff the conductor of the squarefree part
// divides N, and then the root is assembled from quadratic Gauss sums.
inline SqrtResult rational_sqrt_in_field(const Rational& q, unsigned long N) {
    if (q == 0) return {SqrtStatus::found, FieldElement(0)};
    if (auto r = rational_sqrt(q)) return {SqrtStatus::found, FieldElement(*r)};
    Integer D = numerator(q) * denominator(q);
    auto [s, m] = squarefree_decompose(D);
    Integer cond = detail::quadratic_conductor(s);
    if (cond > Integer(std::numeric_limits<long>::max()) || Integer(N) % cond != 0)
        return {SqrtStatus::none, FieldElement(0)};
    FieldElement v(1);
    Integer odd = int_abs(s);
    if (odd % 2 == 0) {
        odd /= 2;
        // sqrt(2) = zeta_8 + zeta_8^-1 (8 | 4|s| | N here)
        v = FieldElement::zeta(N, static_cast<long>(N / 8)) +
            FieldElement::zeta(N, -static_cast<long>(N / 8));
    }
    for (auto [p, e] : factor_small(static_cast<unsigned long>(odd)))
        v = v * detail::gauss_sum(p, N);
    FieldElement target{Rational(s)};
    if (!(v * v == target)) {
        // off by the sign the Gauss sums carry; fix with zeta_4
        v = v * FieldElement::zeta(N, static_cast<long>(N / 4));
        if (!(v * v == target)) throw math_error("gauss sum square root construction failed");
    }
    FieldElement root = FieldElement(Rational(m, denominator(q))) * v;
    if (!(root * root == FieldElement(q))) throw math_error("rational square root verification failed");
    return {SqrtStatus::found, root};
}

// Exact square root in Q(zeta_N) where decidable: rational values always;
// any value when phi(N) = 2 (coordinate equations reduce to rational
// quadratics); otherwise the answer may be unknown.
inline SqrtResult sqrt_in_field(const FieldElement& x) {
    const unsigned long N = x.field_order();
    if (x.is_rational()) return rational_sqrt_in_field(x.as_rational(), N);
    const auto& ctx = detail::field_context(N);
    if (ctx.phi != 2) return {SqrtStatus::unknown, FieldElement(0)};
    // z^2 = alpha*z + beta from the modulus; x = d0 + d1*z with d1 != 0.
    Rational alpha = -ctx.modulus.coeff(1), beta = -ctx.modulus.coeff(0);
    Rational d0 = x.coords()[0], d1 = x.coords()[1];
    // (x0 + x1 z)^2 = x with u = x1^2 forces
    // (alpha^2 + 4 beta) u^2 - (2 alpha d1 + 4 d0) u + d1^2 = 0.
    Rational A = alpha * alpha + 4 * beta;
    Rational B = -(2 * alpha * d1 + 4 * d0);
    Rational C = d1 * d1;
    std::vector<Rational> us;
    if (A == 0) {
        if (B != 0) us.push_back(-C / B);
    } else {
        Rational disc = B * B - 4 * A * C;
        if (auto sd = rational_sqrt(disc)) {
            us.push_back((-B + *sd) / (2 * A));
            if (*sd != 0) us.push_back((-B - *sd) / (2 * A));
        }
    }
    for (const Rational& u : us) {
        auto x1 = rational_sqrt(u);
        if (!x1 || *x1 == 0) continue;
        Rational x0 = (d1 - alpha * u) / (2 * *x1);
        FieldElement cand = FieldElement::from_coords(N, {x0, *x1});
        if (cand * cand == x) return {SqrtStatus::found, cand};
    }
    return {SqrtStatus::none, FieldElement(0)};
}

// -- cyclotomic polynomials over Q(zeta_N) -----------------------------------

// Irreducible factors of Phi_k over Q(zeta_N), each monic of degree
// phi(lcm(N,k))/phi(N).  Constructed by Galois-orbit products of the
// primitive k-th roots of unity inside Q(zeta_lcm(N,k)), with coefficients
// rewritten into the zeta_N power basis.
inline std::vector<FPoly> cyclotomic_factors_over(unsigned long N, unsigned long k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned long, unsigned long>, std::vector<FPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({N, k});
        if (it != cache.end()) return it->second;
    }
    const unsigned long L = N / std::gcd(N, k) * k;
    const unsigned long phiN = euler_phi(N), phiL = euler_phi(L), phik = euler_phi(k);
    const unsigned long d = phiL / phiN;
    std::vector<FPoly> factors;
    if (d == phik) {
        factors.push_back(monic(to_fpoly(cyclotomic_poly(k))));
    } else {
        // image in (Z/k)* of the subgroup of (Z/L)* fixing Q(zeta_N)
        std::vector<unsigned long> stab;
        for (unsigned long u = 1; u <= L; ++u)
            if (std::gcd(u, L) == 1 && u % N == 1) stab.push_back(u % k);
        std::sort(stab.begin(), stab.end());
        stab.erase(std::unique(stab.begin(), stab.end()), stab.end());
        std::vector<bool> seen(k, false);
        // basis of Q(zeta_N) embedded into Q(zeta_L), for coefficient descent
        std::vector<std::vector<Rational>> basis_cols;
        for (unsigned long i = 0; i < phiN; ++i)
            basis_cols.push_back(FieldElement::zeta(N, static_cast<long>(i)).embed(L).coords());
        for (unsigned long m = 1; m < k; ++m) {
            if (seen[m] || std::gcd(m, k) != 1) continue;
            std::vector<unsigned long> orbit;
            for (unsigned long u : stab) {
                unsigned long e = static_cast<unsigned long>((static_cast<unsigned long long>(u) * m) % k);
                if (!seen[e]) { seen[e] = true; orbit.push_back(e); }
            }
            FPoly f = FPoly::constant(FieldElement(1));
            for (unsigned long e : orbit) {
                FieldElement root = FieldElement::zeta(L, static_cast<long>(L / k * e));
                f = f * FPoly(std::vector<FieldElement>{-root, FieldElement(1)});
            }
            if (static_cast<unsigned long>(f.degree()) != d)
                throw math_error("cyclotomic orbit degree mismatch");
            // descend coefficients from Q(zeta_L) to Q(zeta_N)
            std::vector<FieldElement> coeffs;
            for (int i = 0; i <= f.degree(); ++i) {
                auto sol = detail::solve_rational(basis_cols, f.coeff(static_cast<std::size_t>(i)).embed(L).coords());
                if (!sol) throw math_error("cyclotomic factor coefficient not in target field");
                coeffs.push_back(FieldElement::from_coords(N, std::move(*sol)));
            }
            factors.emplace_back(std::move(coeffs));
        }
        if (factors.size() != phik / d) throw math_error("cyclotomic orbit count mismatch");
    }
    std::sort(factors.begin(), factors.end(), [](const FPoly& a, const FPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = field_compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c < 0;
        }
        return false;
    });
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(N, k), std::move(factors));
    return it->second;
}

} // namespace alexmod
