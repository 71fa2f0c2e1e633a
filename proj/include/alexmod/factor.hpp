#pragma once

// Best-effort exact factorization over Q(zeta_N).  Resolved factors are
// certified irreducible over the working field; anything the strategy
// cannot certify is reported as unresolved and flips complete to false.
// The report never claims more than it can prove.

#include "alexmod/cyclotomic.hpp"

namespace alexmod {

inline constexpr unsigned long default_cyclotomic_bound = 120;

struct FactorizationReport {
    // input == unit * prod resolved^mult * prod unresolved^mult (asserted)
    std::vector<std::pair<FPoly, unsigned>> resolved;    // monic irreducible
    std::vector<std::pair<FPoly, unsigned>> unresolved;  // monic, squarefree
    FieldElement unit = FieldElement(1);
    bool complete = false;
};

namespace detail {

// Divisors of n including negatives; empty when n is too large to factor
// by trial division (callers then skip the rational-root shortcut).
inline std::vector<Integer> all_divisors(const Integer& n) {
    std::vector<Integer> out;
    Integer a = int_abs(n);
    if (a == 0 || a > Integer("1000000000000")) return out;
    std::vector<Integer> ds{Integer(1)};
    Integer rest = a;
    for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        std::size_t base = ds.size();
        Integer pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    if (rest > 1) {
        std::size_t base = ds.size();
        for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * rest);
    }
    for (const auto& d : ds) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// All rational roots of a nonzero field polynomial, found through the
// rational root theorem applied to a nonzero coordinate polynomial.
inline std::vector<Rational> rational_roots(const FPoly& q) {
    std::vector<Rational> roots;
    if (q.is_zero() || q.degree() == 0) return roots;
    if (q.coeff(0).is_zero()) roots.push_back(Rational(0));
    // pick a nonzero rational coordinate polynomial of q
    const unsigned long N = [&] {
        unsigned long n = 1;
        for (const auto& c : q.coeffs()) n = n / std::gcd(n, c.field_order()) * c.field_order();
        return n;
    }();
    const std::size_t phi = euler_phi(N);
    std::vector<std::vector<Rational>> coord(phi, std::vector<Rational>(q.coeffs().size(), Rational(0)));
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
        auto v = q.coeff(i).embed(N).coords();
        for (std::size_t j = 0; j < phi; ++j) coord[j][i] = v[j];
    }
    for (const auto& cp : coord) {
        bool nonzero = false;
        for (const auto& x : cp) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        // clear denominators to a primitive integer polynomial
        Integer den = 1;
        for (const auto& x : cp) den = den / int_gcd(den, denominator(x)) * denominator(x);
        std::vector<Integer> ip;
        for (const auto& x : cp) ip.push_back(numerator(x) * (den / denominator(x)));
        std::size_t low = 0;
        while (low < ip.size() && ip[low] == 0) ++low;
        std::size_t high = ip.size();
        while (high > low && ip[high - 1] == 0) --high;
        if (low >= high) continue;
        std::vector<Integer> nums = all_divisors(ip[low]);
        std::vector<Integer> dens = all_divisors(ip[high - 1]);
        if (nums.empty() || dens.empty()) continue;
        for (const auto& nu : nums)
            for (const auto& de : dens) {
                if (de <= 0) continue;
                Rational cand(nu, de);
                if (q.evaluate(FieldElement(cand)).is_zero())
                    roots.push_back(cand);
            }
        break;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Extract every root of the form (rational) * (root of unity in the field),
// dividing the corresponding linear factors out of s.
inline void extract_scaled_unity_roots(FPoly& s, unsigned long N,
                                       std::vector<FPoly>& out) {
    bool progress = true;
    const auto units = roots_of_unity_in(N);
    while (progress && s.degree() >= 1) {
        progress = false;
        for (const auto& mu : units) {
            FPoly scaled = s.scale_variable(mu);
            for (const Rational& r : rational_roots(scaled)) {
                FieldElement root = mu * FieldElement(r);
                FPoly lin(std::vector<FieldElement>{-root, FieldElement(1)});
                while (poly_divides(lin, s)) {
                    out.push_back(lin);
                    s = s / lin;
                    progress = true;
                }
            }
            if (s.degree() < 1) break;
        }
    }
}

} // namespace detail

// f | t^k - 1 for some k <= bound: every root of f is a root of unity of
// order within the bound.
inline bool is_cyclotomic_within(const FPoly& f, unsigned long bound) {
    if (f.degree() < 1) return false;
    for (unsigned long k = 1; k <= bound; ++k)
        if (powmod_x(k, f) == FPoly(1) % f) return true;
    return false;
}

inline FactorizationReport factorize(const FPoly& p,
                                     unsigned long cyclotomic_bound = default_cyclotomic_bound) {
    if (p.is_zero()) throw math_error("factorize(0)");
    FactorizationReport rep;
    rep.unit = p.leading();
    if (p.degree() == 0) {
        rep.complete = true;
        return rep;
    }
    unsigned long N = 1;
    for (const auto& c : p.coeffs()) N = N / std::gcd(N, c.field_order()) * c.field_order();

    auto record = [&](std::vector<std::pair<FPoly, unsigned>>& list, const FPoly& f, unsigned mult) {
        for (auto& [g, m] : list)
            if (g == f) {
                m += mult;
                return;
            }
        list.emplace_back(f, mult);
    };

    for (auto& [part, mult] : squarefree_decomposition(monic(p))) {
        FPoly s = part;
        // (a) roots of the form rational * root-of-unity
        std::vector<FPoly> linears;
        detail::extract_scaled_unity_roots(s, N, linears);
        for (const auto& lin : linears) record(rep.resolved, lin, mult);
        // (b) cyclotomic trial division by the irreducible factors of Phi_k
        // over the field; linear cyclotomic factors were already taken in (a)
        for (unsigned long k = 1; k <= cyclotomic_bound && s.degree() >= 2; ++k) {
            unsigned long L = N / std::gcd(N, k) * k;
            unsigned long d = euler_phi(L) / euler_phi(N);
            if (d < 2 || d > static_cast<unsigned long>(s.degree())) continue;
            FPoly g = poly_gcd(s, to_fpoly(cyclotomic_poly(k)));
            if (g.degree() < 1) continue;
            for (const FPoly& f : cyclotomic_factors_over(N, k)) {
                if (!poly_divides(f, g)) continue;
                record(rep.resolved, f, mult);
                s = s / f;
            }
        }
        // (c) low-degree closure
        if (s.degree() == 1) {
            record(rep.resolved, s, mult);
        } else if (s.degree() == 2) {
            FieldElement b = s.coeff(1), c = s.coeff(0);
            SqrtResult disc = sqrt_in_field(b * b - FieldElement(4) * c);
            switch (disc.status) {
                case SqrtStatus::found: {
                    FieldElement half = FieldElement(Rational(1, 2));
                    FieldElement r1 = (-b + disc.root) * half;
                    FieldElement r2 = (-b - disc.root) * half;
                    record(rep.resolved, FPoly(std::vector<FieldElement>{-r1, FieldElement(1)}), mult);
                    record(rep.resolved, FPoly(std::vector<FieldElement>{-r2, FieldElement(1)}), mult);
                    break;
                }
                case SqrtStatus::none:
                    record(rep.resolved, s, mult);
                    break;
                case SqrtStatus::unknown:
                    record(rep.unresolved, s, mult);
                    break;
            }
        } else if (s.degree() >= 3) {
            record(rep.unresolved, s, mult);
        }
    }
    rep.complete = rep.unresolved.empty();

    // the reported factors must reconstruct the input exactly
    FPoly check = FPoly::constant(rep.unit);
    for (const auto& [f, m] : rep.resolved) check = check * f.pow(m);
    for (const auto& [f, m] : rep.unresolved) check = check * f.pow(m);
    if (!(check == p)) throw math_error("factorization failed to reconstruct its input");
    return rep;
}

// Certified irreducibility over the working field (monic inputs).
inline bool is_certified_irreducible(const FPoly& p,
                                     unsigned long cyclotomic_bound = default_cyclotomic_bound) {
    if (p.degree() < 1) return false;
    FactorizationReport r = factorize(p, cyclotomic_bound);
    return r.complete && r.resolved.size() == 1 && r.resolved[0].second == 1;
}

} // namespace alexmod
