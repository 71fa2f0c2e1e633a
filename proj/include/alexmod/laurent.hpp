#pragma once

// Finitely generated modules over K[t,t^-1] presented by invariant factors,
// together with the operations that never need a factorization: construction
// from an automorphism, order polynomials, p-torsion sequences, dominance,
// the power transform, and cyclic-cover homology over Z.

#include "alexmod/factor.hpp"
#include "alexmod/saturate.hpp"
#include "alexmod/smith.hpp"

#include <map>
#include <optional>

namespace alexmod {

// Torsion-and-free presentation: d_1 | d_2 | ... | d_a, each monic, nonunit,
// with nonzero constant term (t acts invertibly, so t divides no factor).
struct LaurentModule {
    unsigned long field_order = 1;
    std::size_t free_rank = 0;
    std::vector<FPoly> invariant_factors;

    bool is_torsion() const { return free_rank == 0; }
    bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }

    friend bool operator==(const LaurentModule& a, const LaurentModule& b) {
        return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
    }
};

struct TorsionSequence {
    FPoly prime;
    std::vector<unsigned> exponents; // nonincreasing, positive
};

namespace detail {

inline void validate_module(const LaurentModule& m) {
    for (std::size_t i = 0; i < m.invariant_factors.size(); ++i) {
        const FPoly& d = m.invariant_factors[i];
        if (d.degree() < 1) throw math_error("unit invariant factor");
        if (!(d.leading() == FieldElement(1))) throw math_error("invariant factor not monic");
        if (d.coeff(0).is_zero()) throw math_error("t is not a valid torsion prime");
        if (i > 0 && !poly_divides(m.invariant_factors[i - 1], d))
            throw math_error("invariant factors do not form a chain");
    }
}

} // namespace detail

inline FMatrix companion_matrix(const FPoly& p) {
    if (p.degree() < 1 || !(p.leading() == FieldElement(1)))
        throw math_error("companion matrix needs a monic polynomial of positive degree");
    std::size_t n = static_cast<std::size_t>(p.degree());
    FMatrix c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c.at(i + 1, i) = FieldElement(1);
    for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
    return c;
}

// Invariant factors of tI - T for an invertible T; the module of the
// automorphism t |-> T acting on K^m.
inline LaurentModule module_from_automorphism(const FMatrix& T) {
    if (T.rows() != T.cols()) throw math_error("not an automorphism");
    if (T.rows() > 0 && determinant(T).is_zero()) throw math_error("not an automorphism");
    std::size_t m = T.rows();
    Matrix<FPoly> pres(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            FPoly e = FPoly::constant(-T.at(i, j));
            if (i == j) e = e + FPoly::monomial(FieldElement(1), 1);
            pres.at(i, j) = e;
        }
    auto snf = smith_normal_form_poly(pres);
    LaurentModule out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t jx = 0; jx < m; ++jx) {
            unsigned long fo = T.at(i, jx).field_order();
            out.field_order = out.field_order / std::gcd(out.field_order, fo) * fo;
        }
    FPoly prod(1);
    for (const FPoly& d : snf.diagonal) {
        if (d.degree() >= 1) out.invariant_factors.push_back(d);
        prod = prod * d;
    }
    if (!(prod == charpoly(T))) throw math_error("invariant factor product mismatch");
    detail::validate_module(out);
    return out;
}

// Assemble a module from prime-power data: for each (p, exponents) the
// summands Lambda/(p^e).  Intended for stating expected values.
inline LaurentModule module_from_prime_powers(
    const std::vector<std::pair<FPoly, std::vector<unsigned>>>& parts,
    std::size_t free_rank = 0) {
    std::size_t chain_len = 0;
    for (const auto& [p, exps] : parts) chain_len = std::max(chain_len, exps.size());
    LaurentModule out;
    out.free_rank = free_rank;
    std::vector<FPoly> chain(chain_len, FPoly(1));
    for (const auto& [p, exps] : parts) {
        if (p.degree() < 1 || !(p.leading() == FieldElement(1)))
            throw math_error("prime must be monic of positive degree");
        std::vector<unsigned> sorted = exps;
        std::sort(sorted.begin(), sorted.end(), std::greater<unsigned>());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] == 0) throw math_error("zero exponent");
            // largest exponent goes to the top of the chain
            chain[chain_len - 1 - i] = chain[chain_len - 1 - i] * p.pow(sorted[i]);
        }
        out.field_order = std::max(out.field_order, 1ul);
    }
    for (const FPoly& d : chain) {
        if (d.degree() < 1) throw math_error("chain has a unit entry: prime powers overlap badly");
        out.invariant_factors.push_back(d);
        for (const auto& c : d.coeffs())
            out.field_order = out.field_order / std::gcd(out.field_order, c.field_order()) * c.field_order();
    }
    detail::validate_module(out);
    return out;
}

// Product of the invariant factors (order of the torsion part; the free
// part, if any, is carried separately by free_rank).
inline FPoly alexander_polynomial(const LaurentModule& m) {
    FPoly out(1);
    for (const FPoly& d : m.invariant_factors) out = out * d;
    return out;
}

inline TorsionSequence p_torsion_sequence(const LaurentModule& m, const FPoly& p,
                                          unsigned long cyclotomic_bound = default_cyclotomic_bound) {
    if (p.degree() < 1 || !(p.leading() == FieldElement(1)))
        throw math_error("torsion prime must be monic of positive degree");
    if (p.coeff(0).is_zero()) throw math_error("t is not a valid torsion prime");
    FactorizationReport fr = factorize(p, cyclotomic_bound);
    if (!fr.complete) throw math_error("cannot certify irreducibility of the given prime");
    if (fr.resolved.size() != 1 || fr.resolved[0].second != 1)
        throw math_error("torsion prime is reducible");
    TorsionSequence out;
    out.prime = p;
    for (auto it = m.invariant_factors.rbegin(); it != m.invariant_factors.rend(); ++it) {
        unsigned e = 0;
        FPoly r = *it;
        while (r.degree() >= p.degree() && poly_divides(p, r)) {
            r = r / p;
            ++e;
        }
        if (e == 0) break; // chain condition: later factors have no smaller exponent
        out.exponents.push_back(e);
    }
    return out;
}

// True iff M dominates N: every p-torsion sequence of N is bounded by that
// of M.  Factorization-free via the aligned chains.
inline bool dominance_check(const LaurentModule& M, const LaurentModule& N) {
    if (!M.is_torsion() || !N.is_torsion())
        throw math_error("dominance is defined for torsion modules");
    const auto& d = M.invariant_factors;
    const auto& e = N.invariant_factors;
    if (e.size() > d.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!poly_divides(e[e.size() - 1 - i], d[d.size() - 1 - i])) return false;
    return true;
}

// Monic polynomial whose roots are the ell-th powers of the roots of P,
// with multiplicity; computed as a resultant, so no factorization of P is
// needed.  ell = 0 gives (t-1)^deg P; negative ell inverts the roots first.
inline FPoly power_transform(const FPoly& P, long ell) {
    if (P.degree() < 1 || !(P.leading() == FieldElement(1)))
        throw math_error("power transform needs a monic polynomial of positive degree");
    if (P.coeff(0).is_zero()) throw math_error("power transform requires nonzero constant term");
    if (ell == 0) {
        FPoly lin(std::vector<FieldElement>{FieldElement(-1), FieldElement(1)});
        return lin.pow(static_cast<unsigned>(P.degree()));
    }
    FPoly base = ell < 0 ? monic(reciprocal(P)) : P;
    unsigned long k = ell < 0 ? static_cast<unsigned long>(-ell) : static_cast<unsigned long>(ell);
    if (k == 1) return base;
    Poly<FPoly> A, B;
    {
        std::vector<FPoly> ac;
        for (long i = 0; i <= base.degree(); ++i) ac.push_back(FPoly::constant(base.coeff(i)));
        A = Poly<FPoly>(ac);
        std::vector<FPoly> bc(k + 1, FPoly());
        bc[0] = FPoly::monomial(FieldElement(1), 1);
        bc[k] = FPoly::constant(FieldElement(-1));
        B = Poly<FPoly>(bc);
    }
    FPoly res = sylvester_resultant(A, B);
    if (res.is_zero()) throw math_error("power transform degenerated");
    FPoly out = monic(res);
    if (out.degree() != base.degree()) throw math_error("power transform degree mismatch");
    if (out.coeff(0).is_zero()) throw math_error("power transform lost invertibility");
    return out;
}

// Alexander module over Z: a free lattice with an automorphism, plus an
// optional finite summand with its own action (entries read mod the chain).
struct ZLaurentModule {
    std::size_t lattice_rank = 0;
    ZMatrix action{0, 0};
    AbelianGroup torsion{};    // finite part (rank always 0 here)
    ZMatrix torsion_action{0, 0};

    bool torsion_free() const { return torsion.torsion.empty(); }
};

inline ZLaurentModule z_module_from_automorphism(const ZMatrix& T) {
    if (T.rows() != T.cols()) throw math_error("not an automorphism");
    if (T.rows() > 0) {
        Integer det = determinant_z(T);
        if (det != 1 && det != -1) throw math_error("action is not invertible over the integers");
    }
    ZLaurentModule out;
    out.lattice_rank = T.rows();
    out.action = T;
    return out;
}

// Homology of the degree-e cyclic cover from the Wang sequence: the module
// splits the extension because the kernel term is free.
inline AbelianGroup cover_homology(const ZLaurentModule& hk, const ZLaurentModule& hk_minus_1,
                                   unsigned long e) {
    if (e < 1) throw math_error("cover degree must be positive");
    if (!hk.torsion_free() || !hk_minus_1.torsion_free())
        throw math_error("cover homology needs free underlying lattices");
    ZMatrix a = hk.action.pow(e) - ZMatrix::identity(hk.lattice_rank);
    AbelianGroup coker = cokernel_Z(a);
    ZMatrix b = hk_minus_1.action.pow(e) - ZMatrix::identity(hk_minus_1.lattice_rank);
    std::size_t ker_rank = hk_minus_1.lattice_rank - rank_z(b);
    return direct_sum(coker, AbelianGroup::free(ker_rank));
}

// |Delta(1)| when finite; empty when Delta(1)=0 (the group is infinite).
inline std::optional<Integer> torsion_order_at_one(const ZPoly& delta) {
    Integer v = delta.evaluate(Integer(1));
    if (v == 0) return std::nullopt;
    return int_abs(v);
}

// Betti numbers of rank-one local systems: N(a,k) counts invariant factors
// of the degree-k module with root a; dim H_k = N(a,k)+N(a,k-1) for k <= n
// and dim H_{n+1} = N(a,n)+|chi|.
inline std::map<std::size_t, std::size_t> local_system_dims(
    const std::map<std::size_t, LaurentModule>& torsion_by_degree,
    const FieldElement& a, std::size_t n, long euler_mx) {
    if (a.is_zero()) throw math_error("local system parameter must be nonzero");
    for (const auto& [k, m] : torsion_by_degree)
        if (!m.is_torsion()) throw math_error("local system dimensions need torsion modules");
    auto count = [&](std::size_t k) -> std::size_t {
        auto it = torsion_by_degree.find(k);
        if (it == torsion_by_degree.end()) return 0;
        std::size_t c = 0;
        for (const FPoly& d : it->second.invariant_factors)
            if (d.evaluate(a).is_zero()) ++c;
        return c;
    };
    std::map<std::size_t, std::size_t> dims;
    for (std::size_t k = 0; k <= n; ++k)
        dims[k] = count(k) + (k == 0 ? 0 : count(k - 1));
    dims[n + 1] = count(n) + static_cast<std::size_t>(euler_mx < 0 ? -euler_mx : euler_mx);
    return dims;
}

// Factors of the order polynomial that are not visibly cyclotomic: on
// genuine geometric inputs every torsion prime divides some t^k - 1.
struct RootsOfUnityAudit {
    bool all_cyclotomic = true;
    std::vector<FPoly> offending;
    FactorizationReport report;
};

inline RootsOfUnityAudit roots_of_unity_audit(const LaurentModule& m, unsigned long bound,
                                              unsigned long cyclotomic_bound = default_cyclotomic_bound) {
    RootsOfUnityAudit out;
    FPoly delta = alexander_polynomial(m);
    if (delta.degree() < 1) return out;
    out.report = factorize(delta, cyclotomic_bound);
    for (const auto& [f, mult] : out.report.resolved)
        if (!is_cyclotomic_within(f, bound)) out.offending.push_back(f);
    for (const auto& [f, mult] : out.report.unresolved) out.offending.push_back(f);
    out.all_cyclotomic = out.offending.empty();
    return out;
}

} // namespace alexmod
