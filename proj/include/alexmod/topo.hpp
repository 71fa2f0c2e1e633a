#pragma once

// Numerical side-formulas: Milnor-number bounds for the middle Betti
// number, torsion-shape constraints for homogeneous arrangements, local
// characteristic-polynomial assembly, suspension bookkeeping, and the
// complement homology extracted from the variation map.

#include "alexmod/laurent.hpp"
#include "alexmod/smith.hpp"

#include <map>
#include <optional>
#include <string>

namespace alexmod {

struct MilnorData {
    Integer mu_X;  // sum of the Milnor numbers on the special fiber
    Integer mu0_X; // sum of the Milnor numbers of its singular points seen from the generic fiber
    Integer mu;    // total Milnor number
};

// dim H_n of the complement is squeezed between the two ends; the lower
// end is clamped at zero.
inline std::pair<Integer, Integer> milnor_bounds(const MilnorData& d) {
    if (d.mu_X < 0 || d.mu0_X < 0 || d.mu < 0) throw math_error("Milnor numbers are nonnegative");
    if (d.mu < d.mu_X) throw math_error("special fiber exceeds total Milnor number");
    Integer lower = d.mu_X + d.mu0_X - d.mu;
    if (lower < 0) lower = 0;
    return {lower, d.mu0_X};
}

struct TorsionShape {
    Integer p;                      // prime
    std::vector<unsigned> exponents; // k_1 >= k_2 >= ... >= 1
    Integer d;                      // degree of the homogeneous polynomial
};

enum class TorsionVerdict { consistent, inconsistent, no_constraint };

struct TorsionConstraintResult {
    TorsionVerdict verdict = TorsionVerdict::no_constraint;
    std::vector<std::string> reasons;
};

// Necessary conditions on p-torsion Z/p^{k_1} + ... + Z/p^{k_m} of the
// complement of a degree-d homogeneous hypersurface:
//   (i)  gcd(p-1, d) = 1          forces m >= 2 and k_1 = k_2;
//   (ii) gcd((p-1)p(p+1), d) = 1  forces m >= 3 and k_1 = k_2 = k_3.
inline TorsionConstraintResult torsion_constraint_check(const TorsionShape& shape) {
    if (!is_prime(shape.p)) throw math_error("p must be prime");
    if (shape.d < 1) throw math_error("degree must be positive");
    for (std::size_t i = 0; i < shape.exponents.size(); ++i) {
        if (shape.exponents[i] < 1) throw math_error("exponents must be positive");
        if (i > 0 && shape.exponents[i] > shape.exponents[i - 1])
            throw math_error("exponents must be nonincreasing");
    }
    const auto& k = shape.exponents;
    TorsionConstraintResult out;
    bool any_trigger = false, any_fail = false;
    if (int_gcd(shape.p - 1, shape.d) == 1) {
        any_trigger = true;
        bool ok = k.size() >= 2 && k[0] == k[1];
        if (!ok) any_fail = true;
        out.reasons.push_back(std::string("gcd(p-1,d)=1 forces at least two equal top exponents: ") +
                              (ok ? "holds" : "violated"));
    }
    if (int_gcd((shape.p - 1) * shape.p * (shape.p + 1), shape.d) == 1) {
        any_trigger = true;
        bool ok = k.size() >= 3 && k[0] == k[1] && k[1] == k[2];
        if (!ok) any_fail = true;
        out.reasons.push_back(std::string("gcd((p-1)p(p+1),d)=1 forces at least three equal top exponents: ") +
                              (ok ? "holds" : "violated"));
    }
    if (!any_trigger) {
        out.verdict = TorsionVerdict::no_constraint;
        out.reasons.push_back("both gcd conditions share a factor with d; no constraint applies");
    } else {
        out.verdict = any_fail ? TorsionVerdict::inconsistent : TorsionVerdict::consistent;
    }
    return out;
}

struct LocalCharpolyResult {
    FPoly poly;
    std::size_t trivial_exponent = 0; // the k in (t-1)^k
};

// (t-1)^k times the product of the local factors, k = b_n(F) - sum deg.
inline LocalCharpolyResult assemble_local_charpoly(const std::vector<FPoly>& local_factors,
                                                   std::size_t b_n_F) {
    long total = 0;
    FPoly prod(1);
    for (const FPoly& f : local_factors) {
        if (f.is_zero()) throw math_error("zero local factor");
        total += f.degree();
        prod = prod * f;
    }
    if (total > static_cast<long>(b_n_F)) throw math_error("local data exceeds fiber rank");
    LocalCharpolyResult out;
    out.trivial_exponent = static_cast<std::size_t>(static_cast<long>(b_n_F) - total);
    FPoly lin(std::vector<FieldElement>{FieldElement(-1), FieldElement(1)});
    out.poly = lin.pow(static_cast<unsigned>(out.trivial_exponent)) * prod;
    return out;
}

// |Res(t^d - 1, prod Delta_i)|: a bound on the order of the middle homology
// of the degree-d cyclic cover.  Zero resultant means the hypothesis
// "no factor vanishes at a d-th root of unity" fails.
inline Integer suspension_order_bound(const std::vector<ZPoly>& local_factors, unsigned long d) {
    if (d < 1) throw math_error("cover degree must be positive");
    ZPoly prod(1);
    for (const ZPoly& f : local_factors) {
        if (f.is_zero()) throw math_error("zero local factor");
        prod = prod * f;
    }
    std::vector<Integer> tc(d + 1, Integer(0));
    tc[0] = -1;
    tc[d] = 1;
    ZPoly tdm1(tc);
    Integer r = sylvester_resultant(tdm1, prod);
    if (r == 0) throw math_error("a local factor vanishes at a d-th root of unity");
    return int_abs(r);
}

// Homology of the complement of one h-good fiber from the variation map
// V: Z^{b_n(F)} -> vanishing cycles.
struct VariationHomology {
    std::map<std::size_t, AbelianGroup> groups; // reduced degrees 1..n+1 (H_0 = Z implicit)
    std::vector<std::string> warnings;
};

inline VariationHomology variation_complement_homology(const ZMatrix& v, std::size_t n,
                                                       std::size_t b_n_F,
                                                       std::optional<std::size_t> r_components = std::nullopt) {
    if (n < 1) throw math_error("fiber dimension must be at least 1");
    if (v.cols() != b_n_F) throw math_error("variation map must have one column per fiber class");
    std::size_t rk = rank_z(v);
    if (rk > v.rows() || rk > v.cols()) throw math_error("impossible rank");
    VariationHomology out;
    AbelianGroup coker = cokernel_Z(v);
    std::size_t upper_rank = b_n_F - rk;
    if (n > 1) {
        out.groups[1] = AbelianGroup::free(1);
        out.groups[n] = coker;
        out.groups[n + 1] = AbelianGroup::free(upper_rank);
        if (r_components && *r_components != 1)
            out.warnings.push_back("irreducible-component count is only used in the curve case");
    } else {
        AbelianGroup h1 = direct_sum(coker, AbelianGroup::free(1));
        out.groups[1] = h1;
        out.groups[2] = AbelianGroup::free(upper_rank);
        if (!h1.torsion.empty())
            out.warnings.push_back("curve case demands torsion-free H_1; the variation input is inconsistent");
        if (r_components && h1.rank != *r_components)
            out.warnings.push_back("H_1 rank differs from the declared number of irreducible components");
    }
    return out;
}

// Third term of 0 -> H_q(M_X) -> H_q(M_{X,d}) -> H_{q+1}(M_Y) -> 0 when the
// first map is the given injection.
inline AbelianGroup suspension_sequence_solve(const ZMatrix& inclusion) {
    std::size_t rk = rank_z(inclusion);
    if (rk < inclusion.cols()) throw math_error("sequence not exact on the left");
    return cokernel_Z(inclusion);
}

} // namespace alexmod
