#pragma once

// Coinvariant calculus for a free-group representation on the fiber
// homology: coinvariants under the whole group, under the commutator
// subgroup (the global module with its commuting Z^g-action), and under
// the winding kernel (the local module over one variable), plus the
// homology of the total space and the divisibility verdicts.
//
// Key identities used throughout: w h w^-1 - 1 = w (h - 1) w^-1 on the
// module (so the normal closure of the basic commutators is reached by
// saturating their images under the generators), and
// (h1 h2 - 1) v = (h1 - 1) h2 v + (h2 - 1) v (so images of generators of a
// subgroup span the images of the whole subgroup).

#include "alexmod/builtin.hpp"
#include "alexmod/monodromy.hpp"
#include "alexmod/saturate.hpp"

namespace alexmod {

enum class CoeffMode { field, integers };

struct CoinvariantsResult {
    CoeffMode mode = CoeffMode::field;
    std::size_t dimension = 0;            // field dim, or rank in integer mode
    std::vector<std::size_t> witness;     // standard-basis indices spanning the quotient (field mode)
    AbelianGroup group;                   // integer mode
};

namespace detail {

inline std::vector<ZMatrix> integral_matrices(const MonodromyRep& rep) {
    std::vector<ZMatrix> out;
    for (const FMatrix& m : rep.matrices) {
        auto z = to_zmatrix(m);
        if (!z) throw math_error("integer mode needs integral matrix entries");
        out.push_back(*z);
    }
    return out;
}

// Columns of (op - I) appended to `rows` as row vectors.
inline void append_image_rows(std::vector<std::vector<FieldElement>>& rows, const FMatrix& op) {
    std::size_t m = op.rows();
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<FieldElement> col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = op.at(i, j) - (i == j ? FieldElement(1) : FieldElement(0));
        rows.push_back(std::move(col));
    }
}

inline void append_image_rows(std::vector<std::vector<Integer>>& rows, const ZMatrix& op) {
    std::size_t m = op.rows();
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Integer> col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = op.at(i, j) - (i == j ? 1 : 0);
        rows.push_back(std::move(col));
    }
}

// Change of basis adapted to an invariant row subspace W: P = [W^T | C]
// where C holds the standard vectors at the non-pivot coordinates of W.
struct QuotientData {
    std::vector<std::size_t> complement;
    FMatrix p{0, 0}, pinv{0, 0};
    std::size_t sub_dim = 0, quot_dim = 0;
};

inline QuotientData make_quotient(const FMatrix& w_rows, std::size_t m) {
    QuotientData qd;
    qd.sub_dim = w_rows.rows();
    RrefResult rr = rref(w_rows);
    std::vector<bool> pivot(m, false);
    for (std::size_t c : rr.pivot_cols) pivot[c] = true;
    for (std::size_t k = 0; k < m; ++k)
        if (!pivot[k]) qd.complement.push_back(k);
    qd.quot_dim = qd.complement.size();
    if (qd.sub_dim + qd.quot_dim != m) throw math_error("quotient bookkeeping failed");
    FMatrix p(m, m);
    for (std::size_t j = 0; j < qd.sub_dim; ++j)
        for (std::size_t i = 0; i < m; ++i) p.at(i, j) = w_rows.at(j, i);
    for (std::size_t j = 0; j < qd.quot_dim; ++j) p.at(qd.complement[j], qd.sub_dim + j) = FieldElement(1);
    qd.p = p;
    qd.pinv = inverse(p);
    return qd;
}

// Lower-right block of P^-1 op P; the lower-left block must vanish
// (W-invariance of op), which is asserted.
inline FMatrix induced_on_quotient(const QuotientData& qd, const FMatrix& op) {
    FMatrix a = qd.pinv * op * qd.p;
    FMatrix out(qd.quot_dim, qd.quot_dim);
    for (std::size_t i = 0; i < qd.quot_dim; ++i)
        for (std::size_t j = 0; j < qd.sub_dim; ++j)
            if (!a.at(qd.sub_dim + i, j).is_zero())
                throw math_error("operator does not preserve the relation subspace");
    for (std::size_t i = 0; i < qd.quot_dim; ++i)
        for (std::size_t j = 0; j < qd.quot_dim; ++j) out.at(i, j) = a.at(qd.sub_dim + i, qd.sub_dim + j);
    return out;
}

// Smith coordinates for Z^m / (row lattice R): y = U x, relation d_k on
// coordinate k.  Killed coordinates (d_k = 1) are dropped from both lists.
struct ZQuotientData {
    ZMatrix u{0, 0};
    std::vector<Integer> d;                   // length m; 0 means free
    std::vector<std::size_t> free_idx, tors_idx;
    std::vector<Integer> tors_chain;          // aligned with tors_idx
};

inline ZQuotientData make_z_quotient(const ZMatrix& rel_rows, std::size_t m) {
    ZMatrix pres(m, rel_rows.rows());
    for (std::size_t i = 0; i < rel_rows.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) pres.at(j, i) = rel_rows.at(i, j);
    auto snf = smith_normal_form_Z(pres);
    ZQuotientData out;
    out.u = snf.u;
    out.d.assign(m, Integer(0));
    for (std::size_t k = 0; k < snf.diagonal.size() && k < m; ++k) out.d[k] = int_abs(snf.diagonal[k]);
    for (std::size_t k = 0; k < m; ++k) {
        if (out.d[k] == 0) out.free_idx.push_back(k);
        else if (out.d[k] >= 2) {
            out.tors_idx.push_back(k);
            out.tors_chain.push_back(out.d[k]);
        }
    }
    return out;
}

// Induced action in Smith coordinates, split into the free part (exact) and
// the torsion part (entries reduced mod the chain).
struct ZInducedAction {
    ZMatrix free_part{0, 0};
    ZMatrix torsion_part{0, 0};
};

inline ZInducedAction induced_on_z_quotient(const ZQuotientData& qd, const ZMatrix& op) {
    ZMatrix b = qd.u * op * unimodular_inverse(qd.u);
    std::size_t r = qd.free_idx.size(), s = qd.tors_idx.size();
    ZInducedAction out;
    out.free_part = ZMatrix(r, r);
    out.torsion_part = ZMatrix(s, s);
    // non-free columns may not leak into free coordinates
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t k = 0; k < b.cols(); ++k) {
            if (qd.d[k] == 0) continue;
            if (b.at(qd.free_idx[l], k) != 0)
                throw math_error("action does not descend to the quotient");
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out.free_part.at(i, j) = b.at(qd.free_idx[i], qd.free_idx[j]);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            Integer v = b.at(qd.tors_idx[i], qd.tors_idx[j]) % qd.tors_chain[i];
            if (v < 0) v += qd.tors_chain[i];
            out.torsion_part.at(i, j) = v;
        }
    return out;
}

} // namespace detail

// H_0(G, fiber): the quotient by the span (field) or subgroup (integers)
// generated by all (m_i - 1) v.
inline CoinvariantsResult group_coinvariants(const MonodromyRep& rep, CoeffMode mode) {
    validate_rep(rep);
    std::size_t m = rep.fiber_rank;
    CoinvariantsResult out;
    out.mode = mode;
    if (mode == CoeffMode::field) {
        std::vector<std::vector<FieldElement>> rows;
        for (const FMatrix& mi : rep.matrices) detail::append_image_rows(rows, mi);
        FMatrix span = detail::rows_to_matrix(m, rows);
        RrefResult rr = rref(span);
        std::vector<bool> pivot(m, false);
        for (std::size_t c : rr.pivot_cols) pivot[c] = true;
        for (std::size_t k = 0; k < m; ++k)
            if (!pivot[k]) out.witness.push_back(k);
        out.dimension = out.witness.size();
        out.group = AbelianGroup::free(out.dimension);
    } else {
        auto zs = detail::integral_matrices(rep);
        ZMatrix stack(m, rep.g * m);
        for (std::size_t gi = 0; gi < rep.g; ++gi)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    stack.at(i, gi * m + j) = zs[gi].at(i, j) - (i == j ? 1 : 0);
        out.group = cokernel_Z(stack);
        out.dimension = out.group.rank;
    }
    return out;
}

// The coinvariants under the commutator subgroup with the induced
// commuting actions of the generator classes.
struct MultiActionModule {
    CoeffMode mode = CoeffMode::field;
    std::size_t ambient = 0;
    std::size_t quotient_dim = 0;              // field dim, or free rank in integer mode
    // field mode
    FMatrix relation_basis{0, 0};              // canonical RREF rows of W
    detail::QuotientData qd;
    std::vector<FMatrix> induced;              // g commuting invertible operators
    // integer mode
    ZMatrix z_relation_basis{0, 0};            // canonical Hermite rows of W
    detail::ZQuotientData zqd;
    AbelianGroup z_quotient;
    std::vector<detail::ZInducedAction> z_induced;
};

inline MultiActionModule global_alexander_module(const MonodromyRep& rep, CoeffMode mode) {
    validate_rep(rep);
    std::size_t m = rep.fiber_rank;
    MultiActionModule out;
    out.mode = mode;
    out.ambient = m;
    if (mode == CoeffMode::field) {
        std::vector<std::vector<FieldElement>> seed;
        for (std::size_t i = 0; i < rep.g; ++i)
            for (std::size_t j = i + 1; j < rep.g; ++j)
                detail::append_image_rows(seed, evaluate_word(rep, FreeWord::commutator(i + 1, j + 1)));
        out.relation_basis = saturate_subspace(m, seed, rep.matrices);
        out.qd = detail::make_quotient(out.relation_basis, m);
        out.quotient_dim = out.qd.quot_dim;
        for (const FMatrix& mi : rep.matrices) {
            FMatrix ind = detail::induced_on_quotient(out.qd, mi);
            if (out.quotient_dim > 0 && determinant(ind).is_zero())
                throw math_error("induced action is singular");
            out.induced.push_back(ind);
        }
        for (std::size_t i = 0; i < rep.g; ++i)
            for (std::size_t j = i + 1; j < rep.g; ++j)
                if (!(out.induced[i] * out.induced[j] == out.induced[j] * out.induced[i]))
                    throw math_error("induced actions fail to commute");
    } else {
        auto zs = detail::integral_matrices(rep);
        std::vector<std::vector<Integer>> seed;
        for (std::size_t i = 0; i < rep.g; ++i)
            for (std::size_t j = i + 1; j < rep.g; ++j) {
                auto cij = to_zmatrix(evaluate_word(rep, FreeWord::commutator(i + 1, j + 1)));
                if (!cij) throw math_error("integer mode needs integral matrix entries");
                detail::append_image_rows(seed, *cij);
            }
        out.z_relation_basis = saturate_lattice(m, seed, zs);
        out.zqd = detail::make_z_quotient(out.z_relation_basis, m);
        out.z_quotient = AbelianGroup{out.zqd.free_idx.size(), out.zqd.tors_chain};
        out.quotient_dim = out.zqd.free_idx.size();
        for (const ZMatrix& mi : zs) out.z_induced.push_back(detail::induced_on_z_quotient(out.zqd, mi));
        for (std::size_t i = 0; i < rep.g; ++i)
            for (std::size_t j = i + 1; j < rep.g; ++j)
                if (!(out.z_induced[i].free_part * out.z_induced[j].free_part ==
                      out.z_induced[j].free_part * out.z_induced[i].free_part))
                    throw math_error("induced actions fail to commute");
    }
    return out;
}

struct LocalModuleResult {
    CoeffMode mode = CoeffMode::field;
    LaurentModule module;          // field mode packaging
    FMatrix induced_t{0, 0};       // field mode: class of the distinguished loop
    ZLaurentModule z_module;       // integer mode packaging
};

// Quotient of the global module by the images of (t_i - 1) over the
// non-distinguished generators; the distinguished class becomes the single
// Laurent variable.
inline LocalModuleResult local_alexander_module(const MonodromyRep& rep, CoeffMode mode) {
    validate_rep(rep);
    MultiActionModule global = global_alexander_module(rep, mode);
    LocalModuleResult out;
    out.mode = mode;
    if (mode == CoeffMode::field) {
        std::size_t q = global.quotient_dim;
        std::vector<std::vector<FieldElement>> rows;
        for (std::size_t i = 0; i < rep.g; ++i)
            if (i != rep.distinguished) detail::append_image_rows(rows, global.induced[i]);
        FMatrix span = detail::rref_rows(detail::rows_to_matrix(q, rows));
        detail::QuotientData qd2 = detail::make_quotient(span, q);
        out.induced_t = detail::induced_on_quotient(qd2, global.induced[rep.distinguished]);
        out.module = module_from_automorphism(out.induced_t);
    } else {
        auto zs = detail::integral_matrices(rep);
        std::size_t m = rep.fiber_rank;
        std::vector<std::vector<Integer>> rows;
        for (std::size_t i = 0; i < global.z_relation_basis.rows(); ++i) {
            std::vector<Integer> r(m);
            for (std::size_t j = 0; j < m; ++j) r[j] = global.z_relation_basis.at(i, j);
            rows.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < rep.g; ++i)
            if (i != rep.distinguished) detail::append_image_rows(rows, zs[i]);
        ZMatrix rel(rows.size(), m);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m; ++j) rel.at(i, j) = rows[i][j];
        detail::ZQuotientData zq = detail::make_z_quotient(hnf_rows(rel), m);
        detail::ZInducedAction act = detail::induced_on_z_quotient(zq, zs[rep.distinguished]);
        out.z_module = z_module_from_automorphism(act.free_part);
        out.z_module.torsion = AbelianGroup{0, zq.tors_chain};
        out.z_module.torsion_action = act.torsion_part;
    }
    return out;
}

// Collapse the global module by all (t_i - 1): must reproduce the full
// group coinvariants (asserted by tests as a cross-check).
inline CoinvariantsResult collapse_global_module(const MonodromyRep& rep, const MultiActionModule& global) {
    CoinvariantsResult out;
    out.mode = global.mode;
    if (global.mode == CoeffMode::field) {
        std::size_t q = global.quotient_dim;
        std::vector<std::vector<FieldElement>> rows;
        for (const FMatrix& t : global.induced) detail::append_image_rows(rows, t);
        FMatrix span = detail::rows_to_matrix(q, rows);
        out.dimension = q - rank(span);
        out.group = AbelianGroup::free(out.dimension);
    } else {
        auto zs = detail::integral_matrices(rep);
        std::size_t m = rep.fiber_rank;
        std::vector<std::vector<Integer>> rows;
        for (std::size_t i = 0; i < global.z_relation_basis.rows(); ++i) {
            std::vector<Integer> r(m);
            for (std::size_t j = 0; j < m; ++j) r[j] = global.z_relation_basis.at(i, j);
            rows.push_back(std::move(r));
        }
        for (const ZMatrix& mi : zs) detail::append_image_rows(rows, mi);
        ZMatrix rel(rows.size(), m);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m; ++j) rel.at(i, j) = rows[i][j];
        out.group = quotient_by_row_lattice(m, rel);
        out.dimension = out.group.rank;
    }
    return out;
}

// H_1, H_n, H_{n+1} of the total space: Z^g, the coinvariants, and the
// kernel of the stacked map (v_i) -> sum (m_i - 1) v_i.  For n = 1 only the
// two ends of the extension 0 -> coinvariants -> H_1 -> Z^g -> 0 are known.
struct TotalSpaceHomology {
    std::size_t h1_rank = 0;
    CoinvariantsResult hn;
    std::size_t h_np1_rank = 0;
    bool extension_ends_only = false;
};

inline TotalSpaceHomology total_space_homology(const MonodromyRep& rep, CoeffMode mode) {
    validate_rep(rep);
    TotalSpaceHomology out;
    out.h1_rank = rep.g;
    out.hn = group_coinvariants(rep, mode);
    std::size_t m = rep.fiber_rank;
    if (mode == CoeffMode::field) {
        FMatrix stack(m, rep.g * m);
        for (std::size_t gi = 0; gi < rep.g; ++gi)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    stack.at(i, gi * m + j) =
                        rep.matrices[gi].at(i, j) - (i == j ? FieldElement(1) : FieldElement(0));
        out.h_np1_rank = rep.g * m - rank(stack);
    } else {
        auto zs = detail::integral_matrices(rep);
        ZMatrix stack(m, rep.g * m);
        for (std::size_t gi = 0; gi < rep.g; ++gi)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    stack.at(i, gi * m + j) = zs[gi].at(i, j) - (i == j ? 1 : 0);
        out.h_np1_rank = rep.g * m - rank_z(stack);
    }
    out.extension_ends_only = (rep.n == 1);
    return out;
}

// The canonical surjections fiber module -> global -> local, with their
// dimensions and the dominance verdicts along the distinguished class.
struct ChainReport {
    std::size_t dim_fiber = 0, dim_global = 0, dim_local = 0;
    LaurentModule fiber_module, global_module, local_module;
    bool dominance_fiber_global = false, dominance_global_local = false;
    bool h_good = false;
};

inline ChainReport factorization_chain_report(const MonodromyRep& rep) {
    validate_rep(rep);
    ChainReport out;
    out.h_good = rep.h_good;
    MultiActionModule global = global_alexander_module(rep, CoeffMode::field);
    LocalModuleResult local = local_alexander_module(rep, CoeffMode::field);
    out.dim_fiber = rep.fiber_rank;
    out.dim_global = global.quotient_dim;
    out.dim_local = static_cast<std::size_t>(alexander_polynomial(local.module).degree());
    out.fiber_module = module_from_automorphism(rep.matrices[rep.distinguished]);
    out.global_module = module_from_automorphism(global.induced[rep.distinguished]);
    out.local_module = local.module;
    out.dominance_fiber_global = dominance_check(out.fiber_module, out.global_module);
    out.dominance_global_local = dominance_check(out.global_module, out.local_module);
    return out;
}

// Does the transformed local order polynomial divide the characteristic
// polynomial of the word's operator?  True on genuine geometric inputs.
struct DivisibilityResult {
    bool divides = false;
    long ell = 0;
    FPoly transformed;
    FPoly word_charpoly;
    FPoly certificate; // quotient when the division holds
};

inline DivisibilityResult divisibility_check(const MonodromyRep& rep, const FreeWord& w) {
    validate_rep(rep);
    LocalModuleResult local = local_alexander_module(rep, CoeffMode::field);
    DivisibilityResult out;
    out.ell = winding(rep, w);
    FPoly delta = alexander_polynomial(local.module);
    out.transformed = delta.degree() < 1 ? FPoly(1) : power_transform(delta, out.ell);
    out.word_charpoly = charpoly(evaluate_word(rep, w));
    out.divides = poly_divides(out.transformed, out.word_charpoly);
    if (out.divides) out.certificate = out.word_charpoly / out.transformed;
    return out;
}

} // namespace alexmod
