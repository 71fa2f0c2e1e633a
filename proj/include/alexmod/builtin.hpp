#pragma once

// Built-in representations: the two-loop family over Q(zeta_3) on a rank-4
// fiber, its Jordan reference operators, and the even-dimensional quadric
// over the integers.  These drive the bundled verification suite.

#include "alexmod/monodromy.hpp"

namespace alexmod {

namespace detail {

// beta and gamma are pinned by beta + gamma = -1 and beta*j + gamma*j^2 = 2;
// the solution is beta = j^2, gamma = j (unique, Vandermonde system).
inline std::pair<FieldElement, FieldElement> two_loop_lower_pair() {
    FieldElement j = FieldElement::zeta(3, 1);
    FieldElement beta = j * j, gamma = j;
    if (!((beta + gamma) == FieldElement(-1))) throw math_error("pair equation 1 failed");
    if (!((beta * j + gamma * j * j) == FieldElement(2))) throw math_error("pair equation 2 failed");
    return {beta, gamma};
}

} // namespace detail

// The family with two bifurcation values b1 and 0 on a rank-4 fiber over
// Q(zeta_3); free parameters as in the upper-triangular/lower-triangular
// shapes below.  The second generator (label "0") is the distinguished one.
inline MonodromyRep two_loop_family_raw(const FieldElement& a, const FieldElement& alpha,
                                        const FieldElement& b, const FieldElement& c) {
    FieldElement j = FieldElement::zeta(3, 1);
    auto [beta, gamma] = detail::two_loop_lower_pair();
    FMatrix m1 = FMatrix::identity(4);
    m1.at(0, 1) = a;
    m1.at(0, 2) = b;
    m1.at(0, 3) = c;
    FMatrix m2(4, 4);
    m2.at(0, 0) = FieldElement(1);
    m2.at(1, 1) = FieldElement(1);
    m2.at(2, 2) = j;
    m2.at(3, 3) = j * j;
    m2.at(1, 0) = alpha;
    m2.at(2, 0) = beta;
    m2.at(3, 0) = gamma;
    MonodromyRep rep;
    rep.g = 2;
    rep.fiber_rank = 4;
    rep.matrices = {m1, m2};
    rep.labels = {"b1", "0"};
    rep.distinguished = 1;
    rep.n = 3;
    rep.h_good = true;
    rep.b_n_F = 4;
    validate_rep(rep);
    return rep;
}

// case 1: alpha = 1, which forces a = 0 (the product constraint a*alpha = 0);
// case 2: alpha = 0 with a free.  b = c = 1 after the basis change.
inline MonodromyRep two_loop_family(const FieldElement& a, int case_no) {
    if (case_no == 1) {
        if (!a.is_zero()) throw math_error("case 1 requires a = 0");
        return two_loop_family_raw(a, FieldElement(1), FieldElement(1), FieldElement(1));
    }
    if (case_no == 2)
        return two_loop_family_raw(a, FieldElement(0), FieldElement(1), FieldElement(1));
    throw math_error("case must be 1 or 2");
}

// Jordan reference operators for the two-loop family.
inline FMatrix two_loop_jordan_m1() {
    FMatrix m = FMatrix::identity(4);
    m.at(0, 1) = FieldElement(1);
    return m;
}

inline FMatrix two_loop_jordan_m2() {
    FieldElement j = FieldElement::zeta(3, 1);
    FMatrix m(4, 4);
    m.at(0, 0) = FieldElement(1);
    m.at(1, 1) = FieldElement(1);
    m.at(2, 2) = j;
    m.at(3, 3) = j * j;
    return m;
}

inline FMatrix two_loop_jordan_infinity() {
    FMatrix m(4, 4);
    m.at(0, 0) = FieldElement(-1);
    m.at(1, 1) = FieldElement(-1);
    m.at(0, 1) = FieldElement(1);
    m.at(2, 2) = FieldElement(1);
    m.at(3, 3) = FieldElement(1);
    return m;
}

// Even-dimensional smooth quadric: one bifurcation value, monodromy -Id on
// a rank-1 fiber lattice.
inline MonodromyRep quadric_rep() {
    FMatrix m(1, 1);
    m.at(0, 0) = FieldElement(-1);
    MonodromyRep rep;
    rep.g = 1;
    rep.fiber_rank = 1;
    rep.matrices = {m};
    rep.labels = {"0"};
    rep.distinguished = 0;
    rep.n = 2;
    rep.h_good = true;
    rep.b_n_F = 1;
    validate_rep(rep);
    return rep;
}

} // namespace alexmod
