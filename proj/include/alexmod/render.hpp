#pragma once

// Canonical plain-text rendering of field elements, polynomials, and modules.
// The conventions are fixed so reports are diffable:
//   * polynomial terms are printed highest degree first,
//   * factor lists are sorted by (degree, lexicographic coefficients),
//   * module summands appear in chain order (ascending exponents),
//   * the Laurent ring is written L (field coefficients), L_Z (integer
//     coefficients), and Lg for g commuting variables t1..tg.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coinvariants.hpp"
#include "factor.hpp"
#include "laurent.hpp"

namespace alexmod {

inline std::string render_rational(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

inline std::string render_integer(const Integer& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

namespace detail {

// One basis monomial r*z^k of a field element, as a signed term.
inline std::string basis_term(const Rational& r, std::size_t k, bool lead) {
    Rational a = r < 0 ? Rational(-r) : r;
    std::string sign = r < 0 ? (lead ? "-" : " - ") : (lead ? "" : " + ");
    if (k == 0) return sign + render_rational(a);
    std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
    if (a == 1) return sign + zp;
    return sign + render_rational(a) + "*" + zp;
}

inline std::size_t nonzero_coords(const FieldElement& x) {
    std::size_t c = 0;
    for (const Rational& r : x.coords())
        if (r != 0) ++c;
    return c;
}

} // namespace detail

// Entry-grammar form, basis powers ascending: "1/2 - z + 3*z^2".
inline std::string render_field_element(const FieldElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool lead = true;
    const auto& c = x.coords();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        out += detail::basis_term(c[k], k, lead);
        lead = false;
    }
    return out;
}

// Total order on field elements: by field order, then coordinates
// lexicographically after embedding into the common field.
inline bool field_less(const FieldElement& a, const FieldElement& b) {
    unsigned long m = std::lcm(a.field_order(), b.field_order());
    const auto av = a.embed(m).coords(), bv = b.embed(m).coords();
    for (std::size_t i = 0; i < av.size(); ++i) {
        if (av[i] != bv[i]) return av[i] < bv[i];
    }
    return false;
}

inline bool poly_less(const FPoly& p, const FPoly& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    for (int k = p.degree(); k >= 0; --k) {
        const FieldElement &a = p.coeff(static_cast<std::size_t>(k)),
                           &b = q.coeff(static_cast<std::size_t>(k));
        if (!(a == b)) return field_less(a, b);
    }
    return false;
}

namespace detail {

// A coefficient usable as "c*t^k" without parentheses: a single basis term.
template <typename Term>
std::string poly_term(const Term& coeff_text, bool negative, std::size_t k, bool lead,
                      const char* var) {
    std::string sign = negative ? (lead ? "-" : " - ") : (lead ? "" : " + ");
    if (k == 0) return sign + coeff_text;
    std::string tp = k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
    if (coeff_text == "1") return sign + tp;
    return sign + coeff_text + "*" + tp;
}

} // namespace detail

inline std::string render_poly(const FPoly& p, const char* var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (int k = p.degree(); k >= 0; --k) {
        const FieldElement& c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        bool neg = false;
        for (const Rational& r : c.coords()) {
            if (r != 0) {
                neg = r < 0;
                break;
            }
        }
        FieldElement a = neg ? -c : c;
        std::string body = render_field_element(a);
        if (detail::nonzero_coords(a) > 1) body = "(" + body + ")";
        out += detail::poly_term(body, neg, static_cast<std::size_t>(k), lead, var);
        lead = false;
    }
    return out;
}

inline std::string render_zpoly(const ZPoly& p, const char* var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Integer& c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        Integer a = c < 0 ? Integer(-c) : c;
        out += detail::poly_term(render_integer(a), c < 0, static_cast<std::size_t>(k),
                                 lead, var);
        lead = false;
    }
    return out;
}

// "(t - 1)^2*(t + 1)", factors sorted by (degree, lex coefficients).
// Returns the raw polynomial when the factorization is incomplete.
inline std::string render_factored(const FPoly& p, unsigned long cyclotomic_bound) {
    if (p.degree() < 1) return render_poly(p);
    FactorizationReport rep = factorize(p, cyclotomic_bound);
    if (!rep.complete) return render_poly(p);
    auto factors = rep.resolved;
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    std::string out;
    if (!(rep.unit == FieldElement(1))) {
        std::string u = render_field_element(rep.unit);
        out = detail::nonzero_coords(rep.unit) > 1 ? "(" + u + ")" : u;
    }
    for (const auto& [f, e] : factors) {
        if (!out.empty()) out += "*";
        out += "(" + render_poly(f) + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

// "L/(t - 1) (+) L/(t - 1)^2"; free rank first as "L^r".
inline std::string render_module(const LaurentModule& m,
                                 unsigned long cyclotomic_bound = default_cyclotomic_bound) {
    if (m.is_zero()) return "0";
    std::vector<std::string> parts;
    if (m.free_rank > 0) {
        parts.push_back(m.free_rank == 1 ? "L" : "L^" + std::to_string(m.free_rank));
    }
    for (const FPoly& d : m.invariant_factors) {
        FactorizationReport rep = factorize(d, cyclotomic_bound);
        if (rep.complete && rep.resolved.size() == 1) {
            const auto& [f, e] = rep.resolved.front();
            std::string s = "L/(" + render_poly(f) + ")";
            if (e > 1) s += "^" + std::to_string(e);
            parts.push_back(s);
        } else if (rep.complete) {
            parts.push_back("L/(" + render_factored(d, cyclotomic_bound) + ")");
        } else {
            parts.push_back("L/(" + render_poly(d) + ")");
        }
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " (+) ";
        out += parts[i];
    }
    return out;
}

inline std::string render_abelian_group(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::vector<std::string> parts;
    if (g.rank > 0) parts.push_back(g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank));
    for (const Integer& c : g.torsion) parts.push_back("Z/" + render_integer(c));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " (+) ";
        out += parts[i];
    }
    return out;
}

inline std::string render_matrix_z(const ZMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += render_integer(m.at(i, j));
        }
    }
    return out + "]";
}

inline std::string render_matrix_f(const FMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += render_field_element(m.at(i, j));
        }
    }
    return out + "]";
}

// Integer-coefficient Laurent module: cyclic presentations where the lattice
// admits one, otherwise the lattice rank with its action spelled out.
inline std::string render_z_module(const ZLaurentModule& m) {
    std::vector<std::string> parts;
    if (m.lattice_rank == 1) {
        Integer a = m.action.at(0, 0);
        ZPoly gen(std::vector<Integer>{-a, Integer(1)});
        parts.push_back("L_Z/(" + render_zpoly(gen) + ")");
    } else if (m.lattice_rank > 1) {
        parts.push_back("Z^" + std::to_string(m.lattice_rank) + " with t = " +
                        render_matrix_z(m.action));
    }
    for (std::size_t i = 0; i < m.torsion.torsion.size(); ++i) {
        std::string piece = "Z/" + render_integer(m.torsion.torsion[i]);
        if (m.torsion_action.rows() == m.torsion.torsion.size()) {
            piece += " with t = " + render_integer(m.torsion_action.at(i, i));
        }
        parts.push_back(piece);
    }
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " (+) ";
        out += parts[i];
    }
    return out;
}

// Multi-variable module of group coinvariants type.  Cyclic quotients are
// rendered as Lg/(t1 - a1, ..., tg - ag); anything bigger lists the actions.
inline std::string render_multi_module(const MultiActionModule& m) {
    const std::size_t g = m.mode == CoeffMode::field ? m.induced.size() : m.z_induced.size();
    std::string ring = "L" + std::to_string(g);
    if (m.mode == CoeffMode::integers) ring += "_Z";
    if (m.mode == CoeffMode::field) {
        if (m.quotient_dim == 0) return "0";
        if (m.quotient_dim == 1) {
            std::string out = ring + "/(";
            for (std::size_t i = 0; i < g; ++i) {
                if (i) out += ", ";
                FPoly gen(std::vector<FieldElement>{-m.induced[i].at(0, 0), FieldElement(1)});
                out += render_poly(gen, g == 1 ? "t" : ("t" + std::to_string(i + 1)).c_str());
            }
            return out + ")";
        }
        std::string out = "K^" + std::to_string(m.quotient_dim);
        for (std::size_t i = 0; i < g; ++i) {
            out += (i ? ", " : " with ") + ("t" + std::to_string(i + 1)) + " = " +
                   render_matrix_f(m.induced[i]);
        }
        return out;
    }
    const AbelianGroup& q = m.z_quotient;
    if (q.is_trivial()) return "0";
    if (q.rank == 1 && q.torsion.empty()) {
        std::string out = ring + "/(";
        for (std::size_t i = 0; i < g; ++i) {
            if (i) out += ", ";
            ZPoly gen(std::vector<Integer>{-m.z_induced[i].free_part.at(0, 0), Integer(1)});
            out += render_zpoly(gen, g == 1 ? "t" : ("t" + std::to_string(i + 1)).c_str());
        }
        return out + ")";
    }
    std::string out = render_abelian_group(q);
    for (std::size_t i = 0; i < g; ++i) {
        out += (i ? ", " : " with ") + ("t" + std::to_string(i + 1)) + " free part = " +
               render_matrix_z(m.z_induced[i].free_part);
    }
    return out;
}

} // namespace alexmod
