#pragma once

// Arbitrary-precision integer/rational layer plus small number-theoretic
// helpers shared by the whole library.  Everything here is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alexmod {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a precondition of a mathematical operation is violated or a
// computation cannot be carried out (singular input, wrong mode, ...).
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text parsers; `position` is a 0-based column into the input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (column " + std::to_string(position + 1) + ")"),
          position(position) {}
    std::size_t position;
};

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

inline Integer int_abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Floor square root; exact test for perfect squares.
inline Integer int_sqrt(const Integer& a) {
    if (a < 0) throw math_error("int_sqrt of negative integer");
    return boost::multiprecision::sqrt(a);
}

inline bool is_perfect_square(const Integer& a) {
    if (a < 0) return false;
    Integer r = int_sqrt(a);
    return r * r == a;
}

// Exact rational square root, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = numerator(q), d = denominator(q);
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    return Rational(int_sqrt(n), int_sqrt(d));
}

// Deterministic Miller-Rabin; the base set is sufficient for all inputs
// below 3.3e24, far beyond any prime this library is asked about.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Factor a positive machine-size integer by trial division.
inline std::vector<std::pair<unsigned long, unsigned>> factor_small(unsigned long n) {
    if (n == 0) throw math_error("factor_small(0)");
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw math_error("euler_phi(0)");
    unsigned long result = n;
    for (auto [p, e] : factor_small(n)) result = result / p * (p - 1);
    return result;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Squarefree part s and cofactor m with q = s * m^2, s squarefree (sign on s).
inline std::pair<Integer, Integer> squarefree_decompose(const Integer& q) {
    if (q == 0) return {Integer(0), Integer(1)};
    Integer s = q < 0 ? Integer(-1) : Integer(1);
    Integer m = 1, rest = int_abs(q);
    for (Integer p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) m *= p;
        if (e % 2) s *= p;
    }
    s *= rest;
    return {s, m};
}

} // namespace alexmod
