#pragma once

// Text entry grammar for exact field elements and polynomials.
//
//   expression := term (('+' | '-') term)*
//   term       := factor ('*' factor)*
//   factor     := ('+' | '-')* atom
//   atom       := rational | 'z' ['^' int] | 't' ['^' int] | '(' expression ')'
//   rational   := digits ['/' digits]
//
// 'z' denotes the chosen primitive root of unity zeta_N, 't' the polynomial
// variable (only accepted by parse_poly, and only with nonnegative powers).
// Whitespace is ignored everywhere between tokens.  Errors are reported as
// parse_error with the offending 0-based column.

#include <string>
#include <string_view>

#include "cyclotomic.hpp"
#include "poly.hpp"

namespace alexmod {

namespace detail {

class EntryParser {
public:
    EntryParser(std::string_view text, unsigned long order, bool allow_t)
        : s_(text), n_(order), allow_t_(allow_t) {
        if (n_ == 0) throw math_error("cyclotomic order must be positive");
    }

    FPoly run() {
        skip_ws();
        if (eof()) throw parse_error("empty input", pos_);
        FPoly v = expression();
        skip_ws();
        if (!eof()) throw parse_error(unexpected(), pos_);
        return v;
    }

private:
    std::string_view s_;
    unsigned long n_;
    bool allow_t_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            ++pos_;
    }
    std::string unexpected() const {
        return std::string("unexpected character '") + s_[pos_] + "'";
    }

    FPoly expression() {
        FPoly v = term();
        for (;;) {
            skip_ws();
            if (eof()) return v;
            if (peek() == '+') {
                ++pos_;
                v = v + term();
            } else if (peek() == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    FPoly term() {
        FPoly v = factor();
        for (;;) {
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    FPoly factor() {
        skip_ws();
        bool neg = false;
        while (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        if (eof()) throw parse_error("expected a value", pos_);
        FPoly v = atom();
        return neg ? FPoly() - v : v;
    }

    FPoly atom() {
        skip_ws();
        if (eof()) throw parse_error("expected a value", pos_);
        const char c = peek();
        if (c >= '0' && c <= '9') return FPoly::constant(FieldElement(rational()));
        if (c == 'z') {
            ++pos_;
            long k = exponent_or(1);
            return FPoly::constant(FieldElement::zeta(n_, k));
        }
        if (c == 't') {
            const std::size_t at = pos_;
            if (!allow_t_) throw parse_error("'t' is not allowed in a scalar entry", at);
            ++pos_;
            long k = exponent_or(1);
            if (k < 0) throw parse_error("negative power of 't'", at);
            return FPoly::monomial(FieldElement(1), static_cast<std::size_t>(k));
        }
        if (c == '(') {
            ++pos_;
            FPoly v = expression();
            skip_ws();
            if (eof() || peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return v;
        }
        throw parse_error(unexpected(), pos_);
    }

    // Optional '^' followed by a (signed) integer; `dflt` when absent.
    long exponent_or(long dflt) {
        skip_ws();
        if (eof() || peek() != '^') return dflt;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
            skip_ws();
        }
        const std::size_t at = pos_;
        Integer v = digits("expected an exponent");
        if (v > 1000000000) throw parse_error("exponent too large", at);
        long k = static_cast<long>(v);
        return neg ? -k : k;
    }

    Rational rational() {
        Integer num = digits("expected a number");
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            Integer den = digits("expected a denominator");
            if (den == 0) throw parse_error("zero denominator", at);
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer digits(const char* expectation) {
        skip_ws();
        if (eof() || peek() < '0' || peek() > '9') throw parse_error(expectation, pos_);
        Integer v = 0;
        std::size_t count = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            if (++count > 4096) throw parse_error("number literal too long", pos_);
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return v;
    }
};

} // namespace detail

// A scalar in Q(zeta_order): rationals, z, +, -, *.
inline FieldElement parse_entry(std::string_view text, unsigned long cyclotomic_order) {
    FPoly p = detail::EntryParser(text, cyclotomic_order, false).run();
    return p.coeff(0);
}

// A polynomial in t over Q(zeta_order).
inline FPoly parse_poly(std::string_view text, unsigned long cyclotomic_order) {
    return detail::EntryParser(text, cyclotomic_order, true).run();
}

} // namespace alexmod
