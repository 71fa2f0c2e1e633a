#pragma once

// Representations of a free group on the homology of the generic fiber:
// words, evaluation, the winding homomorphism onto Z picked out by the
// distinguished bifurcation value, and similarity testing of operators.

#include "alexmod/laurent.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace alexmod {

// Word in the free group: letters are (generator index >= 1, exponent +-1),
// kept fully reduced.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<std::pair<std::size_t, int>> letters) : letters_(std::move(letters)) {
        for (auto& [i, e] : letters_) {
            if (i < 1) throw math_error("generator indices start at 1");
            if (e != 1 && e != -1) throw math_error("letter exponent must be +-1");
        }
        reduce();
    }

    const std::vector<std::pair<std::size_t, int>>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const {
        std::vector<std::pair<std::size_t, int>> rev;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            rev.emplace_back(it->first, -it->second);
        return FreeWord(std::move(rev));
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        std::vector<std::pair<std::size_t, int>> cat = a.letters_;
        cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
        return FreeWord(std::move(cat));
    }

    static FreeWord generator(std::size_t i) { return FreeWord({{i, 1}}); }

    static FreeWord commutator(std::size_t i, std::size_t j) {
        FreeWord gi = generator(i), gj = generator(j);
        return gi * gj * gi.inverse() * gj.inverse();
    }

    // Tokens "g<k>" or "g<k>^<exp>" separated by whitespace, e.g. "g1 g2^-1".
    static FreeWord parse(const std::string& text) {
        std::vector<std::pair<std::size_t, int>> letters;
        std::size_t pos = 0;
        auto fail = [&](const std::string& what, std::size_t at) { throw parse_error(what, at); };
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                continue;
            }
            if (text[pos] != 'g') fail("expected generator token 'g<k>'", pos);
            std::size_t start = ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("expected generator number", pos);
            std::size_t index = std::stoul(text.substr(start, pos - start));
            if (index == 0) fail("generator indices start at 1", start);
            long exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t es = pos;
                if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == es || (pos == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
                    fail("expected integer exponent", es);
                exp = std::stol(text.substr(es, pos - es));
            }
            int sign = exp < 0 ? -1 : 1;
            for (long r = 0; r < (exp < 0 ? -exp : exp); ++r) letters.emplace_back(index, sign);
        }
        return FreeWord(std::move(letters));
    }

private:
    std::vector<std::pair<std::size_t, int>> letters_;

    void reduce() {
        std::vector<std::pair<std::size_t, int>> out;
        for (const auto& l : letters_) {
            if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
                out.pop_back();
            else
                out.push_back(l);
        }
        letters_ = std::move(out);
    }
};

struct MonodromyRep {
    std::size_t g = 0;          // number of generators
    std::size_t fiber_rank = 0; // m
    std::vector<FMatrix> matrices;
    std::vector<std::string> labels;   // bifurcation values, display strings
    std::size_t distinguished = 0;     // 0-based index of the value b
    std::size_t n = 2;                 // fiber dimension
    bool h_good = false;
    std::optional<std::size_t> b_n_F;
    std::optional<long> euler_mx;
};

inline void validate_rep(const MonodromyRep& rep) {
    if (rep.g == 0) throw math_error("representation needs at least one generator");
    if (rep.matrices.size() != rep.g || rep.labels.size() != rep.g)
        throw math_error("generator count mismatch");
    if (rep.distinguished >= rep.g) throw math_error("distinguished index out of range");
    for (std::size_t i = 0; i < rep.g; ++i) {
        const FMatrix& m = rep.matrices[i];
        if (m.rows() != rep.fiber_rank || m.cols() != rep.fiber_rank)
            throw math_error("matrix size mismatch");
        if (rep.fiber_rank > 0 && determinant(m).is_zero())
            throw math_error("monodromy matrix is singular");
    }
    for (std::size_t i = 0; i < rep.g; ++i)
        for (std::size_t k = i + 1; k < rep.g; ++k)
            if (rep.labels[i] == rep.labels[k]) throw math_error("duplicate bifurcation labels");
}

inline FMatrix evaluate_word(const MonodromyRep& rep, const FreeWord& w) {
    FMatrix out = FMatrix::identity(rep.fiber_rank);
    for (const auto& [i, e] : w.letters()) {
        if (i > rep.g) throw math_error("word uses a generator outside the representation");
        out = out * (e == 1 ? rep.matrices[i - 1] : inverse(rep.matrices[i - 1]));
    }
    return out;
}

// Image of w under the projection G -> Z counting turns around the
// distinguished bifurcation value.
inline long winding(const MonodromyRep& rep, const FreeWord& w) {
    long total = 0;
    for (const auto& [i, e] : w.letters())
        if (i - 1 == rep.distinguished) total += e;
    return total;
}

// Similarity over the field: equal invariant-factor chains of tI - A and
// tI - B.
inline bool conjugacy_check(const FMatrix& a, const FMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw math_error("size mismatch");
    return module_from_automorphism(a) == module_from_automorphism(b);
}

inline FMatrix monodromy_at_infinity(const MonodromyRep& rep) {
    FMatrix out = FMatrix::identity(rep.fiber_rank);
    for (const FMatrix& m : rep.matrices) out = out * m;
    return out;
}

// Thom-Sebastiani lift with an identity factor of rank k: every operator
// becomes m (x) I_k.  The fiber dimension moves by the caller-supplied
// shift.
inline MonodromyRep tensor_identity_lift(const MonodromyRep& rep, std::size_t k, long n_shift = 0) {
    if (k < 1) throw math_error("identity factor rank must be positive");
    MonodromyRep out = rep;
    out.fiber_rank = rep.fiber_rank * k;
    out.matrices.clear();
    for (const FMatrix& m : rep.matrices) out.matrices.push_back(kronecker(m, FMatrix::identity(k)));
    long n2 = static_cast<long>(rep.n) + n_shift;
    if (n2 < 1) throw math_error("fiber dimension shift out of range");
    out.n = static_cast<std::size_t>(n2);
    if (out.b_n_F) out.b_n_F = *out.b_n_F * k;
    validate_rep(out);
    return out;
}

} // namespace alexmod
