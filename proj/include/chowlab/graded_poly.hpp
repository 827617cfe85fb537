#pragma once

#include "chowlab/alphabet.hpp"
#include "chowlab/monomial.hpp"
#include "chowlab/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chowlab {

struct Term {
    Monomial mono;
    long wdeg = 0; // cached weighted degree of mono
    Rational coeff;
};

// a strictly before b in the canonical term order (wdeg asc, then lex)
inline bool term_before(const Term& a, const Term& b) {
    if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
    return lex_before(a.mono, b.mono);
}

// Element of Q[alphabet] / (weighted degree > T). Terms are kept sorted in
// the canonical order with nonzero coefficients only, so equality is
// structural and serialization is byte-stable. Value type: every operation
// returns a fresh polynomial; binary operations require identical alphabet
// and truncation.
class GradedPoly {
public:
    GradedPoly(); // zero over the empty alphabet, T = 0

    static GradedPoly zero(const Alphabet& alphabet, int truncation);
    static GradedPoly constant(const Alphabet& alphabet, int truncation, const Rational& value);
    static GradedPoly variable(const Alphabet& alphabet, int truncation, int index);
    static GradedPoly variable(const Alphabet& alphabet, int truncation, const std::string& name);
    static GradedPoly monomial(const Alphabet& alphabet, int truncation, const Monomial& mono,
                               const Rational& coeff = 1);
    // Normalizes: merges duplicates, drops zeros and terms beyond the truncation.
    static GradedPoly from_terms(const Alphabet& alphabet, int truncation,
                                 std::vector<std::pair<Monomial, Rational>> terms);

    const Alphabet& alphabet() const { return alphabet_; }
    int truncation() const { return trunc_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& mono) const;
    Rational constant_term() const { return coefficient(Monomial()); }
    // T+1 for the zero polynomial
    long min_degree() const;
    // -1 for the zero polynomial
    long max_degree() const;
    GradedPoly piece(long degree) const;
    bool is_homogeneous(long degree) const;

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator*(const Rational& s) const;
    GradedPoly pow(int e) const;

    // Changing the truncation re-normalizes; lowering it drops terms.
    GradedPoly retruncate(int truncation) const;
    // Transport into another alphabet matching variables by name (the target
    // must contain every variable this polynomial mentions, at equal weight).
    GradedPoly embed(const Alphabet& target, int truncation) const;

    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    // Debug/display form, e.g. "1 + 3*h + 3*h^2".
    std::string str() const;

private:
    Alphabet alphabet_;
    int trunc_ = 0;
    std::vector<Term> terms_;

    void require_compatible(const GradedPoly& o) const;
};

inline GradedPoly operator*(const Rational& s, const GradedPoly& p) { return p * s; }

// Ring-hom substitution: variable i of p is replaced by images[i]; every
// variable actually appearing in p must have an image, and all images must
// live over (target, truncation). Images whose minimum degree is below the
// substituted variable's weight are allowed but then re-truncation may drop
// information — callers in this codebase only substitute weight-respecting
// images.
GradedPoly substitute(const GradedPoly& p, const Alphabet& target, int truncation,
                      const std::vector<std::optional<GradedPoly>>& images);

// Term-by-term monomial transport: f maps each source monomial to a target
// monomial (or nullopt to drop the term); colliding images accumulate.
GradedPoly map_monomials(const GradedPoly& p, const Alphabet& target, int truncation,
                         const std::function<std::optional<Monomial>(const Monomial&)>& f);

} // namespace chowlab
