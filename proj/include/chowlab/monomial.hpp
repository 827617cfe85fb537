#pragma once

#include "chowlab/alphabet.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chowlab {

// Sparse exponent vector: (variable index, exponent) pairs sorted by index,
// exponents strictly positive (zero exponents are not stored). The empty
// monomial is 1. Monomials carry no alphabet; the context supplies one for
// weights and names.
class Monomial {
public:
    Monomial() = default; // 1

    static Monomial variable(int index, int exponent = 1);
    static Monomial from_factors(std::vector<std::pair<int, int>> factors); // validates + sorts

    int exponent(int index) const;
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int max_index() const { return factors_.empty() ? -1 : factors_.back().first; }

    long weighted_degree(const Alphabet& alphabet) const;

    Monomial times(const Monomial& other) const;

    // "1", "c1", "c1^2*c2" — names from the alphabet, factors in index order.
    std::string str(const Alphabet& alphabet) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::pair<int, int>> factors_;
};

// Pure lexicographic part of the canonical order (degrees equal or ignored):
// a precedes b when a has the larger exponent at the first differing variable,
// scanning variables in alphabet order. So c1^2 precedes c1*c2 precedes c2^2.
bool lex_before(const Monomial& a, const Monomial& b);

// Canonical graded-lex order used for term storage, serialization and matrix
// column order: ascending weighted degree, then lex_before.
bool canonical_before(const Monomial& a, const Monomial& b, const Alphabet& alphabet);

} // namespace chowlab
