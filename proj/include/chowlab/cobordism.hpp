#pragma once

#include "chowlab/linalg.hpp"
#include "chowlab/variety.hpp"

#include <vector>

namespace chowlab {

enum class Exec { serial, parallel };

// The abstract Chern alphabet c1..cd (weights 1..d).
Alphabet chern_alphabet(int d);

// All monomials of exact weighted degree `degree` in chern_alphabet(d), in
// canonical order.
std::vector<Monomial> degree_monomials(int d, int degree);

// Total Chern class of one cell, as a polynomial in the frame variables of
// one coordinate: prod_j (1 + h_{coord,j})^{r_j + 1}, nilpotents reduced.
GradedPoly cell_chern_total(const Cell& cell, const TupleFrame& frame, int coord);

// Total Chern class of X as a ChowElement on X itself (k = 1).
ChowElement chern_class(const FormalVariety& X);

// Integral over X (k = 1 element with empty coefficient alphabet).
Rational integrate_rational(const ChowElement& e);

// chern number: the integral of the Chern monomial J (over chern_alphabet(d))
// evaluated in c(X). Additive across cells. J must have weighted degree
// exactly d; anything else is a caller bug and throws StructuralError.
Rational chern_number(const FormalVariety& X, const Monomial& J);

// One single-cell variety per integer partition of d, partitions in
// reverse-lexicographic order of their decreasing form: d=2 gives P2, P1xP1.
std::vector<FormalVariety> cobordism_basis(int d);

struct ChernNumberMatrix {
    std::vector<FormalVariety> rows;
    std::vector<Monomial> cols; // degree-d monomials, canonical order
    MatrixQ entries;
};

// Full p(d) x p(d) matrix of Chern numbers; full rank is certified exactly
// and its failure is an internal invariant violation.
ChernNumberMatrix chern_number_matrix(int d, Exec exec = Exec::parallel);

struct MixedPairingMatrix {
    std::vector<std::pair<FormalVariety, Monomial>> pairs; // (X_i, complementary L_i of degree d-m)
    std::vector<Monomial> cols;                            // degree-m monomials
    MatrixQ entries;                                       // entries[i][J] = deg(c_{L_i} c_J cap [X_i])
};

// Square full-rank pairing between degree-m monomials and greedy-selected
// (variety, complementary monomial) pairs. Throws DegeneracyError if no
// selection reaches full rank (the theory says one always exists).
MixedPairingMatrix mixed_pairing_matrix(int d, int m, Exec exec = Exec::parallel);

} // namespace chowlab
