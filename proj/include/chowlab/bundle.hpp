#pragma once

#include "chowlab/graded_poly.hpp"

namespace chowlab {

// Formal bundle datum: a rank and a total class with constant term 1. The
// grading of the polynomial is the cohomological degree, so the degree-i
// piece of `total` is c_i.
class BundleClass {
public:
    BundleClass(int rank, GradedPoly total);

    int rank() const { return rank_; }
    const GradedPoly& total() const { return total_; }
    GradedPoly c(int i) const { return total_.piece(i); }

    bool operator==(const BundleClass& o) const { return rank_ == o.rank_ && total_ == o.total_; }

private:
    int rank_;
    GradedPoly total_;
};

// Generalized binomial coefficient: top may be any integer (falling-factorial
// definition), bottom must be >= 0.
Rational binomial(long top, long bottom);
Rational binomial(const mpz_class& top, long bottom);

// Multiplicative inverse of a total class (constant term must be 1),
// truncated: the geometric series sum of (1 - p)^m.
GradedPoly inverse_unit(const GradedPoly& p);

// Total Segre class s(E) = c(E)^{-1}.
GradedPoly segre(const BundleClass& E);

// c_i(E*) = (-1)^i c_i(E).
BundleClass dual(const BundleClass& E);

// c(E (x) L) for a line class with c_1(L) = t; t must be homogeneous of
// weighted degree 1 (or zero). Uses the rank-aware rule
// c_j = sum_i binom(rank - i, j - i) c_i(E) t^{j-i}, which extends to total
// classes with pieces beyond the rank via the generalized binomial.
BundleClass twist(const BundleClass& E, const GradedPoly& t);

// c(B)/c(A): the total class of a quotient with known sub, by Whitney.
GradedPoly whitney_quotient(const GradedPoly& total_B, const GradedPoly& total_A);

// Chern character, one polynomial with ch_0 = rank and ch_m = p_m/m! via the
// Newton identities on the graded pieces.
GradedPoly chern_character(const BundleClass& E);

// Inverse of chern_character; the constant term of ch must equal `rank`.
BundleClass class_from_character(const GradedPoly& ch, int rank);

// c(E (x) F) through multiplicativity of the Chern character.
BundleClass tensor(const BundleClass& E, const BundleClass& F);

} // namespace chowlab
