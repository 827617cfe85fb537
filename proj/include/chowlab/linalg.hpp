#pragma once

#include "chowlab/graded_poly.hpp"
#include "chowlab/rational.hpp"

#include <vector>

namespace chowlab {

// Dense rational matrix, row-major. Small sizes only (ranks bounded by
// partition counts), so no sparsity games.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const MatrixQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Exact rank via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank_exact(const MatrixQ& m);

// Exact determinant (square input), same elimination.
Rational determinant_exact(const MatrixQ& m);

// Solve A x = b for square nonsingular A, where the right-hand entries are
// polynomials (constants are the empty-alphabet case). Elimination happens on
// integers; the polynomial column tracks the same row operations, so the
// result is exact. Throws DegeneracyError when A is singular.
std::vector<GradedPoly> solve_exact(const MatrixQ& A, std::vector<GradedPoly> b);

MatrixQ kronecker(const MatrixQ& a, const MatrixQ& b);

// Greedily keep rows that grow the rank (in the order given) until `target`
// independent rows are found; returns their indices. Throws DegeneracyError
// when the candidates cannot reach the target rank.
std::vector<int> greedy_row_basis(const MatrixQ& candidates, int target);

} // namespace chowlab
