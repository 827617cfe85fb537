#pragma once

#include "chowlab/graded_poly.hpp"

#include <vector>

namespace chowlab {

// Solve G_j = Y_j + P_j(Y_1..Y_{j-1}) = 0 for the unknowns listed in
// `unknowns` (indices into the shared alphabet, in system order). Each P_j may
// mention any non-unknown variable but no unknown with position >= j, and the
// coefficient of Y_j in G_j must be exactly 1. Returns the unique root
// (r_1..r_q): unknown-free polynomials with every G_j vanishing at them.
std::vector<GradedPoly> triangular_root(const std::vector<GradedPoly>& system,
                                        const std::vector<int>& unknowns);

// Substitution y_j -> mu_j*y_j + Q_j(base vars, y_1..y_{j-1}) with invertible
// leading units. Tails must respect the grading (min degree >= weight(y_j)),
// which is what makes the substitution an automorphism of the truncated ring.
class TriangularSystem {
public:
    TriangularSystem(Alphabet alphabet, int truncation, std::vector<int> targets,
                     std::vector<Rational> mu, std::vector<GradedPoly> tails);

    const Alphabet& alphabet() const { return alphabet_; }
    int truncation() const { return trunc_; }
    const std::vector<int>& targets() const { return targets_; }
    const std::vector<Rational>& mu() const { return mu_; }
    const std::vector<GradedPoly>& tails() const { return tails_; }

    // Image of target j (0-based) as a polynomial: mu_j*y_j + Q_j.
    GradedPoly image(int j) const;

private:
    Alphabet alphabet_;
    int trunc_ = 0;
    std::vector<int> targets_;
    std::vector<Rational> mu_;
    std::vector<GradedPoly> tails_;
};

// Apply the substitution to p (base variables map to themselves).
GradedPoly apply(const TriangularSystem& sys, const GradedPoly& p);

// The inverse substitution; apply(sys, apply(invert(sys), p)) == p and in the
// other order too.
TriangularSystem invert(const TriangularSystem& sys);

} // namespace chowlab
