#pragma once

#include "chowlab/set_partition.hpp"
#include "chowlab/variety.hpp"

namespace chowlab {

// Class of the 2-fold diagonal of `cell` inside cell x cell, written in the
// hyperplane variables of coordinates a and b of the given frame:
// prod_j sum_{p+q=n_j} h_{a,j}^p h_{b,j}^q  (Kunneth decomposition).
GradedPoly diagonal_pair_class(const Cell& cell, const TupleFrame& frame, int a, int b);

// Source of the diagonal map indexed by I: one coordinate per block, carrying
// the common factor of `target` on that block (0-based coordinate min I_s - 1).
// Throws StructuralError when target is not constant on some block or the
// ground-set sizes disagree.
ProductSpace diagonal_source(const SetPartition& I, const ProductSpace& target);

// Gysin pushforward Delta_{I*}: alpha lives on diagonal_source(I, target),
// the result on target. Components equating cells of different connected
// components receive nothing; on the rest the small diagonal factors as a
// product of 2-fold diagonal classes against the minimal coordinate of each
// block. Coefficient variables pass through untouched.
ChowElement diagonal_pushforward(const SetPartition& I, const ChowElement& alpha,
                                 const ProductSpace& target);

// Convenience form on powers: alpha on X^{l(I)} -> element on X^{k}.
ChowElement diagonal_pushforward(const FormalVariety& X, const SetPartition& I,
                                 const ChowElement& alpha);

// Pullback Delta_I^*: beta on target -> element on diagonal_source(I, target).
// Identifies the hyperplane variables across each block; components whose
// cell tuple is non-constant on some block restrict to zero.
ChowElement diagonal_pullback(const SetPartition& I, const ChowElement& beta);

} // namespace chowlab
