#pragma once

#include "chowlab/bundle.hpp"

namespace chowlab {

// Fiber-integration convention for the projectivization of a rank-k bundle:
// pushing the m-th power of the relative hyperplane class down gives
// s_{m-k+1}(E*), with s_0 = 1 and s_i = 0 for i < 0.
GradedPoly projective_bundle_pushforward(int m, const BundleClass& E);

// Pushforward of an arbitrary polynomial in the hyperplane variable with
// base-ring coefficients: decompose by h-power and apply the rule above.
// `h_index` is the hyperplane variable inside p's alphabet; the result no
// longer mentions it.
GradedPoly pushforward_h_polynomial(const GradedPoly& p, int h_index, const BundleClass& E);

// Total Chern class of a degree-m, dimension-(d-1) complete intersection of
// d-1 hypersurfaces in the projectivization of a rank-d bundle Q1:
// (1 - mh + ... + (-1)^d m^d h^d)^{d-1} * c(Q1* (x) O(1)). The bundle's ring
// must contain the hyperplane variable at `h_index`.
GradedPoly complete_intersection_chern(int d, long m, const BundleClass& Q1, int h_index);

// Pushforward of h^l along the complete-intersection projection:
// (-1)^l m^{d-1} s_l(Q1).
GradedPoly ci_pushforward(int l, long m, int d, const BundleClass& Q1);

} // namespace chowlab
