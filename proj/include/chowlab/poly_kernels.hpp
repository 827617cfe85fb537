#pragma once

#include "chowlab/graded_poly.hpp"

#include <vector>

namespace chowlab::kernels {

// Truncated sparse product kernels. Inputs and outputs are canonical term
// vectors (sorted, nonzero coefficients, degree <= T). The OpenMP variant
// splits the left factor across threads with per-thread accumulators and a
// serial merge, so it is bit-identical to the serial reference.

std::vector<Term> multiply_serial(const std::vector<Term>& a, const std::vector<Term>& b, long truncation);

std::vector<Term> multiply_openmp(const std::vector<Term>& a, const std::vector<Term>& b, long truncation);

// Serial below a size threshold, OpenMP above it (and serial when built
// without OpenMP).
std::vector<Term> multiply_auto(const std::vector<Term>& a, const std::vector<Term>& b, long truncation);

bool openmp_enabled();
int max_threads();

} // namespace chowlab::kernels
