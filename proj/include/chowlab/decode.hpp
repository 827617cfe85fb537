#pragma once

#include "chowlab/cycle.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chowlab {

// A universally defined cycle presented as a black box: its value on any
// formal test variety of the right dimension. Values must live on X^k with a
// fixed coefficient alphabet and be componentwise consistent on disjoint
// unions (the decoding detects violations it can see and reports them as
// NotStandardError).
using EvaluationOracle = std::function<ChowElement(const FormalVariety&)>;

// Recover the unique StandardCycle whose evaluation matches the oracle.
// Decreasing induction on the number of blocks: the finest partitions are
// read off first, coarser residuals follow after subtracting the refinement
// contributions. Coefficients are solved from exact Kronecker pairings of
// Chern-number data; inconsistencies surface as NotStandardError.
StandardCycle decode(const EvaluationOracle& oracle, int d, int k,
                     const Alphabet& coeff_alphabet = Alphabet());

// The variety spec strings decode(., d, k) will query: sorted, deduplicated,
// independent of the oracle.
std::vector<std::string> decode_query_plan(int d, int k);

struct VanishingReport {
    bool vanishes = false;
    std::optional<FormalVariety> witness; // a test variety with nonzero value
};

// Evaluate Z on every disjoint union of at most k cobordism-basis varieties;
// vanishing on that suite is equivalent to Z = 0 (and the first failing
// variety is returned as a witness).
VanishingReport verify_vanishing(const StandardCycle& Z);

} // namespace chowlab
