#pragma once

#include "chowlab/diagonal.hpp"
#include "chowlab/set_partition.hpp"
#include "chowlab/variety.hpp"

#include <map>
#include <vector>

namespace chowlab {

// Alphabet of a table entry for a partition with l blocks: Chern variables
// c{i}_{s} (weight i) grouped by block s = 1..l, followed by the coefficient
// alphabet (free graded pass-through variables).
Alphabet cycle_alphabet(int d, int l, const Alphabet& coeff);

// A cycle on k-th powers of d-dimensional varieties given by a table of
// polynomials indexed by set partitions of {1..k}: the cycle evaluates to
// sum_I Delta_{I*} P_I(blockwise Chern classes). Entries absent from the
// table are zero. Each P_I is bounded by weighted degree d in every block of
// Chern variables; coefficient variables are unconstrained.
class StandardCycle {
public:
    StandardCycle(int d, int k, Alphabet coeff_alphabet);

    int d() const { return d_; }
    int k() const { return k_; }
    const Alphabet& coeff_alphabet() const { return coeff_; }
    const std::map<SetPartition, GradedPoly>& table() const { return table_; }

    // Zero with the right alphabet when absent.
    GradedPoly entry(const SetPartition& I) const;
    // Validates the alphabet and the per-block degree bound, normalizes the
    // stored truncation to the content, drops zero entries.
    void set_entry(const SetPartition& I, const GradedPoly& P);

    // Largest total coefficient-variable degree appearing in the table.
    int coeff_degree_cap() const;

    StandardCycle operator+(const StandardCycle& o) const;
    StandardCycle operator-(const StandardCycle& o) const;

    // Tablewise equality of terms; truncation bookkeeping does not matter.
    bool operator==(const StandardCycle& o) const;
    bool operator!=(const StandardCycle& o) const { return !(*this == o); }

private:
    int d_, k_;
    Alphabet coeff_;
    std::map<SetPartition, GradedPoly> table_;
};

// The element sum_I Delta_{I*} P_I(blockwise Chern classes of X) on X^k.
// Truncation k*d + coeff_degree_cap, which keeps every cap-respecting
// monomial exactly.
ChowElement evaluate(const StandardCycle& Z, const FormalVariety& X);

// Component space of I with factor assignments X_1..X_{l(I)}: natural
// coordinates 1..k, coordinate a carrying X_{t} for a in the t-th block.
ProductSpace component_space(const SetPartition& I, const std::vector<FormalVariety>& X);

// Z_I(X_1,...,X_l): the closed-form restriction, summing the per-block
// diagonal pushforwards of P_J over all J refining I. Lives on
// component_space(I, X).
ChowElement restrict_to_component(const StandardCycle& Z, const SetPartition& I,
                                  const std::vector<FormalVariety>& X);

// Direct route to the same element: `value` lives on (X_1 ⊔ ... ⊔ X_l)^k;
// keep exactly the cell tuples whose a-th coordinate lies in the X_{t(a)}
// summand and re-key them onto component_space(I, X).
ChowElement extract_component(const ChowElement& value, const SetPartition& I,
                              const std::vector<FormalVariety>& X);

// Delta-restriction for constant families: all factors of T's space must be
// one variety X (grouping into powers given by I, so I.k() must match the
// number of coordinates); the result is the same data repackaged on X^k.
ChowElement delta_restrict(const ChowElement& T, const SetPartition& I);

} // namespace chowlab
