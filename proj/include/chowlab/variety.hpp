#pragma once

#include "chowlab/graded_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace chowlab {

// One connected component: a product of projective spaces P^{r_1} x ... x P^{r_s}.
struct Cell {
    std::vector<int> dims;

    int dim() const;
    std::string name() const; // "P2", "P1xP1"

    bool operator==(const Cell& o) const { return dims == o.dims; }
    bool operator<(const Cell& o) const { return dims < o.dims; }
};

// Formal test variety: a disjoint union of cells, all of one pure dimension.
class FormalVariety {
public:
    FormalVariety(int d, std::vector<Cell> cells);

    static FormalVariety projective_space(int n);
    static FormalVariety product(std::vector<int> dims); // one cell

    int d() const { return d_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::string spec_string() const; // "P2 + P1xP1"

    FormalVariety disjoint_union(const FormalVariety& o) const;

    bool operator==(const FormalVariety& o) const { return d_ == o.d_ && cells_ == o.cells_; }
    bool operator!=(const FormalVariety& o) const { return !(*this == o); }

private:
    int d_;
    std::vector<Cell> cells_;
};

// An ordered product of formal varieties of one pure dimension d; coordinate
// a carries factors()[a]. Powers X^k are the all-equal case.
class ProductSpace {
public:
    explicit ProductSpace(std::vector<FormalVariety> factors);
    static ProductSpace power(const FormalVariety& X, int k);

    int k() const { return static_cast<int>(factors_.size()); }
    int d() const { return factors_.front().d(); }
    const std::vector<FormalVariety>& factors() const { return factors_; }

    bool operator==(const ProductSpace& o) const { return factors_ == o.factors_; }
    bool operator!=(const ProductSpace& o) const { return !(*this == o); }

private:
    std::vector<FormalVariety> factors_;
};

// Working ring of one component (cell tuple) of a product space: hyperplane
// variables "h{coord}_{slot}" (weight 1, nilpotent above the slot dimension)
// followed by the pass-through coefficient alphabet.
struct TupleFrame {
    Alphabet alphabet;
    std::vector<int> caps;                 // per variable; <0 means unbounded
    std::vector<std::vector<int>> h_index; // [coord][slot] -> variable index
    int truncation = 0;

    GradedPoly h(int coord, int slot) const {
        return GradedPoly::variable(alphabet, truncation, h_index[static_cast<std::size_t>(coord)]
                                                                 [static_cast<std::size_t>(slot)]);
    }
};

TupleFrame tuple_frame(const ProductSpace& space, const std::vector<int>& tuple,
                       const Alphabet& coeff_alphabet, int truncation);

// Drop monomials in which some hyperplane exponent exceeds its cap.
GradedPoly reduce_nilpotents(const GradedPoly& p, const TupleFrame& frame);

// Cycle class on a product space: one polynomial per cell tuple (absent
// tuples are zero). All component polynomials share the element's truncation;
// extra pass-through variables (the coefficient alphabet) ride along
// untouched by every geometric operation.
class ChowElement {
public:
    ChowElement(ProductSpace space, Alphabet coeff_alphabet, int truncation);

    static ChowElement zero(const ProductSpace& space, const Alphabet& coeff_alphabet, int truncation);

    const ProductSpace& space() const { return space_; }
    const Alphabet& coeff_alphabet() const { return coeff_; }
    int truncation() const { return trunc_; }
    const std::map<std::vector<int>, GradedPoly>& components() const { return comps_; }

    TupleFrame frame(const std::vector<int>& tuple) const;
    // Zero (with the right frame) when absent.
    GradedPoly component(const std::vector<int>& tuple) const;
    // Validates the polynomial against the tuple's frame, reduces nilpotents,
    // and drops zero components.
    void set_component(const std::vector<int>& tuple, GradedPoly p);
    void add_to_component(const std::vector<int>& tuple, const GradedPoly& p);

    bool is_zero() const { return comps_.empty(); }

    ChowElement operator+(const ChowElement& o) const;
    ChowElement operator-(const ChowElement& o) const;
    ChowElement operator-() const;
    ChowElement operator*(const ChowElement& o) const; // componentwise (cup product)
    ChowElement operator*(const Rational& s) const;

    bool operator==(const ChowElement& o) const;
    bool operator!=(const ChowElement& o) const { return !(*this == o); }

    // Degree over the product: coefficient of the top hyperplane monomial,
    // summed over components; a polynomial in the coefficient alphabet.
    GradedPoly integrate() const;

private:
    ProductSpace space_;
    Alphabet coeff_;
    int trunc_;
    std::map<std::vector<int>, GradedPoly> comps_;

    void require_compatible(const ChowElement& o) const;
};

inline ChowElement operator*(const Rational& s, const ChowElement& e) { return e * s; }

// All cell tuples of a product space, lexicographically.
std::vector<std::vector<int>> cell_tuples(const ProductSpace& space);

} // namespace chowlab
