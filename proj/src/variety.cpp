#include "chowlab/variety.hpp"

#include "chowlab/errors.hpp"

#include <numeric>

namespace chowlab {

int Cell::dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::string Cell::name() const {
    std::string out;
    for (int r : dims) {
        if (!out.empty()) out += 'x';
        out += 'P' + std::to_string(r);
    }
    return out;
}

FormalVariety::FormalVariety(int d, std::vector<Cell> cells) : d_(d), cells_(std::move(cells)) {
    if (d_ < 0) throw StructuralError("FormalVariety: negative dimension");
    if (cells_.empty()) throw StructuralError("FormalVariety: at least one cell required");
    for (const auto& c : cells_) {
        if (c.dims.empty()) throw StructuralError("FormalVariety: empty cell");
        for (int r : c.dims)
            if (r < 1) throw StructuralError("FormalVariety: projective factors need dimension >= 1");
        if (c.dim() != d_)
            throw StructuralError("FormalVariety: cell " + c.name() + " is not of pure dimension " +
                                  std::to_string(d_));
    }
}

FormalVariety FormalVariety::projective_space(int n) { return FormalVariety(n, {Cell{{n}}}); }

FormalVariety FormalVariety::product(std::vector<int> dims) {
    Cell c{std::move(dims)};
    return FormalVariety(c.dim(), {c});
}

std::string FormalVariety::spec_string() const {
    std::string out;
    for (const auto& c : cells_) {
        if (!out.empty()) out += " + ";
        out += c.name();
    }
    return out;
}

FormalVariety FormalVariety::disjoint_union(const FormalVariety& o) const {
    if (o.d_ != d_) throw StructuralError("disjoint_union: dimensions disagree");
    auto cells = cells_;
    cells.insert(cells.end(), o.cells_.begin(), o.cells_.end());
    return FormalVariety(d_, std::move(cells));
}

ProductSpace::ProductSpace(std::vector<FormalVariety> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw StructuralError("ProductSpace: at least one factor required");
    for (const auto& f : factors_)
        if (f.d() != factors_.front().d())
            throw StructuralError("ProductSpace: factors must share one pure dimension");
}

ProductSpace ProductSpace::power(const FormalVariety& X, int k) {
    if (k < 1) throw StructuralError("ProductSpace: power must be >= 1");
    return ProductSpace(std::vector<FormalVariety>(static_cast<std::size_t>(k), X));
}

TupleFrame tuple_frame(const ProductSpace& space, const std::vector<int>& tuple,
                       const Alphabet& coeff_alphabet, int truncation) {
    if (static_cast<int>(tuple.size()) != space.k())
        throw StructuralError("tuple_frame: tuple length disagrees with the power");
    TupleFrame frame;
    frame.truncation = truncation;
    std::vector<std::pair<std::string, int>> vars;
    std::vector<int> caps;
    frame.h_index.resize(tuple.size());
    for (std::size_t a = 0; a < tuple.size(); ++a) {
        const auto& cells = space.factors()[a].cells();
        if (tuple[a] < 0 || tuple[a] >= static_cast<int>(cells.size()))
            throw StructuralError("tuple_frame: cell index out of range");
        const Cell& cell = cells[static_cast<std::size_t>(tuple[a])];
        for (std::size_t j = 0; j < cell.dims.size(); ++j) {
            frame.h_index[a].push_back(static_cast<int>(vars.size()));
            vars.emplace_back("h" + std::to_string(a + 1) + "_" + std::to_string(j + 1), 1);
            caps.push_back(cell.dims[j]);
        }
    }
    for (const auto& [name, weight] : coeff_alphabet.vars()) {
        vars.emplace_back(name, weight);
        caps.push_back(-1);
    }
    frame.alphabet = Alphabet(std::move(vars));
    frame.caps = std::move(caps);
    return frame;
}

GradedPoly reduce_nilpotents(const GradedPoly& p, const TupleFrame& frame) {
    return map_monomials(p, frame.alphabet, frame.truncation,
                         [&](const Monomial& m) -> std::optional<Monomial> {
                             for (const auto& [idx, exp] : m.factors()) {
                                 int cap = frame.caps[static_cast<std::size_t>(idx)];
                                 if (cap >= 0 && exp > cap) return std::nullopt;
                             }
                             return m;
                         });
}

ChowElement::ChowElement(ProductSpace space, Alphabet coeff_alphabet, int truncation)
    : space_(std::move(space)), coeff_(std::move(coeff_alphabet)), trunc_(truncation) {
    if (trunc_ < 0) throw StructuralError("ChowElement: negative truncation");
}

ChowElement ChowElement::zero(const ProductSpace& space, const Alphabet& coeff_alphabet, int truncation) {
    return ChowElement(space, coeff_alphabet, truncation);
}

TupleFrame ChowElement::frame(const std::vector<int>& tuple) const {
    return tuple_frame(space_, tuple, coeff_, trunc_);
}

GradedPoly ChowElement::component(const std::vector<int>& tuple) const {
    auto it = comps_.find(tuple);
    if (it != comps_.end()) return it->second;
    return GradedPoly::zero(frame(tuple).alphabet, trunc_);
}

void ChowElement::set_component(const std::vector<int>& tuple, GradedPoly p) {
    TupleFrame f = frame(tuple);
    if (p.alphabet() != f.alphabet || p.truncation() != trunc_)
        throw StructuralError("ChowElement: component polynomial has the wrong frame");
    p = reduce_nilpotents(p, f);
    if (p.is_zero())
        comps_.erase(tuple);
    else
        comps_[tuple] = std::move(p);
}

void ChowElement::add_to_component(const std::vector<int>& tuple, const GradedPoly& p) {
    set_component(tuple, component(tuple) + p);
}

void ChowElement::require_compatible(const ChowElement& o) const {
    if (space_ != o.space_) throw StructuralError("ChowElement: spaces disagree");
    if (coeff_ != o.coeff_) throw StructuralError("ChowElement: coefficient alphabets disagree");
    if (trunc_ != o.trunc_) throw StructuralError("ChowElement: truncations disagree");
}

ChowElement ChowElement::operator+(const ChowElement& o) const {
    require_compatible(o);
    ChowElement out = *this;
    for (const auto& [tuple, p] : o.comps_) out.add_to_component(tuple, p);
    return out;
}

ChowElement ChowElement::operator-() const {
    ChowElement out = *this;
    for (auto& [tuple, p] : out.comps_) p = -p;
    return out;
}

ChowElement ChowElement::operator-(const ChowElement& o) const { return *this + (-o); }

ChowElement ChowElement::operator*(const ChowElement& o) const {
    require_compatible(o);
    ChowElement out = zero(space_, coeff_, trunc_);
    for (const auto& [tuple, p] : comps_) {
        auto it = o.comps_.find(tuple);
        if (it == o.comps_.end()) continue;
        out.set_component(tuple, p * it->second);
    }
    return out;
}

ChowElement ChowElement::operator*(const Rational& s) const {
    ChowElement out = zero(space_, coeff_, trunc_);
    if (s == 0) return out;
    for (const auto& [tuple, p] : comps_) out.set_component(tuple, p * s);
    return out;
}

bool ChowElement::operator==(const ChowElement& o) const {
    return space_ == o.space_ && coeff_ == o.coeff_ && trunc_ == o.trunc_ && comps_ == o.comps_;
}

GradedPoly ChowElement::integrate() const {
    GradedPoly out = GradedPoly::zero(coeff_, trunc_);
    for (const auto& [tuple, p] : comps_) {
        TupleFrame f = frame(tuple);
        // top monomial: every hyperplane variable at its cap
        const int n_h = static_cast<int>(f.alphabet.size()) - coeff_.size();
        for (const auto& t : p.terms()) {
            bool top = true;
            int h_seen = 0;
            std::vector<std::pair<int, int>> rest;
            for (const auto& [idx, exp] : t.mono.factors()) {
                if (idx < n_h) {
                    if (exp != f.caps[static_cast<std::size_t>(idx)]) { top = false; break; }
                    ++h_seen;
                } else {
                    rest.emplace_back(idx - n_h, exp);
                }
            }
            if (!top || h_seen != n_h) continue;
            out = out + GradedPoly::monomial(coeff_, trunc_, Monomial::from_factors(std::move(rest)),
                                             t.coeff);
        }
    }
    return out;
}

std::vector<std::vector<int>> cell_tuples(const ProductSpace& space) {
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(static_cast<std::size_t>(space.k()), 0);
    while (true) {
        out.push_back(tuple);
        int a = space.k() - 1;
        while (a >= 0) {
            if (++tuple[static_cast<std::size_t>(a)] <
                static_cast<int>(space.factors()[static_cast<std::size_t>(a)].cells().size()))
                break;
            tuple[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

} // namespace chowlab
