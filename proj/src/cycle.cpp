#include "chowlab/cycle.hpp"

#include "chowlab/cobordism.hpp"
#include "chowlab/errors.hpp"

#include <algorithm>

namespace chowlab {

Alphabet cycle_alphabet(int d, int l, const Alphabet& coeff) {
    if (d < 1 || l < 1) throw StructuralError("cycle_alphabet: d and l must be >= 1");
    std::vector<std::pair<std::string, int>> vars;
    for (int s = 1; s <= l; ++s)
        for (int i = 1; i <= d; ++i)
            vars.emplace_back("c" + std::to_string(i) + "_" + std::to_string(s), i);
    return Alphabet(std::move(vars)).concat(coeff);
}

StandardCycle::StandardCycle(int d, int k, Alphabet coeff_alphabet)
    : d_(d), k_(k), coeff_(std::move(coeff_alphabet)) {
    if (d_ < 1 || k_ < 1) throw StructuralError("StandardCycle: d and k must be >= 1");
}

GradedPoly StandardCycle::entry(const SetPartition& I) const {
    if (I.k() != k_) throw StructuralError("StandardCycle: partition of the wrong set");
    auto it = table_.find(I);
    if (it != table_.end()) return it->second;
    return GradedPoly::zero(cycle_alphabet(d_, I.l(), coeff_), 0);
}

void StandardCycle::set_entry(const SetPartition& I, const GradedPoly& P) {
    if (I.k() != k_) throw StructuralError("StandardCycle: partition of the wrong set");
    const int l = I.l();
    if (P.alphabet() != cycle_alphabet(d_, l, coeff_))
        throw StructuralError("StandardCycle: entry alphabet mismatch");
    for (const auto& term : P.terms()) {
        std::vector<long> block_deg(static_cast<std::size_t>(l), 0);
        for (const auto& [v, e] : term.mono.factors()) {
            if (v >= l * d_) continue; // coefficient variable
            block_deg[static_cast<std::size_t>(v / d_)] += static_cast<long>(v % d_ + 1) * e;
        }
        for (long deg : block_deg)
            if (deg > d_)
                throw StructuralError("StandardCycle: entry exceeds weighted degree " +
                                      std::to_string(d_) + " in a block");
    }
    if (P.is_zero()) {
        table_.erase(I);
        return;
    }
    table_.insert_or_assign(I, P.retruncate(static_cast<int>(P.max_degree())));
}

int StandardCycle::coeff_degree_cap() const {
    long cap = 0;
    for (const auto& [I, P] : table_) {
        const int l = I.l();
        for (const auto& term : P.terms()) {
            long deg = 0;
            for (const auto& [v, e] : term.mono.factors())
                if (v >= l * d_) deg += static_cast<long>(P.alphabet().weight(v)) * e;
            cap = std::max(cap, deg);
        }
    }
    return static_cast<int>(cap);
}

StandardCycle StandardCycle::operator+(const StandardCycle& o) const {
    if (d_ != o.d_ || k_ != o.k_ || coeff_ != o.coeff_)
        throw StructuralError("StandardCycle: adding incompatible cycles");
    StandardCycle out = *this;
    for (const auto& [I, P] : o.table_) {
        GradedPoly mine = out.entry(I);
        int T = static_cast<int>(std::max(mine.max_degree(), P.max_degree()));
        if (T < 0) T = 0;
        out.set_entry(I, mine.retruncate(T) + P.retruncate(T));
    }
    return out;
}

StandardCycle StandardCycle::operator-(const StandardCycle& o) const {
    if (d_ != o.d_ || k_ != o.k_ || coeff_ != o.coeff_)
        throw StructuralError("StandardCycle: subtracting incompatible cycles");
    StandardCycle out = *this;
    for (const auto& [I, P] : o.table_) {
        GradedPoly mine = out.entry(I);
        int T = static_cast<int>(std::max(mine.max_degree(), P.max_degree()));
        if (T < 0) T = 0;
        out.set_entry(I, mine.retruncate(T) - P.retruncate(T));
    }
    return out;
}

bool StandardCycle::operator==(const StandardCycle& o) const {
    if (d_ != o.d_ || k_ != o.k_ || coeff_ != o.coeff_) return false;
    if (table_.size() != o.table_.size()) return false;
    for (auto it = table_.begin(), jt = o.table_.begin(); it != table_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        const auto& a = it->second.terms();
        const auto& b = jt->second.terms();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].mono != b[i].mono || a[i].coeff != b[i].coeff) return false;
    }
    return true;
}

namespace {

// P over cycle_alphabet(d, l, coeff), turned into an element of the l-fold
// product `source` by substituting cellwise Chern classes per block and
// passing the coefficient variables through.
ChowElement table_entry_element(const GradedPoly& P, const ProductSpace& source,
                                const Alphabet& coeff, int truncation, int d) {
    const int l = source.k();
    ChowElement out = ChowElement::zero(source, coeff, truncation);
    for (const auto& tuple : cell_tuples(source)) {
        TupleFrame f = out.frame(tuple);
        const int n_h = f.alphabet.size() - coeff.size();
        std::vector<std::optional<GradedPoly>> images(
            static_cast<std::size_t>(P.alphabet().size()));
        for (int s = 0; s < l; ++s) {
            const Cell& cell =
                source.factors()[static_cast<std::size_t>(s)].cells()[static_cast<std::size_t>(
                    tuple[static_cast<std::size_t>(s)])];
            GradedPoly total = cell_chern_total(cell, f, s);
            for (int i = 1; i <= d; ++i)
                images[static_cast<std::size_t>(s * d + i - 1)] = total.piece(i);
        }
        for (int u = 0; u < coeff.size(); ++u)
            images[static_cast<std::size_t>(l * d + u)] =
                GradedPoly::variable(f.alphabet, truncation, n_h + u);
        out.set_component(tuple, substitute(P, f.alphabet, truncation, images));
    }
    return out;
}

} // namespace

ChowElement evaluate(const StandardCycle& Z, const FormalVariety& X) {
    if (X.d() != Z.d()) throw StructuralError("evaluate: variety dimension mismatch");
    const int T = Z.k() * Z.d() + Z.coeff_degree_cap();
    ProductSpace target = ProductSpace::power(X, Z.k());
    ChowElement out = ChowElement::zero(target, Z.coeff_alphabet(), T);
    for (const auto& [I, P] : Z.table()) {
        ChowElement alpha =
            table_entry_element(P, ProductSpace::power(X, I.l()), Z.coeff_alphabet(), T, Z.d());
        out = out + diagonal_pushforward(I, alpha, target);
    }
    return out;
}

ProductSpace component_space(const SetPartition& I, const std::vector<FormalVariety>& X) {
    if (static_cast<int>(X.size()) != I.l())
        throw StructuralError("component_space: need one variety per block");
    std::vector<FormalVariety> factors;
    for (int a = 1; a <= I.k(); ++a)
        factors.push_back(X[static_cast<std::size_t>(I.block_of(a))]);
    return ProductSpace(std::move(factors));
}

ChowElement restrict_to_component(const StandardCycle& Z, const SetPartition& I,
                                  const std::vector<FormalVariety>& X) {
    if (I.k() != Z.k()) throw StructuralError("restrict_to_component: partition of the wrong set");
    for (const auto& x : X)
        if (x.d() != Z.d()) throw StructuralError("restrict_to_component: variety dimension mismatch");
    const int T = Z.k() * Z.d() + Z.coeff_degree_cap();
    ProductSpace target = component_space(I, X);
    ChowElement out = ChowElement::zero(target, Z.coeff_alphabet(), T);
    for (const auto& [J, P] : Z.table()) {
        if (!refines(J, I)) continue;
        ChowElement alpha =
            table_entry_element(P, diagonal_source(J, target), Z.coeff_alphabet(), T, Z.d());
        out = out + diagonal_pushforward(J, alpha, target);
    }
    return out;
}

ChowElement extract_component(const ChowElement& value, const SetPartition& I,
                              const std::vector<FormalVariety>& X) {
    if (static_cast<int>(X.size()) != I.l())
        throw StructuralError("extract_component: need one variety per block");
    FormalVariety big = X.front();
    for (std::size_t t = 1; t < X.size(); ++t) big = big.disjoint_union(X[t]);
    if (value.space() != ProductSpace::power(big, I.k()))
        throw StructuralError("extract_component: value does not live on the expected power");
    std::vector<int> offset(X.size(), 0);
    for (std::size_t t = 1; t < X.size(); ++t)
        offset[t] = offset[t - 1] + static_cast<int>(X[t - 1].cells().size());

    ProductSpace target = component_space(I, X);
    ChowElement out = ChowElement::zero(target, value.coeff_alphabet(), value.truncation());
    for (const auto& tuple : cell_tuples(target)) {
        std::vector<int> big_tuple(tuple.size());
        for (int a = 1; a <= I.k(); ++a) {
            int t = I.block_of(a);
            big_tuple[static_cast<std::size_t>(a - 1)] =
                offset[static_cast<std::size_t>(t)] + tuple[static_cast<std::size_t>(a - 1)];
        }
        GradedPoly p = value.component(big_tuple);
        if (p.is_zero()) continue;
        out.set_component(tuple, p);
    }
    return out;
}

ChowElement delta_restrict(const ChowElement& T, const SetPartition& I) {
    const ProductSpace& space = T.space();
    if (I.k() != space.k()) throw StructuralError("delta_restrict: exponent mismatch");
    const FormalVariety& X = space.factors().front();
    for (const auto& f : space.factors())
        if (f != X) throw StructuralError("delta_restrict: factors are not a single variety");
    ProductSpace power = ProductSpace::power(X, space.k());
    ChowElement out = ChowElement::zero(power, T.coeff_alphabet(), T.truncation());
    for (const auto& [tuple, poly] : T.components()) out.set_component(tuple, poly);
    return out;
}

} // namespace chowlab
