#include "chowlab/diagonal.hpp"

#include "chowlab/errors.hpp"

namespace chowlab {

GradedPoly diagonal_pair_class(const Cell& cell, const TupleFrame& frame, int a, int b) {
    GradedPoly out = GradedPoly::constant(frame.alphabet, frame.truncation, 1);
    for (std::size_t j = 0; j < cell.dims.size(); ++j) {
        int n = cell.dims[j];
        int ia = frame.h_index[static_cast<std::size_t>(a)][j];
        int ib = frame.h_index[static_cast<std::size_t>(b)][j];
        std::vector<std::pair<Monomial, Rational>> terms;
        for (int p = 0; p <= n; ++p)
            terms.emplace_back(Monomial::from_factors({{ia, p}, {ib, n - p}}), 1);
        out = out * GradedPoly::from_terms(frame.alphabet, frame.truncation, std::move(terms));
    }
    return out;
}

ProductSpace diagonal_source(const SetPartition& I, const ProductSpace& target) {
    if (I.k() != target.k()) throw StructuralError("diagonal_source: partition/space size mismatch");
    std::vector<FormalVariety> factors;
    for (const auto& block : I.blocks()) {
        const FormalVariety& X = target.factors()[static_cast<std::size_t>(block.front() - 1)];
        for (int e : block)
            if (target.factors()[static_cast<std::size_t>(e - 1)] != X)
                throw StructuralError("diagonal_source: target not constant on a block");
        factors.push_back(X);
    }
    return ProductSpace(std::move(factors));
}

namespace {

// index translation src variable -> dst variable: h-variables by the
// coordinate map, coefficient variables positionally.
std::vector<int> frame_index_map(const TupleFrame& src, const TupleFrame& dst,
                                 const std::vector<int>& coord_map, int n_coeff) {
    std::vector<int> idx(static_cast<std::size_t>(src.alphabet.size()), -1);
    for (std::size_t s = 0; s < src.h_index.size(); ++s) {
        int t = coord_map[s];
        if (src.h_index[s].size() != dst.h_index[static_cast<std::size_t>(t)].size())
            throw InternalError("frame_index_map: slot count mismatch");
        for (std::size_t j = 0; j < src.h_index[s].size(); ++j)
            idx[static_cast<std::size_t>(src.h_index[s][j])] =
                dst.h_index[static_cast<std::size_t>(t)][j];
    }
    int src_h = src.alphabet.size() - n_coeff;
    int dst_h = dst.alphabet.size() - n_coeff;
    for (int u = 0; u < n_coeff; ++u) idx[static_cast<std::size_t>(src_h + u)] = dst_h + u;
    return idx;
}

GradedPoly rename_by_map(const GradedPoly& p, const Alphabet& target, int truncation,
                         const std::vector<int>& idx) {
    return map_monomials(p, target, truncation, [&](const Monomial& m) -> std::optional<Monomial> {
        std::vector<std::pair<int, int>> factors;
        factors.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) factors.emplace_back(idx[static_cast<std::size_t>(v)], e);
        return Monomial::from_factors(std::move(factors));
    });
}

} // namespace

ChowElement diagonal_pushforward(const SetPartition& I, const ChowElement& alpha,
                                 const ProductSpace& target) {
    ProductSpace source = diagonal_source(I, target);
    if (alpha.space() != source)
        throw StructuralError("diagonal_pushforward: element does not live on the diagonal source");
    const int n_coeff = alpha.coeff_alphabet().size();
    ChowElement out = ChowElement::zero(target, alpha.coeff_alphabet(), alpha.truncation());

    // block s is represented by its minimal coordinate in the target
    std::vector<int> rep;
    for (const auto& block : I.blocks()) rep.push_back(block.front() - 1);

    for (const auto& [src_tuple, poly] : alpha.components()) {
        std::vector<int> tgt_tuple(static_cast<std::size_t>(target.k()));
        for (int a = 0; a < target.k(); ++a)
            tgt_tuple[static_cast<std::size_t>(a)] =
                src_tuple[static_cast<std::size_t>(I.block_of(a + 1))];
        TupleFrame src_frame = alpha.frame(src_tuple);
        TupleFrame dst_frame = out.frame(tgt_tuple);
        GradedPoly image = rename_by_map(poly, dst_frame.alphabet, dst_frame.truncation,
                                         frame_index_map(src_frame, dst_frame, rep, n_coeff));
        for (std::size_t s = 0; s < I.blocks().size(); ++s) {
            const Cell& cell = source.factors()[s].cells()[static_cast<std::size_t>(
                src_tuple[s])];
            for (int e : I.blocks()[s]) {
                if (e - 1 == rep[s]) continue;
                image = image * diagonal_pair_class(cell, dst_frame, rep[s], e - 1);
            }
        }
        out.add_to_component(tgt_tuple, image);
    }
    return out;
}

ChowElement diagonal_pushforward(const FormalVariety& X, const SetPartition& I,
                                 const ChowElement& alpha) {
    return diagonal_pushforward(I, alpha, ProductSpace::power(X, I.k()));
}

ChowElement diagonal_pullback(const SetPartition& I, const ChowElement& beta) {
    const ProductSpace& target = beta.space();
    ProductSpace source = diagonal_source(I, target);
    const int n_coeff = beta.coeff_alphabet().size();
    ChowElement out = ChowElement::zero(source, beta.coeff_alphabet(), beta.truncation());

    // target coordinate -> source coordinate (its block)
    std::vector<int> coord_map(static_cast<std::size_t>(target.k()));
    for (int a = 0; a < target.k(); ++a) coord_map[static_cast<std::size_t>(a)] = I.block_of(a + 1);

    for (const auto& [tgt_tuple, poly] : beta.components()) {
        // only tuples constant on each block meet the diagonal
        bool constant = true;
        for (const auto& block : I.blocks()) {
            for (int e : block)
                if (tgt_tuple[static_cast<std::size_t>(e - 1)] !=
                    tgt_tuple[static_cast<std::size_t>(block.front() - 1)]) {
                    constant = false;
                    break;
                }
            if (!constant) break;
        }
        if (!constant) continue;
        std::vector<int> src_tuple;
        for (const auto& block : I.blocks())
            src_tuple.push_back(tgt_tuple[static_cast<std::size_t>(block.front() - 1)]);
        TupleFrame src_frame = beta.frame(tgt_tuple);
        TupleFrame dst_frame = out.frame(src_tuple);
        out.add_to_component(src_tuple,
                             rename_by_map(poly, dst_frame.alphabet, dst_frame.truncation,
                                           frame_index_map(src_frame, dst_frame, coord_map, n_coeff)));
    }
    return out;
}

} // namespace chowlab
