#include "chowlab/cobordism.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>

namespace chowlab {

Alphabet chern_alphabet(int d) {
    std::vector<std::pair<std::string, int>> vars;
    for (int j = 1; j <= d; ++j) vars.emplace_back("c" + std::to_string(j), j);
    return Alphabet(std::move(vars));
}

std::vector<Monomial> degree_monomials(int d, int degree) {
    Alphabet a = chern_alphabet(d);
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> current;
    // enumerate exponent tuples with sum of i*e_i = degree
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == d) {
            if (remaining == 0) out.push_back(Monomial::from_factors(current));
            return;
        }
        int w = var + 1;
        for (int e = 0; e * w <= remaining; ++e) {
            if (e > 0) current.emplace_back(var, e);
            self(self, var + 1, remaining - e * w);
            if (e > 0) current.pop_back();
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        return canonical_before(x, y, a);
    });
    return out;
}

GradedPoly cell_chern_total(const Cell& cell, const TupleFrame& frame, int coord) {
    GradedPoly total = GradedPoly::constant(frame.alphabet, frame.truncation, 1);
    for (std::size_t j = 0; j < cell.dims.size(); ++j) {
        GradedPoly one_plus_h = GradedPoly::constant(frame.alphabet, frame.truncation, 1) +
                                frame.h(coord, static_cast<int>(j));
        total = total * one_plus_h.pow(cell.dims[j] + 1);
    }
    return reduce_nilpotents(total, frame);
}

ChowElement chern_class(const FormalVariety& X) {
    ProductSpace space = ProductSpace::power(X, 1);
    ChowElement out = ChowElement::zero(space, Alphabet(), X.d());
    for (std::size_t i = 0; i < X.cells().size(); ++i) {
        std::vector<int> tuple{static_cast<int>(i)};
        TupleFrame f = out.frame(tuple);
        out.set_component(tuple, cell_chern_total(X.cells()[i], f, 0));
    }
    return out;
}

Rational integrate_rational(const ChowElement& e) {
    if (e.coeff_alphabet().size() != 0)
        throw StructuralError("integrate_rational: element carries coefficient variables");
    return e.integrate().constant_term();
}

Rational chern_number(const FormalVariety& X, const Monomial& J) {
    long wd = 0;
    for (const auto& [idx, exp] : J.factors()) wd += static_cast<long>(idx + 1) * exp;
    if (wd != X.d())
        throw StructuralError("chern_number: monomial degree " + std::to_string(wd) +
                              " does not match dimension " + std::to_string(X.d()));
    Rational total = 0;
    ProductSpace space = ProductSpace::power(X, 1);
    for (std::size_t i = 0; i < X.cells().size(); ++i) {
        std::vector<int> tuple{static_cast<int>(i)};
        TupleFrame f = tuple_frame(space, tuple, Alphabet(), X.d());
        GradedPoly c = cell_chern_total(X.cells()[i], f, 0);
        GradedPoly value = GradedPoly::constant(f.alphabet, f.truncation, 1);
        for (const auto& [idx, exp] : J.factors()) {
            GradedPoly piece = c.piece(idx + 1); // c_{idx+1}
            for (int u = 0; u < exp; ++u) value = reduce_nilpotents(value * piece, f);
        }
        // coefficient of the top monomial of this cell
        std::vector<std::pair<int, int>> top;
        for (std::size_t v = 0; v < f.caps.size(); ++v)
            top.emplace_back(static_cast<int>(v), f.caps[v]);
        total += value.coefficient(Monomial::from_factors(std::move(top)));
    }
    return total;
}

namespace {
// integer partitions of d, decreasing parts, reverse-lex order: (d), ..., (1^d)
void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}
} // namespace

std::vector<FormalVariety> cobordism_basis(int d) {
    if (d < 1) throw StructuralError("cobordism_basis: dimension must be >= 1");
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions_rec(d, d, current, parts);
    std::vector<FormalVariety> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(FormalVariety::product(std::move(p)));
    return out;
}

ChernNumberMatrix chern_number_matrix(int d, Exec exec) {
    ChernNumberMatrix m;
    m.rows = cobordism_basis(d);
    m.cols = degree_monomials(d, d);
    const int R = static_cast<int>(m.rows.size());
    const int C = static_cast<int>(m.cols.size());
    if (R != C) throw InternalError("chern_number_matrix: partition counts disagree");
    m.entries = MatrixQ(R, C);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                m.entries.at(i, j) = chern_number(m.rows[static_cast<std::size_t>(i)],
                                                  m.cols[static_cast<std::size_t>(j)]);
    } else {
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                m.entries.at(i, j) = chern_number(m.rows[static_cast<std::size_t>(i)],
                                                  m.cols[static_cast<std::size_t>(j)]);
    }
    if (rank_exact(m.entries) != R)
        throw InternalError("chern_number_matrix: matrix is rank-deficient at d=" + std::to_string(d));
    return m;
}

MixedPairingMatrix mixed_pairing_matrix(int d, int m, Exec exec) {
    if (m < 0 || m > d) throw StructuralError("mixed_pairing_matrix: degree out of range");
    std::vector<Monomial> cols = degree_monomials(d, m);
    std::vector<Monomial> complements = degree_monomials(d, d - m);
    std::vector<FormalVariety> basis = cobordism_basis(d);

    // candidate rows in canonical order: varieties (basis order) x complements
    std::vector<std::pair<FormalVariety, Monomial>> candidates;
    for (const auto& X : basis)
        for (const auto& L : complements) candidates.emplace_back(X, L);

    const int R = static_cast<int>(candidates.size());
    const int C = static_cast<int>(cols.size());
    MatrixQ all(R, C);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                all.at(i, j) = chern_number(candidates[static_cast<std::size_t>(i)].first,
                                            candidates[static_cast<std::size_t>(i)].second.times(
                                                cols[static_cast<std::size_t>(j)]));
    } else {
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                all.at(i, j) = chern_number(candidates[static_cast<std::size_t>(i)].first,
                                            candidates[static_cast<std::size_t>(i)].second.times(
                                                cols[static_cast<std::size_t>(j)]));
    }

    std::vector<int> picked;
    try {
        picked = greedy_row_basis(all, C);
    } catch (const DegeneracyError&) {
        throw DegeneracyError("mixed_pairing_matrix: no full-rank selection at (d,m)=(" +
                              std::to_string(d) + "," + std::to_string(m) + ")");
    }
    MixedPairingMatrix out;
    out.cols = std::move(cols);
    out.entries = MatrixQ(C, C);
    for (int r = 0; r < C; ++r) {
        out.pairs.push_back(candidates[static_cast<std::size_t>(picked[static_cast<std::size_t>(r)])]);
        for (int j = 0; j < C; ++j)
            out.entries.at(r, j) = all.at(picked[static_cast<std::size_t>(r)], j);
    }
    return out;
}

} // namespace chowlab
