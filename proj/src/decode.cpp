#include "chowlab/decode.hpp"

#include "chowlab/cobordism.hpp"
#include "chowlab/errors.hpp"
#include "chowlab/linalg.hpp"

#include <map>
#include <set>

namespace chowlab {

namespace {

std::vector<MixedPairingMatrix> all_pairings(int d) {
    std::vector<MixedPairingMatrix> out;
    for (int m = 0; m <= d; ++m) out.push_back(mixed_pairing_matrix(d, m));
    return out;
}

// odometer over {0..limits[s]-1}^l, last coordinate fastest (row-major)
std::vector<std::vector<int>> index_tuples(const std::vector<int>& limits) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(limits.size(), 0);
    while (true) {
        out.push_back(t);
        std::size_t pos = limits.size();
        while (pos > 0) {
            --pos;
            if (++t[pos] < limits[pos]) break;
            t[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

// all degree profiles (m_1..m_l) in {0..d}^l
std::vector<std::vector<int>> degree_profiles(int d, int l) {
    return index_tuples(std::vector<int>(static_cast<std::size_t>(l), d + 1));
}

// the ordered variety tuple of one pairing-row choice
std::vector<FormalVariety> row_varieties(const std::vector<MixedPairingMatrix>& pairing,
                                         const std::vector<int>& profile,
                                         const std::vector<int>& rows) {
    std::vector<FormalVariety> X;
    for (std::size_t s = 0; s < profile.size(); ++s)
        X.push_back(pairing[static_cast<std::size_t>(profile[s])]
                        .pairs[static_cast<std::size_t>(rows[s])]
                        .first);
    return X;
}

std::string tuple_key(const std::vector<FormalVariety>& X) {
    std::string key;
    for (const auto& x : X) key += x.spec_string() + "|";
    return key;
}

FormalVariety union_of(const std::vector<FormalVariety>& X) {
    FormalVariety big = X.front();
    for (std::size_t t = 1; t < X.size(); ++t) big = big.disjoint_union(X[t]);
    return big;
}

ChowElement with_truncation(const ChowElement& e, int truncation) {
    ChowElement out = ChowElement::zero(e.space(), e.coeff_alphabet(), truncation);
    for (const auto& [tuple, p] : e.components()) out.set_component(tuple, p.retruncate(truncation));
    return out;
}

// gamma = prod_s c_{L_s}(X_s) placed on the minimal coordinate of block s;
// single-cell varieties only (that is all decode queries).
ChowElement pairing_class(const SetPartition& I, const std::vector<FormalVariety>& X,
                          const std::vector<Monomial>& L, const Alphabet& coeff, int truncation,
                          int d) {
    ProductSpace space = component_space(I, X);
    ChowElement out = ChowElement::zero(space, coeff, truncation);
    std::vector<int> tuple(static_cast<std::size_t>(I.k()), 0);
    TupleFrame f = out.frame(tuple);
    GradedPoly gamma = GradedPoly::constant(f.alphabet, truncation, 1);
    for (std::size_t s = 0; s < X.size(); ++s) {
        int rep = I.blocks()[s].front() - 1;
        GradedPoly total = cell_chern_total(X[s].cells().front(), f, rep);
        for (const auto& [v, e] : L[s].factors())
            for (int u = 0; u < e; ++u) gamma = gamma * total.piece(v + 1);
    }
    out.set_component(tuple, gamma);
    return out;
}

} // namespace

StandardCycle decode(const EvaluationOracle& oracle, int d, int k, const Alphabet& coeff_alphabet) {
    if (d < 1 || k < 1) throw StructuralError("decode: d and k must be >= 1");
    const std::vector<MixedPairingMatrix> pairing = all_pairings(d);
    const std::vector<SetPartition> partitions = enumerate_partitions(k);

    // Pre-query every test variety the pairing selections can ask for, so the
    // working truncation is known up front.
    std::map<std::string, ChowElement> values;
    for (const auto& I : partitions) {
        for (const auto& profile : degree_profiles(d, I.l())) {
            std::vector<int> limits;
            for (int m : profile)
                limits.push_back(pairing[static_cast<std::size_t>(m)].entries.rows());
            for (const auto& rows : index_tuples(limits)) {
                FormalVariety big = union_of(row_varieties(pairing, profile, rows));
                if (values.count(big.spec_string())) continue;
                ChowElement v = oracle(big);
                if (v.space() != ProductSpace::power(big, k))
                    throw StructuralError("decode: oracle value lives on the wrong space");
                if (v.coeff_alphabet() != coeff_alphabet)
                    throw StructuralError("decode: oracle value has the wrong coefficient alphabet");
                values.emplace(big.spec_string(), std::move(v));
            }
        }
    }

    // Working truncation: k*d bounds every hyperplane part (caps), plus the
    // largest coefficient-variable degree seen anywhere in the oracle values.
    long y_max = 0;
    for (const auto& [spec, v] : values) {
        const int n_coeff = v.coeff_alphabet().size();
        for (const auto& [tuple, p] : v.components()) {
            TupleFrame f = v.frame(tuple);
            const int n_h = f.alphabet.size() - n_coeff;
            for (const auto& t : p.terms()) {
                long deg = 0;
                for (const auto& [idx, e] : t.mono.factors())
                    if (idx >= n_h) deg += static_cast<long>(f.alphabet.weight(idx)) * e;
                y_max = std::max(y_max, deg);
            }
        }
    }
    const int T = k * d + static_cast<int>(y_max);

    StandardCycle Z(d, k, coeff_alphabet);
    for (const auto& I : partitions) {
        const int l = I.l();
        // residual on each queried tuple: oracle component minus the already
        // decoded strict refinements
        std::map<std::string, std::pair<std::vector<FormalVariety>, ChowElement>> residuals;
        auto residual = [&](const std::vector<FormalVariety>& X) -> const ChowElement& {
            std::string key = tuple_key(X);
            auto it = residuals.find(key);
            if (it != residuals.end()) return it->second.second;
            const ChowElement& value = values.at(union_of(X).spec_string());
            ChowElement r = extract_component(with_truncation(value, T), I, X) -
                            with_truncation(restrict_to_component(Z, I, X), T);
            return residuals.emplace(key, std::make_pair(X, std::move(r))).first->second.second;
        };

        std::vector<std::pair<Monomial, Rational>> entry_terms;
        for (const auto& profile : degree_profiles(d, l)) {
            // Kronecker pairing matrix of the per-block selections
            MatrixQ K = pairing[static_cast<std::size_t>(profile[0])].entries;
            for (std::size_t s = 1; s < profile.size(); ++s)
                K = kronecker(K, pairing[static_cast<std::size_t>(profile[s])].entries);

            std::vector<int> limits;
            for (int m : profile)
                limits.push_back(pairing[static_cast<std::size_t>(m)].entries.rows());
            std::vector<GradedPoly> b;
            for (const auto& rows : index_tuples(limits)) {
                std::vector<FormalVariety> X = row_varieties(pairing, profile, rows);
                std::vector<Monomial> L;
                for (std::size_t s = 0; s < profile.size(); ++s)
                    L.push_back(pairing[static_cast<std::size_t>(profile[s])]
                                    .pairs[static_cast<std::size_t>(rows[s])]
                                    .second);
                ChowElement gamma = pairing_class(I, X, L, coeff_alphabet, T, d);
                b.push_back((residual(X) * gamma).integrate());
            }

            std::vector<GradedPoly> x;
            try {
                x = solve_exact(K, std::move(b));
            } catch (const DegeneracyError&) {
                throw InternalError("decode: pairing system unexpectedly singular");
            }

            // columns: monomial tuples, block 1 outermost
            std::vector<int> col_limits;
            for (int m : profile)
                col_limits.push_back(static_cast<int>(pairing[static_cast<std::size_t>(m)].cols.size()));
            std::vector<std::vector<int>> cols = index_tuples(col_limits);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (x[c].is_zero()) continue;
                std::vector<std::pair<int, int>> shifted;
                for (std::size_t s = 0; s < profile.size(); ++s) {
                    const Monomial& m =
                        pairing[static_cast<std::size_t>(profile[s])].cols[static_cast<std::size_t>(
                            cols[c][s])];
                    for (const auto& [v, e] : m.factors())
                        shifted.emplace_back(static_cast<int>(s) * d + v, e);
                }
                Monomial chern_part = Monomial::from_factors(std::move(shifted));
                for (const auto& t : x[c].terms()) {
                    std::vector<std::pair<int, int>> yf;
                    for (const auto& [v, e] : t.mono.factors()) yf.emplace_back(l * d + v, e);
                    entry_terms.emplace_back(chern_part.times(Monomial::from_factors(std::move(yf))),
                                             t.coeff);
                }
            }
        }
        Z.set_entry(I, GradedPoly::from_terms(cycle_alphabet(d, l, coeff_alphabet),
                                              l * d + static_cast<int>(y_max),
                                              std::move(entry_terms)));

        // certify the full residual (not only its pairings) on every queried tuple
        for (const auto& [key, rx] : residuals) {
            const std::vector<FormalVariety>& X = rx.first;
            ChowElement expected = extract_component(
                with_truncation(values.at(union_of(X).spec_string()), T), I, X);
            ChowElement got = with_truncation(restrict_to_component(Z, I, X), T);
            if (!(expected == got))
                throw NotStandardError("decode: oracle is not standard (residual mismatch at partition " +
                                       I.str() + " on " + union_of(X).spec_string() + ")");
        }
    }
    return Z;
}

std::vector<std::string> decode_query_plan(int d, int k) {
    if (d < 1 || k < 1) throw StructuralError("decode_query_plan: d and k must be >= 1");
    const std::vector<MixedPairingMatrix> pairing = all_pairings(d);
    std::set<std::string> specs;
    for (const auto& I : enumerate_partitions(k)) {
        for (const auto& profile : degree_profiles(d, I.l())) {
            std::vector<int> limits;
            for (int m : profile)
                limits.push_back(pairing[static_cast<std::size_t>(m)].entries.rows());
            for (const auto& rows : index_tuples(limits))
                specs.insert(union_of(row_varieties(pairing, profile, rows)).spec_string());
        }
    }
    return std::vector<std::string>(specs.begin(), specs.end());
}

VanishingReport verify_vanishing(const StandardCycle& Z) {
    std::vector<FormalVariety> basis = cobordism_basis(Z.d());
    // non-decreasing index tuples = multisets of basis varieties, 1..k summands
    std::vector<std::vector<int>> multisets;
    std::vector<int> t;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (!t.empty()) multisets.push_back(t);
        if (remaining == 0) return;
        for (int i = start; i < static_cast<int>(basis.size()); ++i) {
            t.push_back(i);
            self(self, i, remaining - 1);
            t.pop_back();
        }
    };
    rec(rec, 0, Z.k());
    for (const auto& ms : multisets) {
        std::vector<FormalVariety> X;
        for (int i : ms) X.push_back(basis[static_cast<std::size_t>(i)]);
        FormalVariety big = union_of(X);
        if (!evaluate(Z, big).is_zero()) return {false, big};
    }
    return {true, std::nullopt};
}

} // namespace chowlab
