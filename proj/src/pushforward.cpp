#include "chowlab/pushforward.hpp"

#include "chowlab/errors.hpp"

#include <map>

namespace chowlab {

GradedPoly projective_bundle_pushforward(int m, const BundleClass& E) {
    const Alphabet& a = E.total().alphabet();
    const int T = E.total().truncation();
    if (m < 0) throw StructuralError("projective_bundle_pushforward: negative power");
    const int i = m - E.rank() + 1;
    if (i < 0) return GradedPoly::zero(a, T);
    if (i > T) return GradedPoly::zero(a, T);
    return segre(dual(E)).piece(i);
}

GradedPoly pushforward_h_polynomial(const GradedPoly& p, int h_index, const BundleClass& E) {
    const Alphabet& a = p.alphabet();
    const int T = p.truncation();
    if (E.total().alphabet() != a || E.total().truncation() != T)
        throw StructuralError("pushforward_h_polynomial: bundle lives over a different ring");
    if (h_index < 0 || h_index >= a.size())
        throw StructuralError("pushforward_h_polynomial: hyperplane index outside alphabet");
    if (a.weight(h_index) != 1)
        throw StructuralError("pushforward_h_polynomial: hyperplane variable must have weight 1");

    // split off the h-power of each term, then push h^m -> s_{m-k+1}(E*)
    std::map<int, GradedPoly> by_power;
    for (const auto& t : p.terms()) {
        int power = t.mono.exponent(h_index);
        std::vector<std::pair<int, int>> rest;
        for (const auto& [idx, exp] : t.mono.factors())
            if (idx != h_index) rest.emplace_back(idx, exp);
        auto [it, inserted] = by_power.try_emplace(power, GradedPoly::zero(a, T));
        it->second = it->second + GradedPoly::monomial(a, T, Monomial::from_factors(std::move(rest)), t.coeff);
    }
    GradedPoly out = GradedPoly::zero(a, T);
    for (const auto& [power, base] : by_power)
        out = out + base * projective_bundle_pushforward(power, E);
    return out;
}

GradedPoly complete_intersection_chern(int d, long m, const BundleClass& Q1, int h_index) {
    if (d < 1) throw StructuralError("complete_intersection_chern: dimension must be positive");
    if (m < 1) throw StructuralError("complete_intersection_chern: hypersurface degree must be positive");
    if (Q1.rank() != d) throw StructuralError("complete_intersection_chern: Q1 must have rank d");
    const Alphabet& a = Q1.total().alphabet();
    const int T = Q1.total().truncation();
    const GradedPoly h = GradedPoly::variable(a, T, h_index);
    if (!h.is_homogeneous(1))
        throw StructuralError("complete_intersection_chern: hyperplane variable must have weight 1");

    // alternating sum 1 - mh + m^2 h^2 - ... + (-1)^d m^d h^d
    GradedPoly alt = GradedPoly::constant(a, T, 1);
    GradedPoly hp = GradedPoly::constant(a, T, 1);
    Rational mp(1);
    for (int i = 1; i <= d && i <= T; ++i) {
        hp = hp * h;
        mp *= m;
        alt = (i % 2 == 1) ? alt - hp * mp : alt + hp * mp;
    }
    return alt.pow(d - 1) * twist(dual(Q1), h).total();
}

GradedPoly ci_pushforward(int l, long m, int d, const BundleClass& Q1) {
    if (l < 0) throw StructuralError("ci_pushforward: negative power");
    if (d < 1) throw StructuralError("ci_pushforward: dimension must be positive");
    if (m < 1) throw StructuralError("ci_pushforward: hypersurface degree must be positive");
    if (Q1.rank() != d) throw StructuralError("ci_pushforward: Q1 must have rank d");
    Rational scale(1);
    for (int i = 0; i < d - 1; ++i) scale *= m;
    return projective_bundle_pushforward(l + d - 1, Q1) * scale;
}

} // namespace chowlab
