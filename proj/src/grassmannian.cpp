#include "chowlab/grassmannian.hpp"

#include "chowlab/errors.hpp"

#include <optional>

namespace chowlab {

GrassmannianModel make_grassmannian(int d, int N) {
    if (d < 1) throw StructuralError("Grassmannian model needs d >= 1");
    if (N < 2 * d + 1)
        throw StructuralError("Grassmannian model needs the stable range N >= 2d+1");
    GrassmannianModel m;
    m.d = d;
    m.N = N;
    m.kd = d * (N - d - 1);
    std::vector<std::pair<std::string, int>> vars;
    for (int j = 1; j <= d; ++j) vars.emplace_back("q" + std::to_string(j), j);
    m.alphabet = Alphabet(std::move(vars));
    return m;
}

TangentClassResult grassmannian_tangent(const GrassmannianModel& model) {
    const Alphabet& a = model.alphabet;
    const int T = model.d;
    GradedPoly cQ = GradedPoly::constant(a, T, 1);
    for (int j = 1; j <= model.d; ++j) cQ = cQ + GradedPoly::variable(a, T, j - 1);

    // 0 -> S -> O^N -> Q -> 0 gives c(S) = c(Q)^{-1}; T_G = Hom(S, Q) = S* (x) Q.
    BundleClass Q(model.d, cQ);
    BundleClass S(model.N - model.d, inverse_unit(cQ));
    GradedPoly ch = chern_character(dual(S)) * chern_character(Q);
    BundleClass tangent = class_from_character(ch, model.d * (model.N - model.d));

    TangentClassResult out{tangent, {}};
    for (int j = 1; j <= model.d; ++j) {
        Rational nu = tangent.total().coefficient(Monomial::variable(j - 1));
        if (nu == 0)
            throw DegeneracyError("grassmannian_tangent: nu_" + std::to_string(j) +
                                  " vanishes for (d,N)=(" + std::to_string(model.d) + "," +
                                  std::to_string(model.N) + ")");
        out.nu.push_back(nu);
    }
    return out;
}

UPrimeResult compute_u_prime(int d, int N, int l) {
    if (l < 1) throw StructuralError("compute_u_prime: degree l must be positive");
    GrassmannianModel model = make_grassmannian(d, N);
    const int T = d;

    // combined ring: tangent classes of X, then restricted quotient classes
    std::vector<std::pair<std::string, int>> vars;
    for (int j = 1; j <= d; ++j) vars.emplace_back("c" + std::to_string(j), j);
    for (int j = 1; j <= d; ++j) vars.emplace_back("c'" + std::to_string(j), j);
    Alphabet a(vars);

    // restrict c(T_G) to X: q_j -> c'_j
    TangentClassResult tg = grassmannian_tangent(model);
    std::vector<std::optional<GradedPoly>> restrict_images;
    for (int j = 0; j < d; ++j)
        restrict_images.emplace_back(GradedPoly::variable(a, T, d + j));
    GradedPoly cTG_X = substitute(tg.tangent.total(), a, T, restrict_images);

    // c(N) = c(T_G|X) * s(T_X)
    GradedPoly cTX = GradedPoly::constant(a, T, 1);
    for (int j = 0; j < d; ++j) cTX = cTX + GradedPoly::variable(a, T, j);
    BundleClass normal(model.kd, cTG_X * inverse_unit(cTX));

    // twist by O(-l): c_1 = -l c'_1
    GradedPoly t = GradedPoly::variable(a, T, d) * Rational(-l);
    BundleClass twisted = twist(normal, t);

    UPrimeResult out;
    out.d = d;
    out.N = N;
    out.l = l;
    out.alphabet = a;
    std::string mu_text;
    bool degenerate = false;
    for (int j = 1; j <= d; ++j) {
        GradedPoly uj = twisted.total().piece(j);
        Rational mu = uj.coefficient(Monomial::variable(d + j - 1));
        // triangularity: apart from the mu_j c'_j head, only c'_1..c'_{j-1}
        // may appear (coefficients in the c's are fine)
        for (const auto& term : uj.terms()) {
            if (term.mono == Monomial::variable(d + j - 1)) continue;
            for (const auto& [idx, exp] : term.mono.factors())
                if (idx >= d + j - 1)
                    throw InternalError("compute_u_prime: U'_" + std::to_string(j) +
                                        " is not triangular in the restricted classes");
        }
        out.polys.push_back(uj);
        out.mu.push_back(mu);
        if (!mu_text.empty()) mu_text += ", ";
        mu_text += to_string(mu);
        if (mu == 0) degenerate = true;
    }
    if (degenerate)
        throw UPrimeDegeneracyError("compute_u_prime: degenerate leading units (mu = [" + mu_text +
                                    "]) for (d,N,l)=(" + std::to_string(d) + "," + std::to_string(N) +
                                    "," + std::to_string(l) + ")",
                                    out.mu);
    return out;
}

} // namespace chowlab
