#include "chowlab/triangular.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>

namespace chowlab {

namespace {

// Does p mention any of vars[from..)?
bool mentions_from(const GradedPoly& p, const std::vector<int>& vars, std::size_t from) {
    for (const auto& t : p.terms())
        for (const auto& [idx, exp] : t.mono.factors())
            for (std::size_t j = from; j < vars.size(); ++j)
                if (vars[j] == idx) return true;
    return false;
}

std::vector<std::optional<GradedPoly>> identity_images(const Alphabet& alphabet, int truncation) {
    std::vector<std::optional<GradedPoly>> images;
    images.reserve(static_cast<std::size_t>(alphabet.size()));
    for (int i = 0; i < alphabet.size(); ++i)
        images.emplace_back(GradedPoly::variable(alphabet, truncation, i));
    return images;
}

void check_distinct_targets(const Alphabet& alphabet, const std::vector<int>& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= alphabet.size())
            throw StructuralError("unknown/target index outside alphabet");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j]) throw StructuralError("repeated unknown/target variable");
    }
}

} // namespace

std::vector<GradedPoly> triangular_root(const std::vector<GradedPoly>& system,
                                        const std::vector<int>& unknowns) {
    if (system.size() != unknowns.size())
        throw StructuralError("triangular_root: one equation per unknown expected");
    if (system.empty()) return {};
    const Alphabet& alphabet = system[0].alphabet();
    const int T = system[0].truncation();
    for (const auto& g : system)
        if (g.alphabet() != alphabet || g.truncation() != T)
            throw StructuralError("triangular_root: mixed alphabets/truncations");
    check_distinct_targets(alphabet, unknowns);

    std::vector<GradedPoly> roots;
    auto images = identity_images(alphabet, T);
    for (std::size_t j = 0; j < system.size(); ++j) {
        const GradedPoly y = GradedPoly::variable(alphabet, T, unknowns[j]);
        if (system[j].coefficient(Monomial::variable(unknowns[j])) != 1)
            throw StructuralError("triangular_root: equation " + std::to_string(j) +
                                  " is not monic in its unknown");
        GradedPoly tail = system[j] - y;
        if (mentions_from(tail, unknowns, j))
            throw StructuralError("triangular_root: equation " + std::to_string(j) +
                                  " mentions a later unknown");
        // r_j = -P_j(r_1..r_{j-1}); earlier unknowns already map to their roots.
        GradedPoly r = -substitute(tail, alphabet, T, images);
        images[static_cast<std::size_t>(unknowns[j])] = r;
        roots.push_back(std::move(r));
    }
    return roots;
}

TriangularSystem::TriangularSystem(Alphabet alphabet, int truncation, std::vector<int> targets,
                                   std::vector<Rational> mu, std::vector<GradedPoly> tails)
    : alphabet_(std::move(alphabet)), trunc_(truncation), targets_(std::move(targets)),
      mu_(std::move(mu)), tails_(std::move(tails)) {
    if (mu_.size() != targets_.size() || tails_.size() != targets_.size())
        throw StructuralError("TriangularSystem: mu/tails/targets size mismatch");
    check_distinct_targets(alphabet_, targets_);
    for (std::size_t j = 0; j < targets_.size(); ++j) {
        if (mu_[j] == 0)
            throw DegeneracyError("TriangularSystem: vanishing leading unit at position " +
                                  std::to_string(j + 1));
        const GradedPoly& q = tails_[j];
        if (q.alphabet() != alphabet_ || q.truncation() != trunc_)
            throw StructuralError("TriangularSystem: tail alphabet/truncation mismatch");
        if (mentions_from(q, targets_, j))
            throw StructuralError("TriangularSystem: tail " + std::to_string(j + 1) +
                                  " mentions a later target");
        if (!q.is_zero() && q.min_degree() < alphabet_.weight(targets_[j]))
            throw StructuralError("TriangularSystem: tail " + std::to_string(j + 1) +
                                  " drops below the target weight");
    }
}

GradedPoly TriangularSystem::image(int j) const {
    auto y = GradedPoly::variable(alphabet_, trunc_, targets_[static_cast<std::size_t>(j)]);
    return y * mu_[static_cast<std::size_t>(j)] + tails_[static_cast<std::size_t>(j)];
}

GradedPoly apply(const TriangularSystem& sys, const GradedPoly& p) {
    if (p.alphabet() != sys.alphabet() || p.truncation() != sys.truncation())
        throw StructuralError("apply: polynomial does not live over the system's ring");
    std::vector<std::optional<GradedPoly>> images =
        [&] {
            std::vector<std::optional<GradedPoly>> out;
            for (int i = 0; i < sys.alphabet().size(); ++i)
                out.emplace_back(GradedPoly::variable(sys.alphabet(), sys.truncation(), i));
            return out;
        }();
    for (std::size_t j = 0; j < sys.targets().size(); ++j)
        images[static_cast<std::size_t>(sys.targets()[j])] = sys.image(static_cast<int>(j));
    return substitute(p, sys.alphabet(), sys.truncation(), images);
}

TriangularSystem invert(const TriangularSystem& sys) {
    const Alphabet& alphabet = sys.alphabet();
    const int T = sys.truncation();
    // tau(y_j) = (y_j - Q_j(tau(y_1)..tau(y_{j-1}))) / mu_j, built inductively.
    std::vector<std::optional<GradedPoly>> tau;
    for (int i = 0; i < alphabet.size(); ++i)
        tau.emplace_back(GradedPoly::variable(alphabet, T, i));

    std::vector<Rational> inv_mu;
    std::vector<GradedPoly> inv_tails;
    for (std::size_t j = 0; j < sys.targets().size(); ++j) {
        const Rational& mu = sys.mu()[j];
        GradedPoly y = GradedPoly::variable(alphabet, T, sys.targets()[j]);
        GradedPoly qsub = substitute(sys.tails()[j], alphabet, T, tau);
        GradedPoly tail = qsub * Rational(-1 / mu);
        inv_mu.push_back(1 / mu);
        inv_tails.push_back(tail);
        tau[static_cast<std::size_t>(sys.targets()[j])] = y * (1 / mu) + tail;
    }
    return TriangularSystem(alphabet, T, sys.targets(), std::move(inv_mu), std::move(inv_tails));
}

} // namespace chowlab
