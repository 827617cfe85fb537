#include "chowlab/graded_poly.hpp"

#include "chowlab/errors.hpp"
#include "chowlab/poly_kernels.hpp"

#include <algorithm>
#include <map>

namespace chowlab {

GradedPoly::GradedPoly() : alphabet_(), trunc_(0) {}

GradedPoly GradedPoly::zero(const Alphabet& alphabet, int truncation) {
    if (truncation < 0) throw StructuralError("negative truncation");
    GradedPoly p;
    p.alphabet_ = alphabet;
    p.trunc_ = truncation;
    return p;
}

GradedPoly GradedPoly::constant(const Alphabet& alphabet, int truncation, const Rational& value) {
    return monomial(alphabet, truncation, Monomial(), value);
}

GradedPoly GradedPoly::variable(const Alphabet& alphabet, int truncation, int index) {
    if (index < 0 || index >= alphabet.size()) throw StructuralError("variable index outside alphabet");
    return monomial(alphabet, truncation, Monomial::variable(index));
}

GradedPoly GradedPoly::variable(const Alphabet& alphabet, int truncation, const std::string& name) {
    int idx = alphabet.index_of(name);
    if (idx < 0) throw StructuralError("unknown variable '" + name + "'");
    return monomial(alphabet, truncation, Monomial::variable(idx));
}

GradedPoly GradedPoly::monomial(const Alphabet& alphabet, int truncation, const Monomial& mono,
                                const Rational& coeff) {
    return from_terms(alphabet, truncation, {{mono, coeff}});
}

GradedPoly GradedPoly::from_terms(const Alphabet& alphabet, int truncation,
                                  std::vector<std::pair<Monomial, Rational>> terms) {
    GradedPoly p = zero(alphabet, truncation);
    std::vector<Term> staged;
    staged.reserve(terms.size());
    for (auto& [mono, coeff] : terms) {
        long wdeg = mono.weighted_degree(alphabet); // validates indices
        if (wdeg > truncation || coeff == 0) continue;
        staged.push_back(Term{std::move(mono), wdeg, std::move(coeff)});
    }
    std::sort(staged.begin(), staged.end(), [](const Term& a, const Term& b) {
        return term_before(a, b);
    });
    for (auto& t : staged) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
}

Rational GradedPoly::coefficient(const Monomial& mono) const {
    for (const auto& t : terms_)
        if (t.mono == mono) return t.coeff;
    return Rational(0);
}

long GradedPoly::min_degree() const {
    return terms_.empty() ? trunc_ + 1L : terms_.front().wdeg;
}

long GradedPoly::max_degree() const {
    return terms_.empty() ? -1L : terms_.back().wdeg;
}

GradedPoly GradedPoly::piece(long degree) const {
    GradedPoly out = zero(alphabet_, trunc_);
    for (const auto& t : terms_)
        if (t.wdeg == degree) out.terms_.push_back(t);
    return out;
}

bool GradedPoly::is_homogeneous(long degree) const {
    for (const auto& t : terms_)
        if (t.wdeg != degree) return false;
    return true;
}

void GradedPoly::require_compatible(const GradedPoly& o) const {
    if (alphabet_ != o.alphabet_) throw StructuralError("alphabet mismatch in polynomial operation");
    if (trunc_ != o.trunc_) throw StructuralError("truncation mismatch in polynomial operation");
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    require_compatible(o);
    GradedPoly out = zero(alphabet_, trunc_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && term_before(*a, *b))) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || term_before(*b, *a)) {
            out.terms_.push_back(*b++);
        } else {
            Term t = *a;
            t.coeff += b->coeff;
            if (t.coeff != 0) out.terms_.push_back(std::move(t));
            ++a, ++b;
        }
    }
    return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    require_compatible(o);
    GradedPoly out = zero(alphabet_, trunc_);
    out.terms_ = kernels::multiply_auto(terms_, o.terms_, trunc_);
    return out;
}

GradedPoly GradedPoly::operator*(const Rational& s) const {
    if (s == 0) return zero(alphabet_, trunc_);
    GradedPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw StructuralError("negative polynomial power");
    GradedPoly acc = constant(alphabet_, trunc_, 1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

GradedPoly GradedPoly::retruncate(int truncation) const {
    if (truncation < 0) throw StructuralError("negative truncation");
    GradedPoly out = zero(alphabet_, truncation);
    for (const auto& t : terms_)
        if (t.wdeg <= truncation) out.terms_.push_back(t);
    return out;
}

GradedPoly GradedPoly::embed(const Alphabet& target, int truncation) const {
    std::vector<int> remap(static_cast<std::size_t>(alphabet_.size()), -1);
    return map_monomials(*this, target, truncation, [&](const Monomial& m) -> std::optional<Monomial> {
        std::vector<std::pair<int, int>> factors;
        for (const auto& [idx, exp] : m.factors()) {
            int& to = remap[static_cast<std::size_t>(idx)];
            if (to < 0) {
                to = target.index_of(alphabet_.name(idx));
                if (to < 0)
                    throw StructuralError("embed: variable '" + alphabet_.name(idx) +
                                          "' missing from target alphabet");
                if (target.weight(to) != alphabet_.weight(idx))
                    throw StructuralError("embed: weight mismatch for '" + alphabet_.name(idx) + "'");
            }
            factors.emplace_back(to, exp);
        }
        return Monomial::from_factors(std::move(factors));
    });
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    if (alphabet_ != o.alphabet_ || trunc_ != o.trunc_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        if (t.mono.is_one()) {
            out += to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += t.mono.str(alphabet_);
        } else if (t.coeff == -1) {
            out += "-" + t.mono.str(alphabet_);
        } else {
            out += to_string(t.coeff) + "*" + t.mono.str(alphabet_);
        }
    }
    return out;
}

GradedPoly substitute(const GradedPoly& p, const Alphabet& target, int truncation,
                      const std::vector<std::optional<GradedPoly>>& images) {
    if (static_cast<int>(images.size()) != p.alphabet().size())
        throw StructuralError("substitute: one image slot per alphabet variable expected");
    for (const auto& img : images) {
        if (!img) continue;
        if (img->alphabet() != target || img->truncation() != truncation)
            throw StructuralError("substitute: image alphabet/truncation mismatch");
    }

    // Cache powers of each image as needed.
    std::vector<std::vector<GradedPoly>> powers(images.size());
    auto power = [&](int var, int exp) -> const GradedPoly& {
        auto& cache = powers[static_cast<std::size_t>(var)];
        if (cache.empty()) cache.push_back(GradedPoly::constant(target, truncation, 1));
        while (static_cast<int>(cache.size()) <= exp)
            cache.push_back(cache.back() * *images[static_cast<std::size_t>(var)]);
        return cache[static_cast<std::size_t>(exp)];
    };

    GradedPoly acc = GradedPoly::zero(target, truncation);
    for (const auto& t : p.terms()) {
        GradedPoly factor = GradedPoly::constant(target, truncation, t.coeff);
        for (const auto& [idx, exp] : t.mono.factors()) {
            if (!images[static_cast<std::size_t>(idx)])
                throw StructuralError("substitute: no image for variable '" + p.alphabet().name(idx) + "'");
            factor = factor * power(idx, exp);
        }
        acc = acc + factor;
    }
    return acc;
}

GradedPoly map_monomials(const GradedPoly& p, const Alphabet& target, int truncation,
                         const std::function<std::optional<Monomial>(const Monomial&)>& f) {
    std::vector<std::pair<Monomial, Rational>> staged;
    staged.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        auto image = f(t.mono);
        if (!image) continue;
        staged.emplace_back(std::move(*image), t.coeff);
    }
    return GradedPoly::from_terms(target, truncation, std::move(staged));
}

} // namespace chowlab
