#include "chowlab/monomial.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>

namespace chowlab {

Monomial Monomial::variable(int index, int exponent) {
    return from_factors({{index, exponent}});
}

Monomial Monomial::from_factors(std::vector<std::pair<int, int>> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [idx, exp] : factors) {
        if (idx < 0) throw StructuralError("negative variable index in monomial");
        if (exp < 0) throw StructuralError("negative exponent in monomial");
        if (exp == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == idx)
            m.factors_.back().second += exp;
        else
            m.factors_.emplace_back(idx, exp);
    }
    return m;
}

int Monomial::exponent(int index) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::make_pair(index, 0));
    return (it != factors_.end() && it->first == index) ? it->second : 0;
}

long Monomial::weighted_degree(const Alphabet& alphabet) const {
    long deg = 0;
    for (const auto& [idx, exp] : factors_) {
        if (idx >= alphabet.size()) throw StructuralError("monomial variable outside alphabet");
        deg += static_cast<long>(alphabet.weight(idx)) * exp;
    }
    return deg;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

std::string Monomial::str(const Alphabet& alphabet) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [idx, exp] : factors_) {
        if (!out.empty()) out += '*';
        out += alphabet.name(idx);
        if (exp > 1) out += '^' + std::to_string(exp);
    }
    return out;
}

bool lex_before(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first != fb[j].first)
            // The one holding a positive power of the earlier variable is
            // lex-larger, hence comes first.
            return fa[i].first < fb[j].first;
        if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
        ++i, ++j;
    }
    // Equal prefix: whichever still has factors left is lex-larger.
    return i < fa.size();
}

bool canonical_before(const Monomial& a, const Monomial& b, const Alphabet& alphabet) {
    long da = a.weighted_degree(alphabet), db = b.weighted_degree(alphabet);
    if (da != db) return da < db;
    return lex_before(a, b);
}

} // namespace chowlab
