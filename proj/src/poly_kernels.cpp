#include "chowlab/poly_kernels.hpp"

#include <algorithm>
#include <map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chowlab::kernels {

namespace {

struct KeyLess {
    bool operator()(const std::pair<long, Monomial>& a, const std::pair<long, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return lex_before(a.second, b.second);
    }
};

using Accum = std::map<std::pair<long, Monomial>, Rational, KeyLess>;

// Accumulate a[lo..hi) * b into acc, skipping pairs past the truncation.
// Both inputs are sorted by weighted degree, so each a-term only needs the
// b-prefix with wdeg <= T - wdeg(a).
void accumulate_block(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                      const std::vector<Term>& b, long truncation, Accum& acc) {
    for (std::size_t i = lo; i < hi; ++i) {
        const Term& ta = a[i];
        long budget = truncation - ta.wdeg;
        if (budget < 0) break; // a is sorted; nothing further fits either
        for (const Term& tb : b) {
            if (tb.wdeg > budget) break;
            auto key = std::make_pair(ta.wdeg + tb.wdeg, ta.mono.times(tb.mono));
            auto [it, inserted] = acc.try_emplace(std::move(key), ta.coeff * tb.coeff);
            if (!inserted) it->second += ta.coeff * tb.coeff;
        }
    }
}

std::vector<Term> drain(Accum&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [key, coeff] : acc) {
        if (coeff == 0) continue;
        out.push_back(Term{key.second, key.first, std::move(coeff)});
    }
    return out;
}

} // namespace

std::vector<Term> multiply_serial(const std::vector<Term>& a, const std::vector<Term>& b, long truncation) {
    Accum acc;
    accumulate_block(a, 0, a.size(), b, truncation, acc);
    return drain(std::move(acc));
}

std::vector<Term> multiply_openmp(const std::vector<Term>& a, const std::vector<Term>& b, long truncation) {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
    if (threads > 1 && !a.empty() && !b.empty()) {
        std::vector<Accum> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            int id = omp_get_thread_num();
            int n = omp_get_num_threads();
            std::size_t chunk = (a.size() + n - 1) / n;
            std::size_t lo = std::min(a.size(), chunk * static_cast<std::size_t>(id));
            std::size_t hi = std::min(a.size(), lo + chunk);
            accumulate_block(a, lo, hi, b, truncation, partial[static_cast<std::size_t>(id)]);
        }
        Accum total = std::move(partial[0]);
        for (std::size_t t = 1; t < partial.size(); ++t) {
            for (auto& [key, coeff] : partial[t]) {
                auto [it, inserted] = total.try_emplace(key, coeff);
                if (!inserted) it->second += coeff;
            }
        }
        return drain(std::move(total));
    }
#endif
    return multiply_serial(a, b, truncation);
}

std::vector<Term> multiply_auto(const std::vector<Term>& a, const std::vector<Term>& b, long truncation) {
    // Pair-product count below which the parallel setup costs more than it saves.
    constexpr std::size_t kParallelThreshold = 1u << 14;
    if (!openmp_enabled() || a.size() * b.size() < kParallelThreshold)
        return multiply_serial(a, b, truncation);
    return multiply_openmp(a, b, truncation);
}

bool openmp_enabled() {
#ifdef _OPENMP
    return omp_get_max_threads() > 1;
#else
    return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace chowlab::kernels
