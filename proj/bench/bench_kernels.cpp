// Timing harness: serial reference vs OpenMP kernels, with equality checks.
// Usage: chowlab-bench [trials]

#include "chowlab/cobordism.hpp"
#include "chowlab/poly_kernels.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace chowlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

GradedPoly random_poly(std::mt19937_64& g, const Alphabet& a, int truncation, int terms) {
    std::vector<std::pair<Monomial, Rational>> out;
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> var(0, a.size() - 1);
    // keep factor degrees at or below T/2 so the products do not all truncate away
    std::uniform_int_distribution<int> target(0, truncation / 2);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<int, int>> factors;
        long degree = 0;
        long cap = target(g);
        while (true) {
            int v = var(g);
            if (degree + a.weight(v) > cap) break;
            degree += a.weight(v);
            factors.emplace_back(v, 1);
        }
        int c = coeff(g);
        out.emplace_back(Monomial::from_factors(std::move(factors)), c == 0 ? 1 : c);
    }
    return GradedPoly::from_terms(a, truncation, std::move(out));
}

} // namespace

int main(int argc, char** argv) {
    int trials = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::cout << "openmp: compiled in, max threads: " << kernels::max_threads();
    if (!kernels::openmp_enabled()) std::cout << " (single thread: auto kernel stays serial)";
    std::cout << "\n";
#else
    std::cout << "openmp: not compiled in\n";
#endif

    std::mt19937_64 g(0x5eedULL);
    Alphabet a({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 2}, {"x5", 2}, {"x6", 3}});
    const int T = 14;

    double serial_total = 0, openmp_total = 0;
    for (int t = 0; t < trials; ++t) {
        GradedPoly p = random_poly(g, a, T, 2200);
        GradedPoly q = random_poly(g, a, T, 2200);
        auto t0 = Clock::now();
        auto rs = kernels::multiply_serial(p.terms(), q.terms(), T);
        serial_total += seconds_since(t0);
        t0 = Clock::now();
        auto rp = kernels::multiply_openmp(p.terms(), q.terms(), T);
        openmp_total += seconds_since(t0);
        if (rs.size() != rp.size()) {
            std::cerr << "kernel mismatch: term counts differ\n";
            return 1;
        }
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (rs[i].mono != rp[i].mono || rs[i].coeff != rp[i].coeff) {
                std::cerr << "kernel mismatch at term " << i << "\n";
                return 1;
            }
    }
    std::cout << "multiply (" << trials << " trials): serial " << serial_total << "s, openmp "
              << openmp_total << "s";
    if (openmp_total > 0) std::cout << ", speedup x" << serial_total / openmp_total;
    std::cout << "\n";

    auto t0 = Clock::now();
    ChernNumberMatrix ms = chern_number_matrix(5, Exec::serial);
    double mat_serial = seconds_since(t0);
    t0 = Clock::now();
    ChernNumberMatrix mp = chern_number_matrix(5, Exec::parallel);
    double mat_openmp = seconds_since(t0);
    if (!(ms.entries == mp.entries)) {
        std::cerr << "matrix mismatch between serial and parallel builds\n";
        return 1;
    }
    std::cout << "chern_number_matrix(5): serial " << mat_serial << "s, openmp " << mat_openmp
              << "s";
    if (mat_openmp > 0) std::cout << ", speedup x" << mat_serial / mat_openmp;
    std::cout << "\nall parallel results identical to serial reference\n";
    return 0;
}
