#include "chowlab/cobordism.hpp"
#include "chowlab/poly_kernels.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace chowlab;

TEST_CASE("thread configuration is sane") {
    CHECK(kernels::max_threads() >= 1);
    if (!kernels::openmp_enabled()) CHECK(kernels::max_threads() == 1);
}

TEST_CASE("parallel multiply kernel is bit-identical to the serial one") {
    auto g = testsupport::rng(0xBEEF);
    Alphabet a({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"y1", 2}, {"y2", 2}, {"z", 3}});
    for (int trial = 0; trial < 6; ++trial) {
        int T = 10;
        GradedPoly p = testsupport::random_poly(g, a, T, 220);
        GradedPoly q = testsupport::random_poly(g, a, T, 220);
        std::vector<Term> serial = kernels::multiply_serial(p.terms(), q.terms(), T);
        std::vector<Term> parallel = kernels::multiply_openmp(p.terms(), q.terms(), T);
        REQUIRE(!serial.empty()); // a trial with an all-truncated product tests nothing
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].mono == parallel[i].mono);
            CHECK(serial[i].coeff == parallel[i].coeff);
        }
        std::vector<Term> chosen = kernels::multiply_auto(p.terms(), q.terms(), T);
        CHECK(chosen.size() == serial.size());
    }
}

TEST_CASE("serial and parallel chern number matrices agree") {
    for (int d = 1; d <= 4; ++d) {
        ChernNumberMatrix s = chern_number_matrix(d, Exec::serial);
        ChernNumberMatrix p = chern_number_matrix(d, Exec::parallel);
        CHECK(s.entries == p.entries);
        CHECK(s.rows == p.rows);
        CHECK(s.cols == p.cols);
    }
}

TEST_CASE("serial and parallel mixed pairings agree") {
    for (int d = 1; d <= 4; ++d)
        for (int m = 0; m <= d; ++m) {
            MixedPairingMatrix s = mixed_pairing_matrix(d, m, Exec::serial);
            MixedPairingMatrix p = mixed_pairing_matrix(d, m, Exec::parallel);
            CHECK(s.entries == p.entries);
            CHECK(s.cols == p.cols);
            REQUIRE(s.pairs.size() == p.pairs.size());
            for (std::size_t i = 0; i < s.pairs.size(); ++i) {
                CHECK(s.pairs[i].first == p.pairs[i].first);
                CHECK(s.pairs[i].second == p.pairs[i].second);
            }
        }
}
