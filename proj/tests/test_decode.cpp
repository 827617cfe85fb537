#include "chowlab/cobordism.hpp"
#include "chowlab/decode.hpp"
#include "chowlab/errors.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace chowlab;
using testsupport::random_cycle;
using testsupport::uniform;

namespace {
EvaluationOracle oracle_of(const StandardCycle& Z) {
    return [Z](const FormalVariety& X) { return evaluate(Z, X); };
}
} // namespace

TEST_CASE("query plan for line pairs") {
    std::vector<std::string> plan = decode_query_plan(1, 2);
    CHECK(plan == std::vector<std::string>{"P1", "P1 + P1"});
    CHECK(std::is_sorted(plan.begin(), plan.end()));
    for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::string> p = decode_query_plan(d, k);
            CHECK(!p.empty());
            CHECK(std::set<std::string>(p.begin(), p.end()).size() == p.size());
        }
}

TEST_CASE("decode only queries the published plan") {
    auto g = testsupport::rng(0x9A17);
    StandardCycle Z = random_cycle(g, 2, 2, Alphabet());
    std::vector<std::string> plan = decode_query_plan(2, 2);
    std::set<std::string> seen;
    EvaluationOracle oracle = [&](const FormalVariety& X) {
        seen.insert(X.spec_string());
        return evaluate(Z, X);
    };
    CHECK(decode(oracle, 2, 2) == Z);
    CHECK(seen == std::set<std::string>(plan.begin(), plan.end()));
}

TEST_CASE("zero oracle decodes to the zero cycle") {
    for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 3; ++k) {
            StandardCycle Z(d, k, Alphabet());
            StandardCycle back = decode(oracle_of(Z), d, k);
            CHECK(back.table().empty());
            CHECK(back == Z);
        }
}

TEST_CASE("single-partition cycles decode exactly") {
    // the fundamental small diagonal: P_{one block} = 1
    StandardCycle D(1, 2, Alphabet());
    D.set_entry(SetPartition::one_block(2),
                GradedPoly::constant(cycle_alphabet(1, 1, Alphabet()), 0, 1));
    CHECK(decode(oracle_of(D), 1, 2) == D);

    // a pure singleton product term
    StandardCycle S(2, 2, Alphabet());
    Alphabet a2 = cycle_alphabet(2, 2, Alphabet());
    S.set_entry(SetPartition::singletons(2),
                GradedPoly::monomial(a2, 3, Monomial::from_factors({{0, 1}, {3, 1}}), rational(3, 2)));
    CHECK(decode(oracle_of(S), 2, 2) == S);
}

TEST_CASE("random cycles decode back to themselves") {
    auto g = testsupport::rng(0xDEC0DE);
    for (int trial = 0; trial < 12; ++trial) {
        int d = uniform(g, 1, 2);
        int k = uniform(g, 1, 3);
        if (d == 2 && k == 3 && trial % 3) k = 2; // keep the suite quick
        StandardCycle Z = random_cycle(g, d, k, Alphabet());
        CHECK(decode(oracle_of(Z), d, k) == Z);
    }
}

TEST_CASE("coefficient alphabets decode along") {
    auto g = testsupport::rng(0xC0FF);
    Alphabet y1({{"y", 1}});
    Alphabet y2({{"u", 1}, {"v", 2}});
    for (int trial = 0; trial < 6; ++trial) {
        const Alphabet& coeff = trial % 2 ? y1 : y2;
        int d = uniform(g, 1, 2), k = uniform(g, 1, 2);
        StandardCycle Z = random_cycle(g, d, k, coeff);
        CHECK(decode(oracle_of(Z), d, k, coeff) == Z);
    }
    // a handwritten case whose only content sits in the coefficients
    StandardCycle Z(1, 2, y1);
    Alphabet a1 = cycle_alphabet(1, 1, y1);
    Alphabet a2 = cycle_alphabet(1, 2, y1);
    Z.set_entry(SetPartition::one_block(2),
                GradedPoly::monomial(a1, 3, Monomial::from_factors({{1, 3}}), -2));
    Z.set_entry(SetPartition::singletons(2),
                GradedPoly::monomial(a2, 1, Monomial::variable(2), rational(1, 3)));
    CHECK(decode(oracle_of(Z), 1, 2, y1) == Z);
}

TEST_CASE("tampered oracles are rejected as not standard") {
    StandardCycle Z(1, 2, Alphabet());
    Z.set_entry(SetPartition::one_block(2),
                GradedPoly::constant(cycle_alphabet(1, 1, Alphabet()), 0, 1));
    for (int mode = 0; mode < 2; ++mode) {
        EvaluationOracle tampered = [&, mode](const FormalVariety& X) {
            ChowElement v = evaluate(Z, X);
            if (X.spec_string() == "P1") {
                TupleFrame f = v.frame({0, 0});
                GradedPoly extra = mode == 0
                                       ? GradedPoly::constant(f.alphabet, f.truncation, 1)
                                       : f.h(0, 0);
                v.set_component({0, 0}, v.component({0, 0}) + extra);
            }
            return v;
        };
        CHECK_THROWS_AS(decode(tampered, 1, 2), NotStandardError);
    }
}

TEST_CASE("oracle values on the wrong space are structural errors") {
    EvaluationOracle bad = [](const FormalVariety& X) {
        return ChowElement(ProductSpace::power(X, 3), Alphabet(), 3);
    };
    CHECK_THROWS_AS(decode(bad, 1, 2), StructuralError);
    EvaluationOracle bad_coeff = [](const FormalVariety& X) {
        return ChowElement(ProductSpace::power(X, 2), Alphabet({{"z", 1}}), 2);
    };
    CHECK_THROWS_AS(decode(bad_coeff, 1, 2), StructuralError);
}

TEST_CASE("vanishing verification") {
    StandardCycle zero(2, 2, Alphabet());
    VanishingReport r = verify_vanishing(zero);
    CHECK(r.vanishes);
    CHECK(!r.witness.has_value());

    auto g = testsupport::rng(0x7A915);
    for (int trial = 0; trial < 8; ++trial) {
        int d = uniform(g, 1, 2), k = uniform(g, 1, 2);
        StandardCycle Z = random_cycle(g, d, k, Alphabet());
        VanishingReport v = verify_vanishing(Z);
        if (Z.table().empty()) {
            CHECK(v.vanishes);
        } else {
            // uniqueness: a nonzero table cannot evaluate to zero everywhere
            CHECK(!v.vanishes);
            REQUIRE(v.witness.has_value());
            CHECK(!evaluate(Z, *v.witness).is_zero());
        }
    }

    // difference of equal cycles vanishes with distinct presentations
    StandardCycle A = random_cycle(g, 2, 2, Alphabet());
    CHECK(verify_vanishing(A - A).vanishes);
}
