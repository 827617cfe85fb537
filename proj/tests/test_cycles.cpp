#include "chowlab/cycle.hpp"
#include "chowlab/errors.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace chowlab;
using testsupport::random_cycle;
using testsupport::uniform;

namespace {

FormalVariety union_of(const std::vector<FormalVariety>& xs) {
    FormalVariety u = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) u = u.disjoint_union(xs[i]);
    return u;
}

GradedPoly cmono(const Alphabet& a, int T, std::vector<std::pair<int, int>> factors,
                 Rational c = 1) {
    return GradedPoly::monomial(a, T, Monomial::from_factors(std::move(factors)), c);
}

} // namespace

TEST_CASE("cycle alphabet layout") {
    Alphabet a = cycle_alphabet(2, 2, Alphabet({{"y", 3}}));
    REQUIRE(a.size() == 5);
    CHECK(a.name(0) == "c1_1");
    CHECK(a.name(1) == "c2_1");
    CHECK(a.name(2) == "c1_2");
    CHECK(a.name(3) == "c2_2");
    CHECK(a.name(4) == "y");
    CHECK(a.weight(0) == 1);
    CHECK(a.weight(1) == 2);
    CHECK(a.weight(3) == 2);
    CHECK(a.weight(4) == 3);
}

TEST_CASE("standard cycle table guards") {
    StandardCycle Z(1, 2, Alphabet());
    SetPartition one = SetPartition::one_block(2);
    SetPartition sing = SetPartition::singletons(2);
    CHECK(Z.entry(one).is_zero());

    Alphabet a1 = cycle_alphabet(1, 1, Alphabet());
    // per-block degree bound: c1_1^2 has weight 2 > d = 1
    CHECK_THROWS_AS(Z.set_entry(one, cmono(a1, 2, {{0, 2}})), StructuralError);
    // wrong alphabet for the partition's block count
    Alphabet a2 = cycle_alphabet(1, 2, Alphabet());
    CHECK_THROWS_AS(Z.set_entry(one, GradedPoly::constant(a2, 1, 1)), StructuralError);
    CHECK_THROWS_AS(StandardCycle(0, 2, Alphabet()), StructuralError);
    CHECK_THROWS_AS(StandardCycle(1, 0, Alphabet()), StructuralError);
    // partition of the wrong ground set
    CHECK_THROWS_AS(Z.set_entry(SetPartition::one_block(3), GradedPoly::constant(a1, 1, 1)),
                    StructuralError);

    // zero entries are dropped, nonzero ones stored
    Z.set_entry(one, GradedPoly::zero(a1, 1));
    CHECK(Z.table().empty());
    Z.set_entry(sing, cmono(a2, 2, {{0, 1}, {1, 1}}));
    CHECK(Z.table().size() == 1);

    // coefficient variables are not degree-limited
    StandardCycle W(1, 2, Alphabet({{"y", 1}}));
    Alphabet ay = cycle_alphabet(1, 1, Alphabet({{"y", 1}}));
    W.set_entry(one, cmono(ay, 5, {{0, 1}, {1, 4}}));
    CHECK(W.coeff_degree_cap() == 4);
    CHECK(Z.coeff_degree_cap() == 0);
}

TEST_CASE("cycle equality ignores truncation bookkeeping") {
    Alphabet a = cycle_alphabet(1, 1, Alphabet());
    StandardCycle A(1, 2, Alphabet()), B(1, 2, Alphabet());
    A.set_entry(SetPartition::one_block(2), cmono(a, 1, {{0, 1}}));
    B.set_entry(SetPartition::one_block(2), cmono(a, 7, {{0, 1}}));
    CHECK(A == B);
    B.set_entry(SetPartition::singletons(2),
                GradedPoly::constant(cycle_alphabet(1, 2, Alphabet()), 0, 1));
    CHECK(A != B);
    StandardCycle diff = B - A;
    CHECK(diff.table().size() == 1);
    CHECK(diff.entry(SetPartition::one_block(2)).is_zero());
    CHECK(A + diff == B);
}

TEST_CASE("evaluation of line cycles, frozen") {
    FormalVariety P1 = FormalVariety::projective_space(1);
    SetPartition one = SetPartition::one_block(2);
    SetPartition sing = SetPartition::singletons(2);
    Alphabet a1 = cycle_alphabet(1, 1, Alphabet());
    Alphabet a2 = cycle_alphabet(1, 2, Alphabet());

    // P_{12} = c1_1: Delta_*(c1(P1)) = 2 h1 h2
    StandardCycle Z(1, 2, Alphabet());
    Z.set_entry(one, cmono(a1, 1, {{0, 1}}));
    ChowElement v = evaluate(Z, P1);
    TupleFrame f = v.frame({0, 0});
    CHECK(v.component({0, 0}) == Rational(2) * (f.h(0, 0) * f.h(1, 0)));
    CHECK(v.truncation() == 2);

    // P_{1|2} = c1_1 c1_2: product of the two c1's = 4 h1 h2
    StandardCycle W(1, 2, Alphabet());
    W.set_entry(sing, cmono(a2, 2, {{0, 1}, {1, 1}}));
    CHECK(evaluate(W, P1).component({0, 0}) == Rational(4) * (f.h(0, 0) * f.h(1, 0)));

    // sum evaluates additively
    CHECK(evaluate(Z + W, P1) == evaluate(Z, P1) + evaluate(W, P1));

    // fundamental small diagonal: P_{12} = 1 gives h1 + h2
    StandardCycle D(1, 2, Alphabet());
    D.set_entry(one, GradedPoly::constant(a1, 0, 1));
    CHECK(evaluate(D, P1).component({0, 0}) == f.h(0, 0) + f.h(1, 0));

    CHECK_THROWS_AS(evaluate(Z, FormalVariety::projective_space(2)), StructuralError);
}

TEST_CASE("coefficient variables ride through evaluation") {
    Alphabet y({{"y", 1}});
    FormalVariety P1 = FormalVariety::projective_space(1);
    StandardCycle Z(1, 2, y);
    Alphabet a1 = cycle_alphabet(1, 1, y);
    // P_{12} = y * c1_1
    Z.set_entry(SetPartition::one_block(2), cmono(a1, 2, {{0, 1}, {1, 1}}));
    ChowElement v = evaluate(Z, P1);
    CHECK(v.coeff_alphabet().size() == 1);
    CHECK(v.truncation() == 3); // k*d + coeff cap
    TupleFrame f = v.frame({0, 0});
    GradedPoly yvar = GradedPoly::variable(f.alphabet, f.truncation, f.alphabet.index_of("y"));
    CHECK(v.component({0, 0}) == Rational(2) * (f.h(0, 0) * f.h(1, 0) * yvar));
    GradedPoly total = v.integrate();
    CHECK(total == Rational(2) * GradedPoly::variable(y, 3, 0));
}

TEST_CASE("one-block restriction is plain evaluation") {
    auto g = testsupport::rng(0x0B10C);
    for (int trial = 0; trial < 10; ++trial) {
        int d = uniform(g, 1, 2), k = uniform(g, 2, 3);
        StandardCycle Z = random_cycle(g, d, k, Alphabet());
        FormalVariety X = trial % 2 ? FormalVariety::projective_space(d)
                                    : FormalVariety(d, {Cell{{d}}, Cell{{d}}});
        CHECK(restrict_to_component(Z, SetPartition::one_block(k), {X}) == evaluate(Z, X));
    }
}

TEST_CASE("component extraction agrees with the closed-form restriction") {
    auto g = testsupport::rng(0x2E57);
    std::vector<FormalVariety> pool = {
        FormalVariety::projective_space(1), FormalVariety::projective_space(2),
        FormalVariety::product({1, 1}), FormalVariety(2, {Cell{{2}}, Cell{{1, 1}}})};
    int done = 0;
    while (done < 25) {
        int k = uniform(g, 2, 3);
        std::vector<SetPartition> parts = enumerate_partitions(k);
        const SetPartition& I = parts[uniform(g, 0, static_cast<int>(parts.size()) - 1)];
        int d = uniform(g, 1, 2);
        StandardCycle Z = random_cycle(g, d, k, Alphabet());
        std::vector<FormalVariety> xs;
        for (int t = 0; t < I.l(); ++t) {
            const FormalVariety& X = pool[uniform(g, 0, static_cast<int>(pool.size()) - 1)];
            if (X.d() != d) continue;
            xs.push_back(X);
        }
        if (static_cast<int>(xs.size()) != I.l()) continue;
        ++done;
        ChowElement direct = extract_component(evaluate(Z, union_of(xs)), I, xs);
        CHECK(direct == restrict_to_component(Z, I, xs));
    }
}

TEST_CASE("delta restriction repackages the refinement sum") {
    auto g = testsupport::rng(0xDE17A);
    for (int trial = 0; trial < 12; ++trial) {
        int d = uniform(g, 1, 2), k = uniform(g, 2, 3);
        StandardCycle Z = random_cycle(g, d, k, Alphabet());
        FormalVariety X = trial % 2 ? FormalVariety::projective_space(d)
                                    : FormalVariety(d, {Cell{{d}}, Cell{{d}}});
        std::vector<SetPartition> parts = enumerate_partitions(k);
        const SetPartition& I = parts[uniform(g, 0, static_cast<int>(parts.size()) - 1)];
        ChowElement restricted =
            restrict_to_component(Z, I, std::vector<FormalVariety>(I.l(), X));
        ChowElement repackaged = delta_restrict(restricted, I);
        // independently: evaluate the sub-table of partitions refining I
        StandardCycle W(d, k, Alphabet());
        for (auto& [J, P] : Z.table())
            if (refines(J, I)) W.set_entry(J, P);
        CHECK(repackaged == evaluate(W, X));
    }
}

TEST_CASE("delta restriction validates its input") {
    FormalVariety P1 = FormalVariety::projective_space(1);
    FormalVariety P1b(1, {Cell{{1}}, Cell{{1}}});
    ChowElement e(ProductSpace({P1, P1b}), Alphabet(), 2);
    CHECK_THROWS_AS(delta_restrict(e, SetPartition::one_block(2)), StructuralError);
    ChowElement ok(ProductSpace::power(P1, 2), Alphabet(), 2);
    CHECK_THROWS_AS(delta_restrict(ok, SetPartition::one_block(3)), StructuralError);
}

TEST_CASE("extraction validates the ambient power") {
    FormalVariety P1 = FormalVariety::projective_space(1);
    SetPartition I = SetPartition::one_block(2);
    ChowElement wrong(ProductSpace::power(P1, 2), Alphabet(), 2);
    FormalVariety u = P1.disjoint_union(P1);
    // value must live on the square of the union, and one variety per block
    CHECK_THROWS_AS(extract_component(wrong, I, {u}), StructuralError);
    ChowElement v(ProductSpace::power(u, 2), Alphabet(), 2);
    CHECK_THROWS_AS(extract_component(v, I, {P1, P1}), StructuralError);
    CHECK(extract_component(v, I, {u}).is_zero());
}
