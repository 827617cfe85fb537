// Acceptance harness: one line per criterion, exact arithmetic throughout,
// nonzero exit when anything fails. argv[1] = CLI binary, argv[2] = golden dir.

#include "chowlab/bundle.hpp"
#include "chowlab/cobordism.hpp"
#include "chowlab/decode.hpp"
#include "chowlab/diagonal.hpp"
#include "chowlab/grassmannian.hpp"
#include "chowlab/linalg.hpp"
#include "chowlab/pushforward.hpp"
#include "chowlab/triangular.hpp"

#include "test_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace chowlab;
using testsupport::random_cycle;
using testsupport::random_poly;
using testsupport::random_rational;
using testsupport::uniform;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << n << ": " << what << "\n";
    if (!ok) ++failures;
}

// ---- criterion 1: segre inverse ------------------------------------------

bool segre_inverse() {
    auto g = testsupport::rng(0xACC1);
    for (int trial = 0; trial < 200; ++trial) {
        Alphabet a = testsupport::random_alphabet(g, 3, 2);
        int T = uniform(g, 1, 6);
        GradedPoly tail = random_poly(g, a, T, 8, 1);
        BundleClass E(uniform(g, 1, 4), GradedPoly::constant(a, T, 1) + tail);
        if (segre(E) * E.total() != GradedPoly::constant(a, T, 1)) return false;
    }
    return true;
}

// ---- criterion 2: pushforward identity ------------------------------------

bool pushforward_identity() {
    for (int k = 1; k <= 4; ++k) {
        int T = 2 * k + 1;
        std::vector<std::pair<std::string, int>> vars;
        for (int i = 1; i <= k; ++i) vars.emplace_back("Y" + std::to_string(i), i);
        for (int i = 1; i <= k; ++i) vars.emplace_back("a" + std::to_string(i), i);
        vars.emplace_back("h", 1);
        Alphabet a(std::move(vars));
        int h_index = 2 * k;
        GradedPoly total = GradedPoly::constant(a, T, 1);
        for (int i = 1; i <= k; ++i) total = total + GradedPoly::variable(a, T, k + i - 1);
        BundleClass E(k, total);
        GradedPoly sE = segre(dual(E));
        GradedPoly C = GradedPoly::monomial(a, T, Monomial::variable(h_index, k), 1);
        for (int i = 1; i <= k; ++i) {
            Monomial m = Monomial::variable(i - 1);
            if (i < k) m = m.times(Monomial::variable(h_index, k - i));
            C = C + GradedPoly::monomial(a, T, m, 1);
        }
        for (int j = 0; j < k; ++j) {
            GradedPoly hj = GradedPoly::monomial(
                a, T, j == 0 ? Monomial() : Monomial::variable(h_index, j), 1);
            GradedPoly lhs = pushforward_h_polynomial(C * hj, h_index, E);
            GradedPoly rhs = sE.piece(j + 1);
            for (int i = 1; i <= k; ++i)
                if (j - i + 1 >= 0) rhs = rhs + GradedPoly::variable(a, T, i - 1) * sE.piece(j - i + 1);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// ---- criterion 3: triangular automorphisms --------------------------------

GradedPoly random_poly_over(std::mt19937_64& g, const Alphabet& a, const std::vector<int>& vars,
                            int T, int min_deg) {
    std::vector<std::pair<Monomial, Rational>> terms;
    int want = uniform(g, 0, 4);
    for (int t = 0; t < want; ++t) {
        std::vector<std::pair<int, int>> factors;
        long deg = 0;
        for (int tries = 0; tries < 5; ++tries) {
            int v = vars[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(vars.size()) - 1))];
            if (deg + a.weight(v) > T) continue;
            factors.emplace_back(v, 1);
            deg += a.weight(v);
            if (uniform(g, 0, 1)) break;
        }
        if (deg < min_deg) continue;
        terms.emplace_back(Monomial::from_factors(std::move(factors)), random_rational(g));
    }
    return GradedPoly::from_terms(a, T, std::move(terms));
}

bool triangular_automorphisms() {
    auto g = testsupport::rng(0xACC3);
    for (int trial = 0; trial < 100; ++trial) {
        int nb = uniform(g, 1, 2);
        int q = uniform(g, 1, 3);
        int T = uniform(g, 3, 5);
        std::vector<std::pair<std::string, int>> vars;
        for (int i = 0; i < nb; ++i) vars.emplace_back("b" + std::to_string(i + 1), i + 1);
        for (int j = 0; j < q; ++j) vars.emplace_back("y" + std::to_string(j + 1), uniform(g, 1, 2));
        Alphabet a(std::move(vars));
        std::vector<int> targets, visible;
        for (int i = 0; i < nb; ++i) visible.push_back(i);
        std::vector<Rational> mu;
        std::vector<GradedPoly> tails;
        for (int j = 0; j < q; ++j) {
            int yj = nb + j;
            targets.push_back(yj);
            Rational m = random_rational(g);
            if (m == 0) m = rational(2, 3);
            mu.push_back(m);
            tails.push_back(random_poly_over(g, a, visible, T, a.weight(yj)));
            visible.push_back(yj);
        }
        TriangularSystem sys(a, T, targets, mu, tails);
        GradedPoly p = random_poly(g, a, T, 6);
        if (apply(invert(sys), apply(sys, p)) != p) return false;
        if (apply(sys, apply(invert(sys), p)) != p) return false;

        // unit-leading system: the computed root must kill every equation
        std::vector<GradedPoly> system;
        std::vector<int> earlier;
        for (int i = 0; i < nb; ++i) earlier.push_back(i);
        for (int j = 0; j < q; ++j) {
            int yj = nb + j;
            GradedPoly G = GradedPoly::variable(a, T, yj) + random_poly_over(g, a, earlier, T, 0);
            system.push_back(G);
            earlier.push_back(yj);
        }
        std::vector<GradedPoly> roots = triangular_root(system, targets);
        std::vector<std::optional<GradedPoly>> images(static_cast<std::size_t>(a.size()));
        for (int i = 0; i < nb; ++i) images[static_cast<std::size_t>(i)] = GradedPoly::variable(a, T, i);
        for (int j = 0; j < q; ++j) images[static_cast<std::size_t>(nb + j)] = roots[static_cast<std::size_t>(j)];
        for (const GradedPoly& G : system)
            if (!substitute(G, a, T, images).is_zero()) return false;
    }
    return true;
}

// ---- criterion 4: cobordism nondegeneracy ---------------------------------
// Independent oracle: dense integer polynomials over per-slot hyperplane
// exponents, binomial expansion of prod_j (1+h_j)^{n_j+1}, no library code.

using Expo = std::vector<int>;
using DensePoly = std::map<Expo, long>;

long dp_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

DensePoly dp_mul(const DensePoly& a, const DensePoly& b, const std::vector<int>& dims) {
    DensePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            bool ok = true;
            for (std::size_t j = 0; j < e.size(); ++j) {
                e[j] = ea[j] + eb[j];
                if (e[j] > dims[j]) { ok = false; break; }
            }
            if (ok) out[e] += ca * cb;
        }
    return out;
}

long oracle_chern_number(const std::vector<int>& dims, const Monomial& J) {
    std::size_t s = dims.size();
    DensePoly total{{Expo(s, 0), 1}};
    for (std::size_t j = 0; j < s; ++j) {
        DensePoly f;
        for (int i = 0; i <= dims[j]; ++i) {
            Expo e(s, 0);
            e[j] = i;
            f[e] = dp_binom(dims[j] + 1, i);
        }
        total = dp_mul(total, f, dims);
    }
    std::vector<DensePoly> piece(static_cast<std::size_t>(64));
    int top = 0;
    for (int n : dims) top += n;
    for (const auto& [e, c] : total) {
        int deg = 0;
        for (int x : e) deg += x;
        piece[static_cast<std::size_t>(deg)][e] = c;
    }
    DensePoly acc{{Expo(s, 0), 1}};
    for (const auto& [var, exp] : J.factors())
        for (int r = 0; r < exp; ++r) acc = dp_mul(acc, piece[static_cast<std::size_t>(var + 1)], dims);
    auto it = acc.find(Expo(dims.begin(), dims.end()));
    return it == acc.end() ? 0 : it->second;
}

int partition_count(int d, int max_part) {
    if (d == 0) return 1;
    int n = 0;
    for (int p = std::min(d, max_part); p >= 1; --p) n += partition_count(d - p, p);
    return n;
}

bool cobordism_nondegeneracy() {
    for (int d = 1; d <= 4; ++d) {
        ChernNumberMatrix m = chern_number_matrix(d);
        int pd = partition_count(d, d);
        if (m.entries.rows() != pd || m.entries.cols() != pd) return false;
        if (rank_exact(m.entries) != pd) return false;
        for (int i = 0; i < pd; ++i) {
            const std::vector<int>& dims = m.rows[static_cast<std::size_t>(i)].cells()[0].dims;
            for (int j = 0; j < pd; ++j) {
                long want = oracle_chern_number(dims, m.cols[static_cast<std::size_t>(j)]);
                if (m.entries.at(i, j) != Rational(want)) return false;
            }
        }
    }
    ChernNumberMatrix m2 = chern_number_matrix(2);
    long frozen[2][2] = {{9, 3}, {8, 4}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (m2.entries.at(i, j) != Rational(frozen[i][j])) return false;
    return determinant_exact(m2.entries) == Rational(12);
}

// ---- criterion 5: twisted normal-bundle triangularity ----------------------

bool u_prime_triangularity() {
    struct Case {
        int d, N, l;
    };
    for (Case c : {Case{1, 4, 3}, Case{2, 7, 2}, Case{2, 7, 3}}) {
        UPrimeResult r;
        try {
            r = compute_u_prime(c.d, c.N, c.l);
        } catch (const DegeneracyError&) {
            return false;
        }
        GrassmannianModel m = make_grassmannian(c.d, c.N);
        if (r.mu[0] != Rational(c.N - m.kd * c.l)) return false;
        for (int j = 0; j < c.d; ++j) {
            if (r.mu[static_cast<std::size_t>(j)] == 0) return false;
            GradedPoly lead = GradedPoly::monomial(r.alphabet, r.polys[static_cast<std::size_t>(j)].truncation(),
                                                   Monomial::variable(c.d + j),
                                                   r.mu[static_cast<std::size_t>(j)]);
            GradedPoly tail = r.polys[static_cast<std::size_t>(j)] - lead;
            for (const Term& t : tail.terms())
                for (const auto& [var, exp] : t.mono.factors())
                    if (var >= c.d + j) return false; // only earlier primed variables allowed
        }
    }
    try {
        compute_u_prime(1, 4, 2);
        return false;
    } catch (const UPrimeDegeneracyError& e) {
        return e.mu() == std::vector<Rational>{Rational(0)};
    } catch (...) {
        return false;
    }
}

// ---- criterion 6: diagonal calculus ----------------------------------------

ChowElement random_element(std::mt19937_64& g, const ProductSpace& space, const Alphabet& coeff,
                           int T, int gen_T) {
    ChowElement e(space, coeff, T);
    for (auto& tuple : cell_tuples(space)) {
        if (uniform(g, 0, 3) == 0) continue;
        TupleFrame f = e.frame(tuple);
        e.set_component(tuple, random_poly(g, f.alphabet, gen_T, 5).retruncate(T));
    }
    return e;
}

bool diagonal_calculus() {
    FormalVariety P1 = FormalVariety::projective_space(1);
    ChowElement one(ProductSpace::power(P1, 1), Alphabet(), 2);
    one.set_component({0}, GradedPoly::constant(one.frame({0}).alphabet, 2, 1));
    ChowElement diag = diagonal_pushforward(P1, SetPartition::one_block(2), one);
    TupleFrame f = diag.frame({0, 0});
    if (diag.component({0, 0}) != f.h(0, 0) + f.h(1, 0)) return false;

    auto g = testsupport::rng(0xACC6);
    std::vector<FormalVariety> pool = {
        FormalVariety::projective_space(1),
        FormalVariety::projective_space(2),
        FormalVariety::projective_space(3),
        FormalVariety::product({1, 2}),
        FormalVariety::product({1, 1, 1}),
        FormalVariety(2, {Cell{{2}}, Cell{{1, 1}}}),
        FormalVariety(3, {Cell{{3}}, Cell{{1, 2}}}),
    };
    for (int trial = 0; trial < 100; ++trial) {
        const FormalVariety& X = pool[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(pool.size()) - 1))];
        int k = uniform(g, 2, 3);
        std::vector<SetPartition> parts = enumerate_partitions(k);
        const SetPartition& I = parts[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(parts.size()) - 1))];
        Alphabet coeff = trial % 4 == 0 ? Alphabet({{"y", 1}}) : Alphabet();
        int gen = k * X.d();
        int T = 3 * gen;
        ChowElement alpha = random_element(g, ProductSpace::power(X, I.l()), coeff, T, gen);
        ChowElement beta = random_element(g, ProductSpace::power(X, k), coeff, T, gen);
        GradedPoly lhs = (diagonal_pushforward(X, I, alpha) * beta).integrate();
        GradedPoly rhs = (alpha * diagonal_pullback(I, beta)).integrate();
        if (lhs != rhs) return false;
    }
    return true;
}

// ---- criterion 7: component restriction ------------------------------------

bool restriction_consistency() {
    auto g = testsupport::rng(0xACC7);
    std::vector<FormalVariety> pool = {
        FormalVariety::projective_space(1), FormalVariety::projective_space(2),
        FormalVariety::product({1, 1}), FormalVariety(1, {Cell{{1}}, Cell{{1}}}),
        FormalVariety(2, {Cell{{2}}, Cell{{1, 1}}})};
    int done = 0;
    while (done < 50) {
        int k = uniform(g, 2, 3);
        int d = uniform(g, 1, 2);
        std::vector<SetPartition> parts = enumerate_partitions(k);
        const SetPartition& I = parts[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(parts.size()) - 1))];
        StandardCycle Z = random_cycle(g, d, k, Alphabet());
        std::vector<FormalVariety> xs;
        while (static_cast<int>(xs.size()) < I.l()) {
            const FormalVariety& X = pool[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(pool.size()) - 1))];
            if (X.d() == d) xs.push_back(X);
        }
        ++done;
        FormalVariety u = xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i) u = u.disjoint_union(xs[i]);
        ChowElement direct = extract_component(evaluate(Z, u), I, xs);
        if (direct != restrict_to_component(Z, I, xs)) return false;

        // constant-family delta restriction equals evaluating the sub-table
        const FormalVariety& X = xs[0];
        ChowElement packed =
            delta_restrict(restrict_to_component(Z, I, std::vector<FormalVariety>(
                                                           static_cast<std::size_t>(I.l()), X)),
                           I);
        StandardCycle W(d, k, Alphabet());
        for (auto& [J, P] : Z.table())
            if (refines(J, I)) W.set_entry(J, P);
        if (packed != evaluate(W, X)) return false;
    }
    return true;
}

// ---- criterion 8: decode round trip ----------------------------------------

bool decode_round_trip() {
    auto g = testsupport::rng(0xACC8);
    for (int d = 1; d <= 2; ++d)
        for (int k = 1; k <= 3; ++k) {
            StandardCycle zero(d, k, Alphabet());
            StandardCycle back = decode(
                [&](const FormalVariety& X) { return evaluate(zero, X); }, d, k);
            if (!back.table().empty()) return false;
        }
    Alphabet none, y1({{"y", 1}}), y2({{"u", 1}, {"v", 2}});
    for (int trial = 0; trial < 50; ++trial) {
        int d = uniform(g, 1, 2);
        int k = uniform(g, 1, 3);
        const Alphabet& coeff = trial % 5 == 0 ? y2 : (trial % 5 == 1 ? y1 : none);
        if (d == 2 && k == 3 && coeff.size() > 0 && trial % 2) k = 2; // trim the heaviest mix
        StandardCycle Z = random_cycle(g, d, k, coeff);
        StandardCycle back =
            decode([&](const FormalVariety& X) { return evaluate(Z, X); }, d, k, coeff);
        if (back != Z) return false;
    }
    return true;
}

// ---- criterion 9: CLI golden files -----------------------------------------

std::string slurp(const std::string& path, bool* ok = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (ok) *ok = static_cast<bool>(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool run_cli(const std::string& cli, const std::string& args, int expect_exit,
             const std::string& golden_path, bool compare_stderr) {
    std::string out = "acceptance_cli_stdout.txt", err = "acceptance_cli_stderr.txt";
    std::string cmd = "\"" + cli + "\" " + args + " > " + out + " 2> " + err;
    int rc = std::system(cmd.c_str());
    int exit_code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    bool have = false;
    std::string golden = slurp(golden_path, &have);
    std::string got = slurp(compare_stderr ? err : out);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return have && exit_code == expect_exit && got == golden;
}

bool cli_determinism(const std::string& cli, const std::string& golden_dir) {
    bool ok = run_cli(cli, "cobordism-matrix --dim 2", 0, golden_dir + "/cobordism_matrix_dim2.json", false);
    ok = run_cli(cli, "chern-numbers --dim 1", 0, golden_dir + "/chern_numbers_dim1.json", false) && ok;
    ok = run_cli(cli, "u-prime --dim 1 --ambient 4 --degree 2", 1,
                 golden_dir + "/u_prime_degenerate.json", true) &&
         ok;
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: chowlab-acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    report(1, "total Segre class inverts the total Chern class (200 random bundles)", segre_inverse());
    report(2, "hyperplane pushforward identity, term by term, ranks 1..4", pushforward_identity());
    report(3, "triangular substitutions invert exactly and roots vanish (100 systems)",
           triangular_automorphisms());
    report(4, "Chern-number matrices are nonsingular and match the binomial oracle (d <= 4)",
           cobordism_nondegeneracy());
    report(5, "twisted normal-bundle systems are triangular with the predicted leading terms",
           u_prime_triangularity());
    report(6, "diagonal projection formula on 100 random inputs plus the Kunneth class",
           diagonal_calculus());
    report(7, "component restriction: direct extraction equals the refinement sum (50 cycles)",
           restriction_consistency());
    report(8, "decode(evaluate(Z)) = Z for 50 random cycles and the zero oracle",
           decode_round_trip());
    report(9, "CLI output is byte-stable against golden files", cli_determinism(argv[1], argv[2]));
    return failures == 0 ? 0 : 1;
}
