#include "chowlab/bundle.hpp"
#include "chowlab/cobordism.hpp"
#include "chowlab/cycle.hpp"
#include "chowlab/decode.hpp"
#include "chowlab/diagonal.hpp"
#include "chowlab/errors.hpp"
#include "chowlab/grassmannian.hpp"
#include "chowlab/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace chowlab;
using nlohmann::json;

namespace {

void emit_error(const json& j) { std::cerr << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_chern_numbers(int dim) {
    json out = json::object();
    Alphabet chern = chern_alphabet(dim);
    for (const auto& X : cobordism_basis(dim)) {
        json row = json::object();
        for (const auto& J : degree_monomials(dim, dim))
            row[J.str(chern)] = to_string(chern_number(X, J));
        out[X.spec_string()] = row;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_cobordism_matrix(int dim, const std::string& format) {
    ChernNumberMatrix m = chern_number_matrix(dim);
    Alphabet chern = chern_alphabet(dim);
    if (format == "csv") {
        std::string header;
        for (std::size_t j = 0; j < m.cols.size(); ++j) {
            if (j) header += ",";
            header += m.cols[j].str(chern);
        }
        std::cout << header << "\n";
        for (int i = 0; i < m.entries.rows(); ++i) {
            std::string line;
            for (int j = 0; j < m.entries.cols(); ++j) {
                if (j) line += ",";
                line += to_string(m.entries.at(i, j));
            }
            std::cout << line << "\n";
        }
        return 0;
    }
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& X : m.rows) rows.push_back(X.spec_string());
    for (const auto& J : m.cols) cols.push_back(J.str(chern));
    for (int i = 0; i < m.entries.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.entries.cols(); ++j) row.push_back(to_string(m.entries.at(i, j)));
        entries.push_back(row);
    }
    json out{{"cols", cols},
             {"determinant", to_string(determinant_exact(m.entries))},
             {"dim", dim},
             {"entries", entries},
             {"rank", m.entries.rows()},
             {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_u_prime(int d, int N, int l) {
    UPrimeResult r = compute_u_prime(d, N, l);
    json mu = json::array(), polys = json::array();
    for (const auto& q : r.mu) mu.push_back(to_string(q));
    for (const auto& p : r.polys) polys.push_back(p.str());
    json out{{"N", r.N}, {"d", r.d}, {"degree", r.l}, {"mu", mu}, {"u_prime", polys}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_evaluate(const std::string& cycle_path, const std::string& variety_spec) {
    StandardCycle Z = parse_standard_cycle(read_file(cycle_path));
    FormalVariety X = parse_variety_spec(variety_spec);
    std::cout << to_json(evaluate(Z, X)) << "\n";
    return 0;
}

int run_decode(const std::string& oracle_path, int d, int k) {
    json doc = json::parse(read_file(oracle_path), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw StructuralError("malformed JSON document");
    Alphabet coeff;
    std::map<std::string, ChowElement> values;
    try {
        std::vector<std::pair<std::string, int>> vars;
        for (const auto& v : doc.at("coefficient_alphabet"))
            vars.emplace_back(v.at(0).get<std::string>(), v.at(1).get<int>());
        if (!vars.empty()) coeff = Alphabet(std::move(vars));
        for (const auto& q : doc.at("queries")) {
            FormalVariety X = parse_variety_spec(q.at("variety").get<std::string>());
            values.emplace(X.spec_string(), parse_chow_element(q.at("value").dump()));
        }
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed oracle file: ") + e.what());
    }

    std::vector<std::string> missing;
    for (const auto& spec : decode_query_plan(d, k))
        if (!values.count(spec)) missing.push_back(spec);
    if (!missing.empty()) {
        emit_error({{"kind", "missing-queries"}, {"missing", missing}});
        return 2;
    }

    EvaluationOracle oracle = [&](const FormalVariety& X) { return values.at(X.spec_string()); };
    std::cout << to_json(decode(oracle, d, k, coeff)) << "\n";
    return 0;
}

// ---- verify suites: small self-contained exact checks --------------------

struct SuiteRun {
    bool ok = true;
    void check(bool cond, const std::string& name) {
        std::cout << (cond ? "ok " : "FAIL ") << name << "\n";
        ok = ok && cond;
    }
};

void suite_ring(SuiteRun& s) {
    Alphabet h({{"h", 1}});
    GradedPoly a = GradedPoly::from_terms(
        h, 2, {{Monomial(), 1}, {Monomial::variable(0), 3}, {Monomial::variable(0, 2), 3}});
    GradedPoly b = GradedPoly::from_terms(
        h, 2, {{Monomial(), 1}, {Monomial::variable(0), -3}, {Monomial::variable(0, 2), 6}});
    s.check(a * b == GradedPoly::constant(h, 2, 1), "ring/unit-product");

    GradedPoly one_minus = GradedPoly::constant(h, 6, 1) - GradedPoly::variable(h, 6, 0);
    GradedPoly geom = GradedPoly::zero(h, 6);
    for (int m = 0; m <= 6; ++m) geom = geom + GradedPoly::monomial(h, 6, Monomial::variable(0, m));
    s.check(one_minus * geom == GradedPoly::constant(h, 6, 1), "ring/geometric-series");

    Alphabet xy({{"x", 1}, {"y", 1}});
    GradedPoly y2 = GradedPoly::monomial(xy, 3, Monomial::variable(1, 2));
    GradedPoly img = GradedPoly::variable(xy, 3, 0) + GradedPoly::monomial(xy, 3, Monomial::variable(0, 2));
    GradedPoly expect = GradedPoly::from_terms(
        xy, 3, {{Monomial::variable(0, 2), 1}, {Monomial::variable(0, 3), 2}});
    s.check(substitute(y2, xy, 3, {std::nullopt, img}) == expect, "ring/substitution");
}

void suite_chern(SuiteRun& s) {
    Alphabet h({{"h", 1}});
    GradedPoly total = GradedPoly::from_terms(
        h, 4, {{Monomial(), 1}, {Monomial::variable(0), 3}, {Monomial::variable(0, 2), 3}});
    BundleClass E(2, total);
    s.check(segre(E) * E.total() == GradedPoly::constant(h, 4, 1), "chern/segre-inverse");
    s.check(dual(dual(E)).total() == E.total(), "chern/dual-involution");
    GradedPoly t = GradedPoly::variable(h, 4, 0);
    s.check(twist(twist(E, t), -t).total() == E.total(), "chern/twist-involution");
    s.check(class_from_character(chern_character(E), 2).total() == E.total(),
            "chern/character-round-trip");
}

void suite_cobordism(SuiteRun& s) {
    ChernNumberMatrix m = chern_number_matrix(2);
    bool entries_ok = m.entries.at(0, 0) == 9 && m.entries.at(0, 1) == 3 &&
                      m.entries.at(1, 0) == 8 && m.entries.at(1, 1) == 4;
    s.check(entries_ok, "cobordism/matrix-d2");
    s.check(determinant_exact(m.entries) == 12, "cobordism/det-d2");
    s.check(chern_number(FormalVariety::projective_space(1), Monomial::variable(0)) == 2,
            "cobordism/p1-degree");
    s.check(static_cast<int>(chern_number_matrix(3).rows.size()) == 3, "cobordism/rank-d3");
}

void suite_partitions(SuiteRun& s) {
    const long bell[] = {1, 2, 5, 15, 52};
    bool counts = true;
    for (int k = 1; k <= 5; ++k)
        counts = counts && static_cast<long>(enumerate_partitions(k).size()) == bell[k - 1];
    s.check(counts, "partitions/bell-counts");

    FormalVariety P1 = FormalVariety::projective_space(1);
    SetPartition I = SetPartition::one_block(2);
    ChowElement one = ChowElement::zero(ProductSpace::power(P1, 1), Alphabet(), 2);
    one.set_component({0}, GradedPoly::constant(one.frame({0}).alphabet, 2, 1));
    ChowElement pushed = diagonal_pushforward(P1, I, one);
    TupleFrame f = pushed.frame({0, 0});
    GradedPoly expect = f.h(0, 0) + f.h(1, 0);
    s.check(pushed.component({0, 0}) == expect, "partitions/kunneth-diagonal");

    // projection formula on P2, k = 2
    FormalVariety P2 = FormalVariety::projective_space(2);
    ChowElement alpha = ChowElement::zero(ProductSpace::power(P2, 1), Alphabet(), 4);
    alpha.set_component({0}, alpha.frame({0}).h(0, 0));
    ChowElement beta = ChowElement::zero(ProductSpace::power(P2, 2), Alphabet(), 4);
    TupleFrame g = beta.frame({0, 0});
    beta.set_component({0, 0}, g.h(0, 0) * g.h(1, 0) * g.h(1, 0));
    GradedPoly lhs = (diagonal_pushforward(P2, I, alpha) * beta).integrate();
    GradedPoly rhs = (alpha * diagonal_pullback(I, beta)).integrate();
    s.check(lhs == rhs, "partitions/projection-formula");
}

void suite_cycles(SuiteRun& s) {
    // frozen evaluation example
    StandardCycle Z(1, 2, Alphabet());
    Alphabet one_block = cycle_alphabet(1, 1, Alphabet());
    Z.set_entry(SetPartition::one_block(2), GradedPoly::variable(one_block, 1, 0));
    FormalVariety P1 = FormalVariety::projective_space(1);
    ChowElement v = evaluate(Z, P1);
    TupleFrame f = v.frame({0, 0});
    s.check(v.component({0, 0}) == f.h(0, 0) * f.h(1, 0) * Rational(2), "cycles/frozen-evaluate");

    // decode round trip on a two-entry cycle
    Alphabet two_blocks = cycle_alphabet(1, 2, Alphabet());
    GradedPoly p_sing = GradedPoly::variable(two_blocks, 2, 0) * GradedPoly::variable(two_blocks, 2, 1);
    StandardCycle Z2(1, 2, Alphabet());
    Z2.set_entry(SetPartition::singletons(2), p_sing);
    Z2.set_entry(SetPartition::one_block(2),
                 GradedPoly::constant(one_block, 1, 3) + GradedPoly::variable(one_block, 1, 0));
    EvaluationOracle oracle = [&](const FormalVariety& X) { return evaluate(Z2, X); };
    s.check(decode(oracle, 1, 2) == Z2, "cycles/decode-round-trip");

    s.check(verify_vanishing(StandardCycle(1, 2, Alphabet())).vanishes, "cycles/vanishing-zero");
    VanishingReport r = verify_vanishing(Z2);
    s.check(!r.vanishes && r.witness.has_value(), "cycles/vanishing-witness");
}

int run_verify(const std::string& suite) {
    SuiteRun s;
    bool known = false;
    if (suite == "ring" || suite == "all") { suite_ring(s); known = true; }
    if (suite == "chern" || suite == "all") { suite_chern(s); known = true; }
    if (suite == "cobordism" || suite == "all") { suite_cobordism(s); known = true; }
    if (suite == "partitions" || suite == "all") { suite_partitions(s); known = true; }
    if (suite == "cycles" || suite == "all") { suite_cycles(s); known = true; }
    if (!known) throw StructuralError("unknown suite: " + suite +
                                      " (expected ring|chern|cobordism|partitions|cycles|all)");
    std::cout << (s.ok ? "PASS" : "FAIL") << " " << suite << "\n";
    return s.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chowlab: exact Chern-class calculus and universal-cycle decoding"};
    app.require_subcommand(1);

    int dim = 1, ambient = 0, degree = 0, power = 1;
    std::string format = "json", cycle_path, variety_spec, oracle_path, suite;

    CLI::App* cn = app.add_subcommand("chern-numbers", "Chern numbers of the cobordism basis");
    cn->add_option("--dim", dim, "variety dimension")->required();

    CLI::App* cm = app.add_subcommand("cobordism-matrix", "Chern-number matrix with rank certificate");
    cm->add_option("--dim", dim, "variety dimension")->required();
    cm->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* up = app.add_subcommand("u-prime", "twisted normal-bundle classes on a Grassmannian cut");
    up->add_option("--dim", dim, "subvariety dimension d")->required();
    up->add_option("--ambient", ambient, "ambient parameter N of G(d, N)")->required();
    up->add_option("--degree", degree, "twist degree l")->required();

    CLI::App* ev = app.add_subcommand("evaluate", "evaluate a standard cycle on a test variety");
    ev->add_option("--cycle", cycle_path, "StandardCycle JSON file")->required();
    ev->add_option("--variety", variety_spec, "variety spec, e.g. 'P2 + P1xP1'")->required();

    CLI::App* de = app.add_subcommand("decode", "decode an evaluation oracle into a standard cycle");
    de->add_option("--oracle", oracle_path, "oracle JSON file")->required();
    de->add_option("--dim", dim, "variety dimension d")->required();
    de->add_option("--power", power, "power k")->required();

    CLI::App* ve = app.add_subcommand("verify", "run a named invariant suite");
    ve->add_option("--suite", suite, "ring|chern|cobordism|partitions|cycles|all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error({{"kind", "malformed"}, {"message", e.what()}});
        return 2;
    }

    try {
        if (cn->parsed()) return run_chern_numbers(dim);
        if (cm->parsed()) return run_cobordism_matrix(dim, format);
        if (up->parsed()) return run_u_prime(dim, ambient, degree);
        if (ev->parsed()) return run_evaluate(cycle_path, variety_spec);
        if (de->parsed()) return run_decode(oracle_path, dim, power);
        if (ve->parsed()) return run_verify(suite);
        emit_error({{"kind", "malformed"}, {"message", "no subcommand"}});
        return 2;
    } catch (const UPrimeDegeneracyError& e) {
        json mu = json::array();
        for (const auto& q : e.mu()) mu.push_back(to_string(q));
        emit_error({{"kind", "degenerate"}, {"mu", mu}});
        return 1;
    } catch (const NotStandardError& e) {
        emit_error({{"kind", "not-standard"}, {"message", e.what()}});
        return 1;
    } catch (const DegeneracyError& e) {
        emit_error({{"kind", "degenerate"}, {"message", e.what()}});
        return 1;
    } catch (const StructuralError& e) {
        emit_error({{"kind", "malformed"}, {"message", e.what()}});
        return 2;
    } catch (const InternalError& e) {
        emit_error({{"kind", "internal"}, {"message", e.what()}});
        return 1;
    }
}
