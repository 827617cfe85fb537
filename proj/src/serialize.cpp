#include "chowlab/serialize.hpp"

#include "chowlab/errors.hpp"

#include <json.hpp>

#include <cctype>

namespace chowlab {

using nlohmann::json;

namespace {

json alphabet_json(const Alphabet& a) {
    json out = json::array();
    for (const auto& [name, weight] : a.vars()) out.push_back(json::array({name, weight}));
    return out;
}

Alphabet alphabet_from(const json& j) {
    std::vector<std::pair<std::string, int>> vars;
    for (const auto& v : j) vars.emplace_back(v.at(0).get<std::string>(), v.at(1).get<int>());
    return Alphabet(std::move(vars));
}

json poly_json(const GradedPoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : t.mono.factors()) mono.push_back(json::array({v, e}));
        terms.push_back(json{{"coeff", to_string(t.coeff)}, {"monomial", mono}});
    }
    return json{{"alphabet", alphabet_json(p.alphabet())},
                {"terms", terms},
                {"truncation", p.truncation()}};
}

GradedPoly poly_from(const json& j) {
    Alphabet a = alphabet_from(j.at("alphabet"));
    int T = j.at("truncation").get<int>();
    if (T < 0) throw StructuralError("poly: negative truncation");
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& t : j.at("terms")) {
        std::vector<std::pair<int, int>> factors;
        for (const auto& f : t.at("monomial"))
            factors.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
        terms.emplace_back(Monomial::from_factors(std::move(factors)),
                           parse_rational(t.at("coeff").get<std::string>()));
    }
    return GradedPoly::from_terms(a, T, std::move(terms));
}

json element_json(const ChowElement& e) {
    json space = json::array();
    for (const auto& f : e.space().factors()) space.push_back(f.spec_string());
    json comps = json::array();
    for (const auto& [tuple, p] : e.components())
        comps.push_back(json{{"poly", poly_json(p)}, {"tuple", tuple}});
    return json{{"coefficient_alphabet", alphabet_json(e.coeff_alphabet())},
                {"components", comps},
                {"space", space},
                {"truncation", e.truncation()}};
}

ChowElement element_from(const json& j) {
    std::vector<FormalVariety> factors;
    for (const auto& s : j.at("space")) factors.push_back(parse_variety_spec(s.get<std::string>()));
    ChowElement out(ProductSpace(std::move(factors)), alphabet_from(j.at("coefficient_alphabet")),
                    j.at("truncation").get<int>());
    for (const auto& c : j.at("components")) {
        std::vector<int> tuple = c.at("tuple").get<std::vector<int>>();
        out.set_component(tuple, poly_from(c.at("poly")));
    }
    return out;
}

json cycle_json(const StandardCycle& z) {
    json table = json::array();
    for (const auto& [I, P] : z.table()) {
        json blocks = json::array();
        for (const auto& b : I.blocks()) blocks.push_back(b);
        table.push_back(json{{"partition", blocks}, {"poly", poly_json(P)}});
    }
    return json{{"coefficient_alphabet", alphabet_json(z.coeff_alphabet())},
                {"d", z.d()},
                {"k", z.k()},
                {"table", table}};
}

StandardCycle cycle_from(const json& j) {
    StandardCycle z(j.at("d").get<int>(), j.at("k").get<int>(),
                    alphabet_from(j.at("coefficient_alphabet")));
    for (const auto& row : j.at("table")) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : row.at("partition")) blocks.push_back(b.get<std::vector<int>>());
        z.set_entry(SetPartition(z.k(), std::move(blocks)), poly_from(row.at("poly")));
    }
    return z;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw StructuralError("malformed JSON document");
    return j;
}

template <typename F> auto guarded(const F& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed document: ") + e.what());
    }
}

} // namespace

std::string to_json(const GradedPoly& p) { return poly_json(p).dump(2); }
std::string to_json(const ChowElement& e) { return element_json(e).dump(2); }
std::string to_json(const StandardCycle& z) { return cycle_json(z).dump(2); }

GradedPoly parse_graded_poly(const std::string& text) {
    return guarded([&] { return poly_from(parse_document(text)); });
}

ChowElement parse_chow_element(const std::string& text) {
    return guarded([&] { return element_from(parse_document(text)); });
}

StandardCycle parse_standard_cycle(const std::string& text) {
    return guarded([&] { return cycle_from(parse_document(text)); });
}

FormalVariety parse_variety_spec(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw StructuralError("variety spec: empty");
    std::vector<Cell> cells;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string cell_text = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (cell_text.empty()) throw StructuralError("variety spec: empty cell");
        Cell cell;
        std::size_t cp = 0;
        while (cp <= cell_text.size()) {
            std::size_t x = cell_text.find('x', cp);
            std::string factor = cell_text.substr(cp, x == std::string::npos ? std::string::npos : x - cp);
            if (factor.size() < 2 || factor[0] != 'P')
                throw StructuralError("variety spec: bad factor '" + factor + "'");
            int n = 0;
            for (std::size_t i = 1; i < factor.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(factor[i])))
                    throw StructuralError("variety spec: bad factor '" + factor + "'");
                n = n * 10 + (factor[i] - '0');
            }
            cell.dims.push_back(n);
            if (x == std::string::npos) break;
            cp = x + 1;
        }
        cells.push_back(std::move(cell));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    int d = cells.front().dim();
    return FormalVariety(d, std::move(cells));
}

} // namespace chowlab
