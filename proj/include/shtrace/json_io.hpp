#pragma once

// JSON encoding of the library's values. Rationals are strings "n" or "n/m";
// elements of a quadratic extension are {"a", "b", "d"}.

#include "shtrace/chardist.hpp"

#include <nlohmann/json.hpp>

namespace shtrace {

using json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline json to_json(const Rational& x) { return to_string(x); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline json to_json(const FieldElement& x) {
    if (x.is_rational()) return to_json(x.a());
    return json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", to_string(x.d())}};
}

inline FieldElement field_element_from_json(const json& j) {
    if (!j.is_object()) return rational_from_json(j);
    return FieldElement::quadratic(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                                   rational_from_json(j.at("d")));
}

inline json to_json(const FieldParams& params) { return json{{"p", params.p}, {"f", params.f}, {"e", params.e}}; }

inline FieldParams field_params_from_json(const json& j) {
    return FieldParams(j.at("p").get<std::int64_t>(), j.at("f").get<int>(), j.at("e").get<int>());
}

inline json to_json(const Cochar& v) { return json(v.entries()); }

inline Cochar cochar_from_json(const json& j) { return Cochar(j.get<std::vector<long long>>()); }

inline json to_json(const RationalCochar& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline RationalCochar rational_cochar_from_json(const json& j) {
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return RationalCochar(std::move(v));
}

inline json to_json(const KottwitzPoint& b) { return json{{"nu", to_json(b.nu)}, {"kappa", b.kappa}}; }

inline KottwitzPoint kottwitz_point_from_json(const json& j) {
    return {rational_cochar_from_json(j.at("nu")), j.at("kappa").get<std::vector<long long>>()};
}

inline json to_json(const WeightMultiplicityTable& table) {
    json weights = json::array();
    for (const auto& [lambda, m] : table.entries()) weights.push_back(json{{"lambda", to_json(lambda)}, {"multiplicity", m}});
    return json{{"mu", to_json(table.mu())}, {"weights", weights}};
}

inline WeightMultiplicityTable weight_table_from_json(const json& j) {
    std::map<Cochar, long long> entries;
    for (const auto& w : j.at("weights")) entries[cochar_from_json(w.at("lambda"))] = w.at("multiplicity").get<long long>();
    return {cochar_from_json(j.at("mu")), std::move(entries)};
}

inline json to_json(const std::vector<FieldElement>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

inline std::vector<FieldElement> field_elements_from_json(const json& j) {
    std::vector<FieldElement> out;
    for (const auto& x : j) out.push_back(field_element_from_json(x));
    return out;
}

inline json to_json(const SRElement& g) {
    return json{{"kind", to_string(g.kind())}, {"eigenvalues", to_json(g.eigenvalues())}};
}

/// Quadratic elements need the field to confirm that sqrt(d) lies outside F.
inline SRElement sr_element_from_json(const json& j, const FieldParams& params) {
    auto ev = field_elements_from_json(j.at("eigenvalues"));
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "split") return SRElement::split(std::move(ev));
    if (kind != "quadratic" || ev.size() != 2 || ev[0].is_rational())
        throw std::invalid_argument("malformed strongly regular element: " + j.dump());
    return SRElement::quadratic(ev[0].a(), ev[0].b(), Rational(ev[0].d()), params);
}

inline json to_json(const GbElement& t) { return json{{"b", to_json(t.b)}, {"slots", to_json(t.slots)}}; }

inline GbElement gb_element_from_json(const json& j) {
    return {kottwitz_point_from_json(j.at("b")), field_elements_from_json(j.at("slots"))};
}

inline json to_json(const RelTriple& r) {
    return json{{"g", to_json(r.g)},
                {"g_prime", to_json(r.g_prime.element)},
                {"slot_to_eigenvalue", r.g_prime.slot_to_eigenvalue},
                {"lambda", to_json(r.lambda)}};
}

inline RelTriple rel_triple_from_json(const json& j, const FieldParams& params) {
    RelTriple r{sr_element_from_json(j.at("g"), params), {}, cochar_from_json(j.at("lambda"))};
    r.g_prime.slot_to_eigenvalue = j.at("slot_to_eigenvalue").get<std::vector<std::size_t>>();
    r.g_prime.element = gb_element_from_json(j.at("g_prime"));
    return r;
}

inline json to_json(const ThetaTerm& term) {
    json roots = json::array();
    for (const auto& a : term.norm_roots) roots.push_back(json(a.entries()));
    return json{{"stratum", to_json(term.stratum)},     {"triple", to_json(term.triple)},
                {"dim", term.dim},                      {"character_value", to_json(term.character_value)},
                {"norm_roots", roots},                  {"norm_factor", to_json(term.norm_factor)},
                {"contribution", to_json(term.contribution)}};
}

inline ThetaTerm theta_term_from_json(const json& j, const FieldParams& params) {
    ThetaTerm term;
    term.stratum = kottwitz_point_from_json(j.at("stratum"));
    term.triple = rel_triple_from_json(j.at("triple"), params);
    term.dim = j.at("dim").get<long long>();
    term.character_value = rational_from_json(j.at("character_value"));
    for (const auto& a : j.at("norm_roots")) term.norm_roots.emplace_back(a.get<std::vector<long long>>());
    term.norm_factor = rational_from_json(j.at("norm_factor"));
    term.contribution = rational_from_json(j.at("contribution"));
    return term;
}

inline json to_json(const ThetaResult& result) {
    json terms = json::array();
    for (const auto& t : result.terms) terms.push_back(to_json(t));
    return json{{"value", to_json(result.value)}, {"sign", result.sign}, {"terms", terms}};
}

inline ThetaResult theta_result_from_json(const json& j, const FieldParams& params) {
    ThetaResult result;
    result.value = rational_from_json(j.at("value"));
    result.sign = j.at("sign").get<int>();
    for (const auto& t : j.at("terms")) result.terms.push_back(theta_term_from_json(t, params));
    return result;
}

}  // namespace shtrace
