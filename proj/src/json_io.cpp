#include "kronq/json_io.hpp"

namespace kronq {

using nlohmann::json;

json laurent_to_json(const LaurentQ& x) {
    json out = json::array();
    for (const auto& [e, c] : x.terms()) out.push_back(json::array({e, c.get_str()}));
    return out;
}

LaurentQ laurent_from_json(const json& j) {
    LaurentQ out;
    for (const auto& item : j)
        out += LaurentQ::term(item.at(0).get<long>(), mpz_class(item.at(1).get<std::string>()));
    return out;
}

json count_poly_to_json(const CountPoly& x) {
    json out = json::array();
    for (const auto& [e, c] : x.terms()) out.push_back(json::array({e, c.get_str()}));
    return out;
}

CountPoly count_poly_from_json(const json& j) {
    CountPoly out;
    for (const auto& item : j)
        out += CountPoly::term(item.at(0).get<long>(), mpz_class(item.at(1).get<std::string>()));
    return out;
}

json torus_to_json(const TorusElem& x) {
    json terms = json::array();
    for (const auto& [e, c] : x.terms()) {
        terms.push_back({{"e", json::array({e.c1, e.c2})}, {"coeff", laurent_to_json(c)}});
    }
    return json{{"terms", terms}};
}

TorusElem torus_from_json(const json& j) {
    TorusElem out;
    for (const auto& item : j.at("terms")) {
        const auto& e = item.at("e");
        out += TorusElem::term({e.at(0).get<long>(), e.at(1).get<long>()},
                               laurent_from_json(item.at("coeff")));
    }
    return out;
}

json label_to_json(const BasisLabel& l) {
    switch (l.kind) {
        case BasisLabel::Kind::Unit: return json{{"kind", "unit"}};
        case BasisLabel::Kind::Diagonal: return json{{"kind", "diag"}, {"n", l.n}};
        case BasisLabel::Kind::Monomial:
            return json{{"kind", "mono"}, {"m", l.m}, {"a", l.a}, {"b", l.b}};
    }
    throw std::logic_error("label_to_json: bad kind");
}

BasisLabel label_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "unit") return BasisLabel::unit();
    if (kind == "diag") return BasisLabel::diagonal(j.at("n").get<long>());
    if (kind == "mono")
        return BasisLabel::monomial(j.at("m").get<long>(), j.at("a").get<long>(),
                                    j.at("b").get<long>());
    throw std::invalid_argument("label_from_json: unknown kind '" + kind + "'");
}

json expansion_to_json(const BasisExpansion& e) {
    json terms = json::array();
    for (const auto& [l, c] : e.terms)
        terms.push_back({{"label", label_to_json(l)}, {"coeff", laurent_to_json(c)}});
    return json{{"family", family_name(e.family)}, {"primed", e.primed}, {"terms", terms}};
}

BasisExpansion expansion_from_json(const json& j) {
    BasisExpansion out;
    const auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("expansion_from_json: unknown family");
    out.family = *fam;
    out.primed = j.at("primed").get<bool>();
    for (const auto& item : j.at("terms")) {
        const LaurentQ c = laurent_from_json(item.at("coeff"));
        if (!c.is_zero()) out.terms.emplace(label_from_json(item.at("label")), c);
    }
    return out;
}

}  // namespace kronq
