#pragma once

// Shared on-disk polynomial format.  Rational components are decimal strings
// so arbitrary precision survives the round trip; terms are emitted in the
// canonical (graded-lex, leading first) order, making serialize(parse(x))
// the identity on canonical input.

#include <string>

#include <json.hpp>

#include "gl2n/polynomial.hpp"

namespace gl2n {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rational_to_json(const mpq_class& q) {
    return ordered_json::array({q.get_num().get_str(), q.get_den().get_str()});
}

inline mpq_class rational_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational must be a [num, den] pair");
    return GaussianRational::rational_from_strings(j[0].get<std::string>(),
                                                   j[1].get<std::string>());
}

inline ordered_json polynomial_to_json(const Polynomial& p) {
    ordered_json out;
    out["n"] = p.half_size();
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json term;
        term["coeff"]["re"] = rational_to_json(c.re());
        term["coeff"]["im"] = rational_to_json(c.im());
        ordered_json vars = ordered_json::array();
        for (const auto& [v, e] : m.entries()) {
            ordered_json var;
            var["kind"] = (v.kind == VarKind::holo) ? "z" : "zbar";
            var["row"] = v.row;
            var["col"] = v.col;
            var["exp"] = e;
            vars.push_back(std::move(var));
        }
        term["vars"] = std::move(vars);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline Polynomial polynomial_from_json(const ordered_json& j) {
    Polynomial p(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        GaussianRational c(rational_from_json(term.at("coeff").at("re")),
                           rational_from_json(term.at("coeff").at("im")));
        Monomial m;
        for (const auto& var : term.at("vars")) {
            const std::string kind = var.at("kind").get<std::string>();
            if (kind != "z" && kind != "zbar")
                throw std::invalid_argument("variable kind must be z or zbar");
            VariableId v{kind == "z" ? VarKind::holo : VarKind::anti,
                         var.at("row").get<std::uint16_t>(),
                         var.at("col").get<std::uint16_t>()};
            p.check_var(v);
            int e = var.at("exp").get<int>();
            if (e <= 0) throw std::invalid_argument("exponent must be positive");
            m = m.times(Monomial::variable(v, e));
        }
        p.add_term(m, std::move(c));
    }
    return p;
}

inline std::string polynomial_to_string(const Polynomial& p) {
    return polynomial_to_json(p).dump(2);
}

inline Polynomial polynomial_from_string(const std::string& s) {
    return polynomial_from_json(ordered_json::parse(s));
}

}  // namespace gl2n
