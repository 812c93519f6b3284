#pragma once

#include "macref/ratfunc_json.hpp"
#include "macref/symfunc.hpp"

namespace macref {

inline nlohmann::json partition_to_json(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

inline Partition partition_from_json(const nlohmann::json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

inline nlohmann::json symfunc_to_json(const SymFunc& f) {
    nlohmann::json j;
    j["basis"] = basis_name(f.basis());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : f.terms())
        terms.push_back({{"p", partition_to_json(p)}, {"c", frac_to_json(c)}});
    j["terms"] = terms;
    return j;
}

inline SymFunc symfunc_from_json(const nlohmann::json& j) {
    SymFunc f(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
        f.set_coefficient(partition_from_json(t.at("p")), frac_from_json<Rat>(t.at("c")));
    return f;
}

} // namespace macref
