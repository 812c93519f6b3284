#pragma once

#include <json.hpp>

#include "macref/ratfunc.hpp"

namespace macref {

// Wire format:
//   {"expden": d,
//    "num": [{"e": {"q":a,"t":b,"u":c,"v":e}, "c": "p/q"}, ...],
//    "den": [...]}
// Exponents are integers on the 1/d grid (Laurent entries may be negative);
// the deformation variable s is emitted only when present. Rational
// coefficients are exact strings; cyclotomic ones are
// {"conductor": L, "coeffs": ["..", ...]}.

inline nlohmann::json coeff_to_json(const Rat& c) { return rat_to_string(c); }

inline nlohmann::json coeff_to_json(const Cyc& c) {
    if (c.is_rational()) return rat_to_string(c.rational_value());
    nlohmann::json j;
    j["conductor"] = c.conductor();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : c.coeffs()) arr.push_back(rat_to_string(a));
    j["coeffs"] = arr;
    return j;
}

inline void coeff_from_json(const nlohmann::json& j, Rat& out) {
    out = rat_from_string(j.get<std::string>());
}

inline void coeff_from_json(const nlohmann::json& j, Cyc& out) {
    if (j.is_string()) {
        out = Cyc(rat_from_string(j.get<std::string>()));
        return;
    }
    int L = j.at("conductor").get<int>();
    out = Cyc(Rat(0));
    long k = 0;
    for (const auto& cj : j.at("coeffs")) {
        Rat c = rat_from_string(cj.get<std::string>());
        if (!is_zero(c)) out += Cyc(c) * Cyc::root_of_unity(L, k);
        ++k;
    }
}

template <class C>
nlohmann::json poly_terms_to_json(const Poly<C>& p, int32_t grid) {
    nlohmann::json arr = nlohmann::json::array();
    Poly<C> q = p;
    q.rescale_to(grid);
    const auto& ts = q.terms();
    for (size_t i = ts.size(); i-- > 0;) {
        const auto& [m, c] = ts[i];
        nlohmann::json e;
        e["q"] = m[VQ];
        e["t"] = m[VT];
        e["u"] = m[VU];
        e["v"] = m[VV];
        if (m[VS] != 0) e["s"] = m[VS];
        arr.push_back({{"e", e}, {"c", coeff_to_json(c)}});
    }
    return arr;
}

template <class C>
nlohmann::json frac_to_json(const Frac<C>& r) {
    int32_t grid = std::lcm(r.num().eden(), r.den().eden());
    nlohmann::json j;
    j["expden"] = grid;
    j["num"] = poly_terms_to_json(r.num(), grid);
    j["den"] = poly_terms_to_json(r.den(), grid);
    return j;
}

template <class C>
Poly<C> poly_terms_from_json(const nlohmann::json& arr, int32_t grid) {
    std::vector<typename Poly<C>::Term> ts;
    for (const auto& tj : arr) {
        const auto& e = tj.at("e");
        Mono m = mono_zero();
        m[VQ] = e.value("q", 0);
        m[VT] = e.value("t", 0);
        m[VU] = e.value("u", 0);
        m[VV] = e.value("v", 0);
        m[VS] = e.value("s", 0);
        C c;
        coeff_from_json(tj.at("c"), c);
        ts.push_back({m, std::move(c)});
    }
    return Poly<C>::from_terms(grid, std::move(ts));
}

template <class C>
Frac<C> frac_from_json(const nlohmann::json& j) {
    int32_t grid = j.at("expden").get<int32_t>();
    Poly<C> num = poly_terms_from_json<C>(j.at("num"), grid);
    Poly<C> den = poly_terms_from_json<C>(j.at("den"), grid);
    return Frac<C>(std::move(num), std::move(den));
}

} // namespace macref
