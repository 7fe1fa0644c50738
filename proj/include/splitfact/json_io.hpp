#pragma once

// JSON views of the domain types. nlohmann::json keeps object keys sorted,
// which gives the byte-stable output the CLI relies on.

#include <json.hpp>

#include "splitfact/cohomology.hpp"

namespace splitfact {

using json = nlohmann::json;

inline json to_json(const Root& v) { return json(v); }

inline json roots_json(const std::vector<Root>& roots) {
    json a = json::array();
    for (const auto& r : roots) a.push_back(r);
    return a;
}

inline json to_json(const RootSystem& r) {
    return json{{"type", std::string(1, r.type)},
                {"rank", r.rank},
                {"roots", roots_json(r.roots)},
                {"base", roots_json(r.base)}};
}

inline json to_json(const WeylElement& w) {
    json rows = json::array();
    for (const auto& row : w.m) {
        json rr = json::array();
        for (const auto& x : row) rr.push_back(rat_to_string(x));
        rows.push_back(rr);
    }
    return rows;
}

inline json to_json(const TorusElem& t) {
    return json{{"w_mod4", t.w}, {"basis", "simple-coroots"}};
}

inline json to_json(const TwistedCocycle& c) {
    json j = to_json(c.value);
    j["sos"] = roots_json(c.sos);
    return j;
}

inline json to_json(const FiniteAbelianGroup& g) {
    json gens = json::array();
    for (size_t i = 0; i < g.ngens(); ++i) {
        IVec cls(g.ngens(), 0);
        cls[i] = 1;
        gens.push_back(g.representative(cls));
    }
    return json{{"divisors", g.nontrivial_divisors()}, {"generators", gens}};
}

inline std::string mod1_string(const Rat& q) {
    return rat_to_string(mod1(q)) + " mod 1";
}

}  // namespace splitfact
