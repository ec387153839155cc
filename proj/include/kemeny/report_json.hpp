#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kemeny/braess.hpp"
#include "kemeny/closed_forms.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/rational.hpp"
#include "kemeny/resistance.hpp"

namespace kemeny {

using Json = nlohmann::ordered_json;

/// Every rational goes out twice: key as "p/q", key_float as a double.
inline void put_rational(Json& j, const std::string& key, const Rational& q) {
    j[key] = q.str();
    j[key + "_float"] = q.to_double();
}

inline Json edge_set_json(const EdgeSet& edges) {
    Json arr = Json::array();
    for (const Edge& e : edges) arr.push_back(Json::array({e.u, e.v}));
    return arr;
}

inline Json resistance_json(const ResistanceMatrix<Rational>& r) {
    Json exact = Json::array();
    Json approx = Json::array();
    for (Vertex i = 0; i < r.n(); ++i) {
        Json row = Json::array();
        Json frow = Json::array();
        for (Vertex j = 0; j < r.n(); ++j) {
            row.push_back(r(i, j).str());
            frow.push_back(r(i, j).to_double());
        }
        exact.push_back(std::move(row));
        approx.push_back(std::move(frow));
    }
    Json out;
    out["resistances"] = std::move(exact);
    out["resistances_float"] = std::move(approx);
    return out;
}

inline Json moments_json(const std::vector<MomentValue>& values) {
    Json arr = Json::array();
    for (const MomentValue& mv : values) {
        Json j;
        j["vertex"] = mv.vertex;
        put_rational(j, "moment", mv.value);
        arr.push_back(std::move(j));
    }
    return arr;
}

inline Json braess_json(const BraessReport& r) {
    Json j;
    j["graph"] = r.graph;
    j["edge_set"] = edge_set_json(r.edge_set);
    put_rational(j, "delta", r.delta_kemeny);
    if (r.terms) {
        Json t;
        put_rational(t, "A", r.terms->a);
        put_rational(t, "B", r.terms->b);
        put_rational(t, "C", r.terms->c);
        j["terms"] = std::move(t);
    } else {
        j["terms"] = nullptr;
    }
    j["is_braess"] = r.is_braess;
    j["sufficient"] = r.sufficient ? Json(*r.sufficient) : Json(nullptr);
    if (r.separation) {
        Json s;
        s["cut_vertex"] = r.separation->cut_vertex;
        s["m1"] = r.separation->m1;
        s["m2"] = r.separation->m2;
        put_rational(s, "first_term", r.separation->first_term);
        put_rational(s, "second_term", r.separation->second_term);
        j["separation"] = std::move(s);
    }
    if (r.resistances_nonincreasing) j["resistances_nonincreasing"] = *r.resistances_nonincreasing;
    return j;
}

inline Json closed_form_json(const ClosedFormResult& r) {
    Json j;
    j["name"] = r.name;
    Json params;
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    put_rational(j, "closed_form", r.value);
    if (r.direct) {
        put_rational(j, "direct", *r.direct);
        j["equal"] = r.verified_against_direct;
    } else {
        j["direct"] = nullptr;
    }
    return j;
}

}  // namespace kemeny
