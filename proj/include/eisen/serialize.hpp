#pragma once

// JSON forms of factorizations and reports. Field order is fixed; integers
// that fit in 64 bits are JSON numbers, larger ones decimal strings.

#include "eisen/applications.hpp"
#include "eisen/atoms.hpp"
#include "eisen/integer.hpp"
#include "eisen/search.hpp"

#include <json.hpp>

namespace eisen {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(to_string(v));
}

inline Json to_json(const Atom& a) {
    const bool split = a.kind == AtomKind::Split;
    return Json{{"kind", atom_kind_name(a.kind)},
                {"p", to_json(a.p)},
                {"r", split ? to_json(a.r) : Json(nullptr)},
                {"s", split ? to_json(a.s) : Json(nullptr)},
                {"bar", a.bar}};
}

inline Json to_json(const AtomicFactorization& f) {
    Json atoms = Json::array();
    for (const Atom& a : f.atoms) atoms.push_back(to_json(a));
    return Json{{"unit", unit_name(f.unit)}, {"atoms", std::move(atoms)}};
}

inline Json to_json(const SearchReport& r, bool with_timing = false) {
    Json constraints = Json::object();
    for (const auto& [name, on] : r.constraints) constraints[name] = on;
    Json hits = Json::array();
    for (const auto& hit : r.hits) {
        Json h = Json::object();
        for (std::size_t i = 0; i < hit.size() && i < r.fields.size(); ++i) h[r.fields[i]] = to_json(hit[i]);
        hits.push_back(std::move(h));
    }
    Json out{{"target", r.target},
             {"bound", r.bound},
             {"constraints", std::move(constraints)},
             {"candidates_tested", r.candidates_tested},
             {"hits", std::move(hits)}};
    if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

inline Json to_json(const IdentityReport& r) {
    Json out{{"id", r.id}, {"trials", r.trials}, {"failures", r.failures}};
    if (r.witness) {
        Json w = Json::array();
        for (const Integer& v : *r.witness) w.push_back(to_json(v));
        out["witness"] = std::move(w);
    }
    return out;
}

}  // namespace eisen
