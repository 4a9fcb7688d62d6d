#pragma once

#include <json.hpp>

#include "dedekind/approximator.hpp"
#include "dedekind/congruence_laws.hpp"
#include "dedekind/families.hpp"
#include "dedekind/obstruction.hpp"

namespace dedekind {

/// Insertion-ordered objects keep the documented key order on the wire.
using Json = nlohmann::ordered_json;

/// Decimal string when the value exceeds int64, native number otherwise.
inline Json json_int(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

inline Json to_json(const Witness& w) {
    Json j;
    j["p"] = json_int(w.target.p);
    j["k"] = w.target.k;
    j["target"] = w.target.a.to_string();
    j["route"] = route_label(w.route);
    j["m"] = w.m.get_str();
    j["n"] = w.n.get_str();
    j["S"] = w.s.to_string();
    j["achieved"] = w.achieved.is_infinite() ? Json("inf") : Json(w.achieved.value());
    return j;
}

inline Json to_json(const NotApproximable&) {
    return Json{{"error", "NotApproximable"}, {"reason", "Theorem 1"}};
}

inline Json to_json(const ResidueConstraint& c) {
    Json j;
    j["case"] = congruence_case_label(c.tag);
    j["modulus"] = c.modulus;
    j["residue"] = c.residue;
    j["relation"] = c.must_equal ? "eq" : "neq";
    return j;
}

inline Json to_json(const CongruenceReport& r) {
    Json j;
    j["m"] = json_int(r.pair.m());
    j["n"] = json_int(r.pair.n());
    j["nS"] = r.ns.get_str();
    j["cases"] = Json::array({to_json(r.predicted.two_adic), to_json(r.predicted.three_adic)});
    j["holds"] = r.holds;
    return j;
}

inline Json to_json(const FamilyParams& fp, const FamilyValue& v) {
    Json j;
    j["q"] = json_int(fp.q());
    j["r"] = json_int(fp.r());
    j["m"] = json_int(v.m);
    j["n"] = json_int(v.n);
    j["l"] = json_int(v.l);
    j["S"] = v.s.to_string();
    return j;
}

inline Json to_json(const ScanReport& r) {
    Json j;
    j["nmax"] = json_int(r.nmax);
    j["pairs"] = r.pairs;
    j["violations"] = r.violations;
    j["max_v2_to_unit"] = r.max_v2_to_unit;
    j["max_v3_to_unit"] = r.max_v3_to_unit;
    j["counts"] = Json{{"v2_checked", r.two_adic_checked},
                       {"v2_vacuous", r.two_adic_vacuous},
                       {"v3_checked", r.three_adic_checked},
                       {"v3_vacuous", r.three_adic_vacuous}};
    return j;
}

}  // namespace dedekind
