#pragma once

// JSON encodings shared by the command line tool and the tests.

#include <string>
#include <vector>

#include "json.hpp"

#include "polycob/admissible.hpp"
#include "polycob/cobordism.hpp"
#include "polycob/lengths.hpp"
#include "polycob/polygon.hpp"
#include "polycob/polytope5.hpp"

namespace polycob::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const LengthVector& r) {
    Json a = Json::array();
    for (const auto& x : r.entries()) a.push_back(to_string(x));
    return a;
}

inline Json to_json(IndexSet s) { return s.indices(); }

inline Json to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

inline Json to_json(const Polygon& p) {
    Json a = Json::array();
    for (const auto& e : p.edges()) a.push_back(to_json(e));
    return a;
}

/// Nonzero histogram entries keyed by cardinality.
inline Json histogram_json(const std::vector<std::uint64_t>& hist) {
    Json h = Json::object();
    for (std::size_t l = 0; l < hist.size(); ++l)
        if (hist[l] != 0) h[std::to_string(l)] = hist[l];
    return h;
}

inline Json to_json(const CobordismClass& c, const std::optional<LengthVector>& r) {
    Json j;
    j["n"] = c.n;
    j["r"] = r ? to_json(*r) : Json(nullptr);
    j["pivot"] = c.pivot ? Json::array({c.pivot->i, c.pivot->j}) : Json(nullptr);
    j["dimension"] = c.complex_dimension;
    j["coefficient"] = c.coefficient;
    j["null"] = c.is_null;
    j["histogram"] = histogram_json(c.histogram);
    return j;
}

inline Json to_json(const AdmissibleFamily& fam) {
    Json j;
    j["n"] = fam.n;
    Json sets = Json::array();
    for (const auto& s : fam.sets) sets.push_back(to_json(s));
    j["sets"] = std::move(sets);
    j["count"] = fam.sets.size();
    j["histogram"] = histogram_json(fam.histogram);
    return j;
}

inline Json to_json(const ChamberSignature& sig) {
    Json j;
    j["n"] = sig.n;
    Json parts = Json::array();
    for (std::size_t k = 0; k < sig.partitions.size(); ++k) {
        Json members = Json::array();
        for (int i = 0; i < 64; ++i)
            if ((sig.partitions[k] >> i) & 1U) members.push_back(i + 1);
        parts.push_back(Json{{"S", std::move(members)}, {"sign", static_cast<int>(sig.signs[k])}});
    }
    j["partitions"] = std::move(parts);
    j["smooth"] = !sig.has_zero();
    return j;
}

}  // namespace polycob::io
