#pragma once

// System files (JSON) and exact result serialization.  Numbers are emitted
// exactly: integers as JSON numbers only within 53-bit safety, otherwise as
// decimal strings; non-integral rationals always as "p/q" strings.

#include "trop/multiplicity.hpp"

#include <json.hpp>

namespace trop {

using Json = nlohmann::json;

// { "ambient_dim": n, "polynomials": [ { "terms": [ { "exponent": [...],
//   "valuation": "p/q" | integer, "sign": 1 | -1 (optional) } ] } ] }
TropicalSystem parse_system(const Json& j);
Json serialize_system(const TropicalSystem& sys);

Json json_int(const Int& v);
Json json_rat(const Rat& q);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);

// FNV-1a 64-bit digest of the canonical dump, as fixed-width hex.
std::string input_digest(const Json& j);

Json weight_record_json(const WeightRecord& rec);

} // namespace trop
