#include "trop/io.hpp"

#include "trop/multiplicity.hpp"

namespace trop {

Json json_int(const Int& v) {
  static const Int safe = pow_int(2, 53);
  if (abs(v) < safe) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_rat(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return json_int(c.get_num());
  return Json(c.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int v;
    require(v.set_str(j.get<std::string>(), 10) == 0,
            "bad integer literal: " + j.get<std::string>());
    return v;
  }
  throw ValidationError("expected an integer (number or string)");
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw ValidationError("expected a rational (integer or \"p/q\" string)");
}

TropicalSystem parse_system(const Json& j) {
  require(j.is_object(), "system file: top-level object expected");
  require(j.contains("ambient_dim") && j["ambient_dim"].is_number_integer(),
          "system file: integer ambient_dim required");
  const Index n = j["ambient_dim"].get<int>();
  require(n >= 0, "system file: ambient_dim must be nonnegative");
  require(j.contains("polynomials") && j["polynomials"].is_array() &&
              !j["polynomials"].empty(),
          "system file: nonempty polynomials array required");
  std::vector<TropicalPolynomial> polys;
  for (const auto& pj : j["polynomials"]) {
    require(pj.is_object() && pj.contains("terms") && pj["terms"].is_array() &&
                !pj["terms"].empty(),
            "system file: each polynomial needs a nonempty terms array");
    std::vector<TropicalTerm> terms;
    for (const auto& tj : pj["terms"]) {
      require(tj.is_object() && tj.contains("exponent") && tj["exponent"].is_array(),
              "system file: each term needs an exponent array");
      require(static_cast<Index>(tj["exponent"].size()) == n,
              "system file: exponent length must equal ambient_dim");
      IVec e(n);
      for (Index c = 0; c < n; ++c) e(c) = int_from_json(tj["exponent"][static_cast<std::size_t>(c)]);
      Rat lift = tj.contains("valuation") ? rat_from_json(tj["valuation"]) : Rat(0);
      int sign = 0;
      if (tj.contains("sign")) {
        require(tj["sign"].is_number_integer(), "system file: sign must be 1 or -1");
        sign = tj["sign"].get<int>();
        require(sign == 1 || sign == -1, "system file: sign must be 1 or -1");
      }
      terms.push_back({std::move(e), lift, sign});
    }
    polys.emplace_back(n, std::move(terms));
  }
  return TropicalSystem(std::move(polys));
}

Json serialize_system(const TropicalSystem& sys) {
  Json out;
  out["ambient_dim"] = static_cast<int>(sys.ambient_dim());
  Json polys = Json::array();
  for (const auto& p : sys.polys()) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
      Json tj;
      Json e = Json::array();
      for (Index c = 0; c < t.exponent.size(); ++c) e.push_back(json_int(t.exponent(c)));
      tj["exponent"] = e;
      tj["valuation"] = json_rat(t.lift);
      if (t.sign != 0) tj["sign"] = t.sign;
      terms.push_back(tj);
    }
    polys.push_back(Json{{"terms", terms}});
  }
  out["polynomials"] = polys;
  return out;
}

std::string input_digest(const Json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json weight_record_json(const WeightRecord& rec) {
  Json out;
  out["weight"] = json_int(rec.weight);
  out["codim"] = rec.codim;
  out["codims"] = rec.codims;
  out["transversal"] = rec.transversal;
  if (rec.vol_product) out["vol_product"] = json_int(*rec.vol_product);
  if (rec.index_factor) out["lattice_index"] = json_int(*rec.index_factor);
  Json terms = Json::array();
  for (const auto& t : rec.breakdown) {
    terms.push_back(Json{{"composition", t.composition}, {"mixed_volume", json_rat(t.mixed_volume)}});
  }
  out["breakdown"] = terms;
  return out;
}

} // namespace trop
