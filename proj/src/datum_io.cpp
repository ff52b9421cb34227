#include "modcat/datum_io.hpp"

#include <fstream>

#include "modcat/error.hpp"

namespace modcat {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json cyclotomic_to_json(const Cyclotomic& x) {
  ordered_json coeffs = ordered_json::object();
  for (const auto& [e, c] : x.coeffs()) coeffs[std::to_string(e)] = to_string(c);
  ordered_json out;
  out["order"] = x.order();
  out["coeffs"] = coeffs;
  return out;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
      throw Error(ErrorKind::SchemaViolation, "entry needs order and coeffs");
    const auto n = j.at("order").get<std::int64_t>();
    if (n < 1) throw Error(ErrorKind::SchemaViolation, "order must be positive");
    std::map<std::int64_t, Rational> raw;
    if (!j.at("coeffs").is_object()) throw Error(ErrorKind::SchemaViolation, "coeffs must be an object");
    for (const auto& [key, value] : j.at("coeffs").items()) {
      std::int64_t e = 0;
      try {
        std::size_t used = 0;
        e = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(ErrorKind::SchemaViolation, "bad exponent key '" + key + "'");
      }
      try {
        raw[e] += value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long>());
      } catch (const Error& err) {
        throw Error(ErrorKind::SchemaViolation, err.what());
      }
    }
    return Cyclotomic::make(n, raw).reduce_conductor();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaViolation, e.what());
  }
}

ordered_json datum_to_json(const ModularDatum& d, const std::string& name) {
  ordered_json out;
  out["rank"] = d.rank;
  out["torder"] = d.torder;
  out["t_exponents"] = d.t_exponents;
  ordered_json s = ordered_json::array();
  for (const auto& row : d.S) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(cyclotomic_to_json(x));
    s.push_back(r);
  }
  out["S"] = s;
  if (!name.empty()) out["name"] = name;
  return out;
}

ModularDatum datum_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::SchemaViolation, "datum must be an object");
    ModularDatum d;
    d.rank = j.at("rank").get<int>();
    d.torder = j.at("torder").get<std::int64_t>();
    d.t_exponents = j.at("t_exponents").get<std::vector<std::int64_t>>();
    d.S.clear();
    for (const auto& row : j.at("S")) {
      std::vector<Cyclotomic> r;
      for (const auto& x : row) r.push_back(cyclotomic_from_json(x));
      d.S.push_back(std::move(r));
    }
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaViolation, e.what());
  }
}

ModularDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return datum_from_json(j);
}

void save_datum(const std::string& path, const ModularDatum& datum, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << datum_to_json(datum, name).dump(2) << "\n";
}

}  // namespace modcat
