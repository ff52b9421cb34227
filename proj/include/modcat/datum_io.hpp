#pragma once

// JSON files for modular data.
//
// {"rank": r, "torder": N, "t_exponents": [...], "S": [[entry, ...], ...],
//  "name": ...}
// with each entry {"order": n, "coeffs": {"e": "p/q", ...}} meaning the sum
// of (p/q) zeta_n^e over canonical exponents e. Fields are written in this
// order so golden files are byte-stable; "name" is optional.

#include <string>

#include "json.hpp"
#include "modcat/modular_data.hpp"

namespace modcat {

nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& x);
/// Throws SchemaViolation on malformed input.
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::ordered_json datum_to_json(const ModularDatum& datum, const std::string& name = "");
ModularDatum datum_from_json(const nlohmann::json& j);

/// Throws ParseError when the file is unreadable or not JSON.
ModularDatum load_datum(const std::string& path);
void save_datum(const std::string& path, const ModularDatum& datum, const std::string& name = "");

}  // namespace modcat
