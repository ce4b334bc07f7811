#pragma once

#include <json.hpp>

#include "toric/analysis.hpp"

namespace toric {

// JSON interchange formats.
//   fan:      {"dim": d, "rays": [[int]], "max_cones": [[int]]}
//   divisor:  {"coefficients": [int, ...]}   (one per ray, canonical order)
//   polytope: {"dim": d, "vertices": [[int or "p/q", ...]]}
//   report:   schema 1, see report_to_json
// Rationals serialize as integers when the denominator is 1 and as "p/q"
// strings otherwise; round-trips are exact.

using json = nlohmann::json;

json int_to_json(const Int& x);
Int json_to_int(const json& j);
json rat_to_json(const Rat& q);
Rat json_to_rat(const json& j);

Fan parse_fan(const json& j);
json fan_to_json(const Fan& fan);

ToricDivisor parse_divisor(const json& j, const Fan& fan);
json divisor_to_json(const ToricDivisor& d);

VPolytope parse_polytope(const json& j);
json polytope_to_json(const VPolytope& p);

json report_to_json(const AnalysisReport& r);
json root_system_to_json(const RootSystem& rs);
json nef_certificate_to_json(const Fan& fan, const ToricDivisor& d,
                             const NefCertificate& cert);

/// Parses a whole file; wraps syntax errors (with byte positions) and shape
/// errors in ParseError.
json load_json_file(const std::string& path);

}  // namespace toric
