#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "queenpoly/locus.hpp"
#include "queenpoly/poly.hpp"
#include "queenpoly/quartic.hpp"

namespace queenpoly {

inline constexpr int kSchemaVersion = 1;

/// Schema tag written at the top of every output, e.g. "queenpoly.pseq/1".
std::string schema_tag(const std::string& command);

/// Polynomials serialize as arrays of exact coefficient strings in ascending
/// degree: decimal integers, or "p/q" for non-integral rationals.
nlohmann::json poly_to_json(const IntPoly& p);
nlohmann::json poly_to_json(const RatPoly& p);
IntPoly int_poly_from_json(const nlohmann::json& j);
RatPoly rat_poly_from_json(const nlohmann::json& j);

std::vector<std::string> coefficient_strings(const IntPoly& p);
std::vector<std::string> coefficient_strings(const RatPoly& p);

/// Shortest round-trip decimal for a double ("%.17g").
std::string format_double(double v);

/// RFC-4180 field quoting: wraps in double quotes when needed.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

nlohmann::json to_json(const LocusReport& r);
nlohmann::json to_json(const CrossingReport& r);
nlohmann::json to_json(const RootQuartet& q);

}  // namespace queenpoly
