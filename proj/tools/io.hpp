#pragma once

// JSON encoding for curves, divisors and reports. Scalars travel as decimal
// strings; objects keep insertion order so output bytes are stable.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "symcan/curve.hpp"
#include "symcan/gonality.hpp"
#include "symcan/linear_system.hpp"
#include "symcan/survey.hpp"
#include "symcan/verdict.hpp"

namespace symcan::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

Field field_from_json(const Json& j);
Json to_json(const Field& f);

/// Accepts a decimal string ("-3/4") or an integer.
Scalar scalar_from_json(const Json& j, const Field& f);
Json to_json(const Scalar& s);

CurveModel curve_from_json(const Json& j);
Json to_json(const CurveModel& c);

EffectiveDivisor divisor_from_json(const Json& j, const Field& f);
Json to_json(const EffectiveDivisor& z);

Json to_json(const LinearSystemReport& r);
Json to_json(const SurveyReport& r);
Json to_json(const GonalityInfo& g);
Json to_json(const SodVerdict& v);

/// {g, d, K: [a, b], K2 (d = 2 only), h0K, gamma2 (hyperelliptic only)}.
Json classes_table(int g, int d, bool hyperelliptic);

/// Compact, one line, newline-terminated.
std::string dump(const Json& j);
/// Aligned key/value text; arrays of objects become column tables.
std::string render_table(const Json& j);

}  // namespace symcan::io
