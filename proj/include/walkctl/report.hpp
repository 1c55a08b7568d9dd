#pragma once

// JSON rendering. Integers and rationals are emitted as decimal strings
// ("12", "-3/4") so walk-matrix entries survive any JSON reader.

#include <json.hpp>

#include "walkctl/census.hpp"
#include "walkctl/controllability.hpp"
#include "walkctl/lti.hpp"

namespace walkctl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAnalyzeSchema = "walkctl.analyze/1";
inline constexpr const char* kCensusSchema = "walkctl.census/1";
inline constexpr const char* kIsocheckSchema = "walkctl.isocheck/1";
inline constexpr const char* kLtiSchema = "walkctl.lti/1";

Json to_json(const Rational& q);
Json to_json(const Vector& v); // also RatPoly coefficients
Json to_json(const Matrix& m);
Json to_json(const IntPoly& p);

/// Parses "3", "-3/4" or a JSON integer. Throws InputError otherwise.
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

Json report_to_json(const PairSpec& p, const ControllabilityReport& r, bool include_walk_matrix);

Json census_summary_json(const CensusResult& r);
Json census_rows_json(const CensusResult& r);

} // namespace walkctl
