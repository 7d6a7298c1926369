#pragma once

// JSON and CSV encodings of the experiment results. Big integers and
// rationals are decimal strings, doubles use the shortest round-trip form,
// and an infinite interval end or margin is JSON null.

#include <string>
#include <vector>

#include "json.hpp"

#include "hyperzero/curve.hpp"
#include "hyperzero/exactpoly.hpp"
#include "hyperzero/qspec.hpp"
#include "hyperzero/verify.hpp"

namespace hyperzero {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hyperzero/1";

/// Shortest decimal string that reads back to exactly x.
std::string format_double(double x);

Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);
std::vector<IntPoly> polys_from_json(const Json& j);

Json to_json(const IntervalI& interval);
Json to_json(const ThetaSample& s);
Json to_json(const QSpectrum& s);
Json to_json(const PerMResult& r);
Json to_json(const VerifyReport& r);
Json to_json(const SignPattern& s);
Json to_json(const CrossCheckResult& c);
Json to_json(const DensityReport& d);
Json to_json(const IsolatedRoot& root);

/// Joins fields with ',' and ends the line with LF.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace hyperzero
