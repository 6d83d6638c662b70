#pragma once

// JSON wire formats:
//   function     { "name": string, "params": { string: number } }
//   sample       { "points": [[number, ...], ...], "weights": [number, ...] }
//   positive     { "values": [number, ...], "weights": [number, ...] }
//   distribution { "probs": [number, ...] } or { "counts": [integer, ...] }

#include "json.hpp"

#include "jensen/certificate.hpp"
#include "jensen/convex.hpp"
#include "jensen/engine.hpp"
#include "jensen/info.hpp"
#include "jensen/means.hpp"

namespace jensen {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to InputError.
Json parse_json(const std::string& text);

ConvexFunction function_from_json(const Json& j);
Json to_json(const ConvexFunction& f);

WeightedSample sample_from_json(const Json& j);
Json to_json(const WeightedSample& s);

PositiveSample positive_sample_from_json(const Json& j);
Json to_json(const PositiveSample& s);

/// Accepts "probs" or "counts". `strip_zeros` drops zero entries and
/// renormalizes; otherwise zeros are rejected.
DiscreteDistribution distribution_from_json(const Json& j, bool strip_zeros = false);
Json to_json(const DiscreteDistribution& d);

Json to_json(const Bounds& b);
Bounds bounds_from_json(const Json& j);

/// Flat object with the four chain values, slacks, bounds used and "valid".
Json to_json(const BoundChainReport& r);

Json to_json(const Certificate& c);
Json to_json(const GradientCheckReport& r);

/// Serializes with the shortest representation that round-trips each double.
std::string dump(const Json& j, int indent = 2);

}  // namespace jensen
