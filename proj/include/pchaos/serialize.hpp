#ifndef PCHAOS_SERIALIZE_HPP
#define PCHAOS_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "pchaos/cantor_embed.hpp"
#include "pchaos/check_report.hpp"
#include "pchaos/finite_topology.hpp"
#include "pchaos/primitive_chaos.hpp"
#include "pchaos/surjections.hpp"

namespace pchaos {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings, points are arrays of rationals, regions are
// arrays of boxes and boxes are arrays of per-axis [lo, hi] pairs.
Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const Box& b);
Json to_json(const Region& r);

/// {model, depth, cells: [{address, region, marked_points}]}, cells in
/// level order.
Json to_json(const RefinementTree& t);
/// {instance, checks: [{name, pass, witness}], summary: {total, passed, failed}}
Json to_json(const CheckReport& r);
/// {points, opens}, opens sorted by size then lexicographically.
Json to_json(const FiniteTopSpace& x);
Json to_json(const Partition& p, const FiniteTopSpace& x);
Json to_json(const WitnessResult& w);
Json to_json(const PeriodicPoint& p, SystemKind system);
/// {kind, blocks: [{domain, target}], target, padded}
Json to_json(const CantorMap& f);
/// {kind, waypoints: [{x, y}], target}
Json to_json(const WaypointSurjection& f);

/// Flattens a document into "path,value" rows keyed by JSON pointer, one
/// row per scalar leaf, header included. With `decimals`, a third
/// approx_decimal column holds the truncated decimal of every "p/q" leaf.
std::string to_csv(const Json& doc, std::optional<int> decimals = std::nullopt);

/// Adds an "approx_decimal" object mapping the JSON pointer of every "p/q"
/// leaf to its truncated decimal.
Json with_decimals(const Json& doc, int digits);

/// True for strings of the form "p/q".
bool looks_rational(const std::string& s);

}  // namespace pchaos

#endif
