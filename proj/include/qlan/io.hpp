#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qlan/graph.hpp"
#include "qlan/measurement.hpp"
#include "qlan/model.hpp"
#include "qlan/topology.hpp"

namespace qlan::io {

// Key order is preserved so that serialized output is stable byte for byte.
using Json = nlohmann::ordered_json;

// {"vertices": [...], "edges": [[a,b], ...]}
Json to_json(const Graph& g);
// Graph JSON plus "roles" and, when non-empty, "fictitious".
Json to_json(const QlanState& s);
// {"steps": [{"target": t, "basis": "X", "support": b}, ...]}
Json to_json(const MeasurementPlan& plan);
Json to_json(const TopologyReport& r);
Json to_json(const DemandPlan& p);

// All readers throw Error(Parse) on malformed input; graph-level problems
// such as self loops keep their own error kinds.
Graph graph_from_json(const Json& j);
QlanState state_from_json(const Json& j);
MeasurementPlan plan_from_json(const Json& j);

// Parses text, turning syntax errors into Error(Parse).
Json parse_json(const std::string& text);

// Undirected DOT. With roles, orchestrators are diamonds, clients circles,
// and vertices carry their c_i / o_i labels.
std::string to_dot(const Graph& g);
std::string to_dot(const QlanState& s);
// Roles of `s` applied to the vertices of g that still exist.
std::string to_dot(const Graph& g, const QlanState& roles_from);

}  // namespace qlan::io
