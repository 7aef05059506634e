#pragma once

#include <optional>
#include <vector>

#include "qlan/graph.hpp"
#include "qlan/oracle/config.hpp"
#include "qlan/oracle/tableau.hpp"

namespace qlan::oracle {

// Breadth-first search through the labelled local-complementation orbit of
// g1. Returns a shortest sequence of vertices a_1..a_m with
// tau_{a_m}(...tau_{a_1}(g1)) == g2, or nothing when g2 is outside the orbit.
// Throws Parameter when the vertex sets differ, Resource above 16 vertices or
// when the orbit outgrows config.orbit_cap.
std::optional<std::vector<VertexId>> lc_equivalent(const Graph& g1, const Graph& g2,
                                                   const OracleConfig& config = OracleConfig::from_env());

// Every labelled graph reachable from g by local complementations, in BFS
// order starting with g.
std::vector<Graph> lc_orbit(const Graph& g, const OracleConfig& config = OracleConfig::from_env());

// Single-qubit Cliffords U with U|g> = |tau_{a_m}...tau_{a_1}(g)> up to a
// global phase.
std::vector<LocalGate> lc_gates(const Graph& g, const std::vector<VertexId>& sequence);

}  // namespace qlan::oracle
