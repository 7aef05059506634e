#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlan/graph.hpp"
#include "qlan/measurement.hpp"
#include "qlan/model.hpp"

namespace qlan {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TopologyReport {
    std::string procedure;
    QlanState initial;
    MeasurementPlan plan;
    Graph final;
    std::vector<Graph> trajectory;
    std::vector<Check> checks;

    bool ok() const;
    // The named check, or nullptr.
    const Check* check(std::string_view name) const;
};

struct ReportOptions {
    // Push the plan through the stabilizer oracle when the state has at most
    // this many qubits (0 disables the check).
    std::size_t oracle_max_qubits = 10;
};

// Every orchestrator measured in Y. `orchestrator_order` lists 1-based
// orchestrator indices (a permutation); empty means ascending. Check
// "is_path": the clients end up as the path c_1 - ... - c_k. Throws
// NotAChainState, or Parameter for a malformed order.
TopologyReport to_bus(const QlanState& s, const std::vector<std::size_t>& orchestrator_order = {},
                      const ReportOptions& options = {});

// Y on odd-indexed and Z on even-indexed orchestrators. Check "epr_count":
// exactly floor(k/2) disjoint edges {c_{2i+1}, c_{2i+2}} remain.
TopologyReport extract_epr_pairs(const QlanState& s, const ReportOptions& options = {});

// X measurements along the shortest c_i - c_j path; each orchestrator uses
// the next path vertex as support, ending with c_j. Checks "edge_present"
// and "plan_length" (equal to the client proximity).
//
// roll_chain needs a chain state and i < j (Ordering otherwise); roll_tree
// accepts any connected state and any two distinct clients.
TopologyReport roll_chain(const QlanState& s, VertexId ci, VertexId cj, const ReportOptions& options = {});
TopologyReport roll_tree(const QlanState& s, VertexId ci, VertexId cj, const ReportOptions& options = {});

// The rolling plan itself, shared by the two procedures above and the
// demand planner.
MeasurementPlan rolling_plan(const QlanState& s, VertexId ci, VertexId cj);

// Y on o_1..o_{n_o}. Checks "edge_count_formula" and "edge_set_formula".
// Throws NotATreeLikeState.
TopologyReport to_enhanced_ring(const QlanState& s, const ReportOptions& options = {});

// n_o C(k_c,2) - 2 (n_o - 1) C(k_b,2).
std::size_t enhanced_ring_edge_count(const TreeShape& shape);

// Client graph whose edges are all pairs inside some orchestrator
// neighbourhood, minus pairs of bridges shared by consecutive orchestrators.
Graph enhanced_ring_edge_set(const QlanState& s);

struct LcReduction {
    // Tree-like state on the k clients: one client per star is promoted to
    // orchestrator, giving k - n_o clients of degree k_c - 1 per star.
    QlanState reduced;
    // Local complementations turning reduced.graph() into `ring`.
    std::vector<VertexId> certificate;
    Graph ring;
};

// Throws NotATreeLikeState, or Parameter when some star has no client outside
// its bridges (k_c <= largest bridge degree).
LcReduction lc_reduce_enhanced_ring(const QlanState& s);

struct SchmidtBounds {
    std::size_t lower = 0;  // maximum cut rank
    std::size_t upper = 0;  // minimum vertex cover size
};

SchmidtBounds schmidt_bounds(const Graph& g);

// Evaluates both bounds on the reduced two-colourable graph and returns n_o.
// When k_c equals the largest bridge degree the upper bound comes from a
// search of the ring's local-complementation orbit instead (16 vertices max).
// Throws BoundsMismatch unless lower == upper == n_o.
std::size_t schmidt_measure_enhanced_ring(const QlanState& s);

// Fewest Z measurements that leave a product state: minimum vertex cover.
std::size_t persistency(const Graph& g);

// Persistency of the enhanced-ring state. It is a property of the state, not
// of one graph, so it is read off the LC-equivalent graph with the smallest
// vertex cover (the star reduction, or an orbit search when none exists).
std::size_t enhanced_ring_persistency(const QlanState& s);

struct Demand {
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

struct DemandPlan {
    bool feasible = false;
    MeasurementPlan plan;
    std::string reason;
    // Graph after the plan; equal to the input graph when infeasible.
    Graph final;
};

// Single pair: the rolling plan. Several pairs on a chain that all have the
// form (c_{2i+1}, c_{2i+2}): the alternating Y/Z plan. Otherwise rolling
// plans are composed greedily when their orchestrator sets are disjoint and
// every demanded edge survives; anything else is reported infeasible.
// Throws Role for non-client endpoints, Parameter for fictitious endpoints or
// a pair with equal ends, OverlappingPairs when two pairs share a client.
DemandPlan plan_for_demand(const QlanState& s, const Demand& d);

}  // namespace qlan
