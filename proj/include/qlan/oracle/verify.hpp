#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlan/graph.hpp"
#include "qlan/measurement.hpp"
#include "qlan/oracle/config.hpp"
#include "qlan/oracle/tableau.hpp"

namespace qlan::oracle {

struct BranchVerdict {
    int outcome = 1;
    // Graph form of the post-measurement stabilizer state and the local
    // Cliffords that take the state there.
    Graph canonical;
    std::vector<LocalGate> gates;
    // Local complementations from `canonical` to the rule's prediction.
    std::optional<std::vector<VertexId>> witness;

    bool pass() const { return witness.has_value(); }
};

struct RuleVerdict {
    Graph predicted;
    // One entry per physically possible outcome: two when the outcome is
    // random, one when it is fixed.
    std::vector<BranchVerdict> branches;

    bool pass() const;
};

// Runs the graph rewrite and the stabilizer measurement side by side and
// checks every outcome branch against the rewrite up to local Cliffords.
RuleVerdict verify_rule(const Graph& g, const MeasurementStep& step, const OracleConfig& config = OracleConfig::from_env());

struct PlanVerdict {
    bool pass = false;
    Graph predicted;
    // Number of complete outcome histories explored.
    std::size_t histories = 0;
    // On failure, the first step and outcome history that diverged.
    std::string detail;
};

// Pushes a whole plan through the stabilizer oracle, every outcome history.
// After each measurement the state is matched to the predicted intermediate
// graph by local Cliffords, and the next Pauli is measured in that graph's
// frame, i.e. conjugated back through the accumulated Cliffords. Throws
// Resource beyond 4096 histories.
PlanVerdict verify_plan(const Graph& g, const MeasurementPlan& plan, const OracleConfig& config = OracleConfig::from_env());

// Every step that the rewrite rules accept on g: Z and Y on each vertex, X
// with each neighbour as support, and X without support on isolated vertices.
std::vector<MeasurementStep> valid_steps(const Graph& g);

struct SweepSummary {
    std::size_t graphs = 0;
    std::size_t steps = 0;
    std::size_t branches = 0;
    std::size_t failures = 0;
    // Up to ten failing cases, human readable.
    std::vector<std::string> examples;

    bool pass() const { return failures == 0; }
};

// verify_rule over every valid step of every labelled graph on 1..n_max
// vertices. Throws Resource above 7 vertices.
SweepSummary verify_rules_exhaustive(std::size_t n_max, const OracleConfig& config = OracleConfig::from_env());

// Same, over `samples` graphs drawn uniformly from labelled graphs on
// 1..n_max vertices with the given seed.
SweepSummary verify_rules_sampled(std::size_t n_max, std::size_t samples, std::uint64_t seed,
                                  const OracleConfig& config = OracleConfig::from_env());

}  // namespace qlan::oracle
