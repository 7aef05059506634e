#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qlan/graph.hpp"

namespace qlan {

enum class PauliBasis { X, Y, Z };

std::string_view to_string(PauliBasis basis);
// Accepts "X", "Y", "Z" (case-insensitive). Throws Parse.
PauliBasis parse_basis(std::string_view text);

struct MeasurementStep {
    VertexId target = 0;
    PauliBasis basis = PauliBasis::Z;
    // The b0 neighbour used by the X rule. Absent for Y/Z steps, and for X
    // steps on an isolated target.
    std::optional<VertexId> support;

    bool operator==(const MeasurementStep&) const = default;
};

struct MeasurementPlan {
    std::vector<MeasurementStep> steps;

    bool empty() const { return steps.empty(); }
    std::size_t size() const { return steps.size(); }
    bool operator==(const MeasurementPlan&) const = default;
};

struct PlanResult {
    Graph final;
    // One graph per step, in order; the last equals `final`.
    std::vector<Graph> trajectory;
};

// Z rule: G - a.
Graph measure_z(const Graph& g, VertexId a);

// Y rule: tau_a(G) - a.
Graph measure_y(const Graph& g, VertexId a);

// X rule: tau_b0(tau_a(tau_b0(G)) - a). Throws NotANeighbor when b0 is not
// adjacent to a, including the case where a is isolated.
Graph measure_x(const Graph& g, VertexId a, VertexId b0);

// X measurement of an unentangled qubit. Throws NonEmptyNeighborhood when a
// has neighbours.
Graph measure_x_isolated(const Graph& g, VertexId a);

// Dispatches one step to the matching rule.
Graph apply_step(const Graph& g, const MeasurementStep& step);

// Static checks that do not depend on intermediate graphs: every referenced
// vertex exists in g, no target repeats, supports only on X steps, and no
// step references a vertex measured by an earlier step. Throws
// PlanValidation.
void validate_plan(const Graph& g, const MeasurementPlan& plan);

// Validates, then applies the steps in order and records the trajectory.
// Step failures are rethrown with the failing step's index attached.
PlanResult apply_plan(const Graph& g, const MeasurementPlan& plan);

}  // namespace qlan
