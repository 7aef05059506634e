#include "qlan/measurement.hpp"

#include <cctype>
#include <string>

#include "qlan/error.hpp"

namespace qlan {

std::string_view to_string(PauliBasis basis) {
    switch (basis) {
        case PauliBasis::X: return "X";
        case PauliBasis::Y: return "Y";
        case PauliBasis::Z: return "Z";
    }
    return "?";
}

PauliBasis parse_basis(std::string_view text) {
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
            case 'X': return PauliBasis::X;
            case 'Y': return PauliBasis::Y;
            case 'Z': return PauliBasis::Z;
            default: break;
        }
    }
    throw Error(ErrorKind::Parse, "unknown Pauli basis '" + std::string(text) + "'");
}

Graph measure_z(const Graph& g, VertexId a) { return delete_vertex(g, a); }

Graph measure_y(const Graph& g, VertexId a) { return delete_vertex(local_complement(g, a), a); }

Graph measure_x(const Graph& g, VertexId a, VertexId b0) {
    if (!g.has_vertex(b0)) {
        throw Error(ErrorKind::UnknownVertex, "support vertex " + std::to_string(b0) + " is not in the graph");
    }
    if (!g.neighbors(a).contains(b0)) {
        throw Error(ErrorKind::NotANeighbor,
                    "support " + std::to_string(b0) + " is not adjacent to target " + std::to_string(a));
    }
    Graph g1 = local_complement(g, b0);
    Graph g2 = delete_vertex(local_complement(g1, a), a);
    return local_complement(g2, b0);
}

Graph measure_x_isolated(const Graph& g, VertexId a) {
    if (!g.neighbors(a).empty()) {
        throw Error(ErrorKind::NonEmptyNeighborhood,
                    "vertex " + std::to_string(a) + " has neighbours; an X measurement needs a support vertex");
    }
    return delete_vertex(g, a);
}

Graph apply_step(const Graph& g, const MeasurementStep& step) {
    switch (step.basis) {
        case PauliBasis::Z: return measure_z(g, step.target);
        case PauliBasis::Y: return measure_y(g, step.target);
        case PauliBasis::X:
            return step.support ? measure_x(g, step.target, *step.support) : measure_x_isolated(g, step.target);
    }
    return g;
}

void validate_plan(const Graph& g, const MeasurementPlan& plan) {
    VertexSet measured;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        const MeasurementStep& step = plan.steps[i];
        auto fail = [&](const std::string& why) {
            throw Error(ErrorKind::PlanValidation, "step " + std::to_string(i) + ": " + why);
        };
        if (!g.has_vertex(step.target)) {
            fail("target " + std::to_string(step.target) + " is not in the graph");
        }
        if (measured.contains(step.target)) {
            fail("target " + std::to_string(step.target) + " is measured twice");
        }
        if (step.support) {
            if (step.basis != PauliBasis::X) {
                fail("a support vertex is only meaningful for X steps");
            }
            if (*step.support == step.target) {
                fail("support equals target");
            }
            if (!g.has_vertex(*step.support)) {
                fail("support " + std::to_string(*step.support) + " is not in the graph");
            }
            if (measured.contains(*step.support)) {
                fail("support " + std::to_string(*step.support) + " was measured by an earlier step");
            }
        }
        measured.insert(step.target);
    }
}

PlanResult apply_plan(const Graph& g, const MeasurementPlan& plan) {
    validate_plan(g, plan);
    PlanResult result{g, {}};
    result.trajectory.reserve(plan.steps.size());
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        try {
            result.final = apply_step(result.final, plan.steps[i]);
        } catch (const Error& e) {
            throw Error(e.kind(), e.what(), i);
        }
        result.trajectory.push_back(result.final);
    }
    return result;
}

}  // namespace qlan
