#include "qlan/oracle/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "qlan/error.hpp"
#include "qlan/oracle/lc_orbit.hpp"

namespace qlan::oracle {

namespace {

constexpr std::size_t max_histories = 4096;

GateKind inverse(GateKind kind) {
    switch (kind) {
        case GateKind::S: return GateKind::Sdg;
        case GateKind::Sdg: return GateKind::S;
        default: return kind;
    }
}

PauliBasis basis_of(const PauliRow& p, std::size_t j) {
    bool x = (p.x >> j) & 1;
    bool z = (p.z >> j) & 1;
    if (x && z) return PauliBasis::Y;
    return x ? PauliBasis::X : PauliBasis::Z;
}

std::vector<int> permitted_outcomes(const StabilizerTableau& t, VertexId q, PauliBasis basis) {
    int fixed = deterministic_outcome(t, q, basis);
    if (fixed != 0) return {fixed};
    return {1, -1};
}

std::string outcome_text(const std::vector<int>& history) {
    std::string s;
    for (int o : history) s += o > 0 ? '+' : '-';
    return s.empty() ? "(none)" : s;
}

}  // namespace

bool RuleVerdict::pass() const {
    return !branches.empty() &&
           std::all_of(branches.begin(), branches.end(), [](const BranchVerdict& b) { return b.pass(); });
}

RuleVerdict verify_rule(const Graph& g, const MeasurementStep& step, const OracleConfig& config) {
    RuleVerdict verdict{apply_step(g, step), {}};
    StabilizerTableau t = graph_to_tableau(g);
    for (int outcome : permitted_outcomes(t, step.target, step.basis)) {
        CanonicalForm canon = tableau_to_graph_canonical(measure_pauli(t, step.target, step.basis, outcome));
        BranchVerdict branch{outcome, canon.graph, canon.gates, lc_equivalent(canon.graph, verdict.predicted, config)};
        verdict.branches.push_back(std::move(branch));
    }
    return verdict;
}

PlanVerdict verify_plan(const Graph& g, const MeasurementPlan& plan, const OracleConfig& config) {
    PlanResult predicted = apply_plan(g, plan);
    PlanVerdict verdict;
    verdict.predicted = predicted.final;
    verdict.pass = true;

    std::vector<int> history;
    // `frame` holds Cliffords V with V|psi> equal to the predicted graph state
    // of the current step, up to phase.
    std::function<void(const StabilizerTableau&, const std::vector<LocalGate>&, std::size_t)> walk =
        [&](const StabilizerTableau& psi, const std::vector<LocalGate>& frame, std::size_t t) {
            if (!verdict.pass) return;
            if (t == plan.steps.size()) {
                if (++verdict.histories > max_histories) {
                    throw Error(ErrorKind::Resource, "plan verification exceeds 4096 outcome histories");
                }
                return;
            }
            const MeasurementStep& step = plan.steps[t];
            const std::size_t j = psi.index_of(step.target);
            PauliRow literal = single_qubit_pauli(j, step.basis);
            for (auto it = frame.rbegin(); it != frame.rend(); ++it) {
                if (it->qubit == step.target) conjugate(literal, j, inverse(it->kind));
            }
            const PauliBasis basis = basis_of(literal, j);
            const Graph& target = predicted.trajectory[t];
            for (int outcome : permitted_outcomes(psi, step.target, basis)) {
                history.push_back(outcome);
                StabilizerTableau next = measure_pauli(psi, step.target, basis, outcome);
                CanonicalForm canon = tableau_to_graph_canonical(next);
                auto witness = lc_equivalent(canon.graph, target, config);
                if (!witness) {
                    verdict.pass = false;
                    verdict.detail = "step " + std::to_string(t) + " (" + std::string(to_string(step.basis)) + " on " +
                                     std::to_string(step.target) + "), outcomes " + outcome_text(history) +
                                     ": state is not LC-equivalent to the predicted graph";
                    return;
                }
                std::vector<LocalGate> next_frame = canon.gates;
                for (const LocalGate& gate : lc_gates(canon.graph, *witness)) next_frame.push_back(gate);
                walk(next, next_frame, t + 1);
                history.pop_back();
                if (!verdict.pass) return;
            }
        };

    StabilizerTableau start = graph_to_tableau(g);
    walk(start, {}, 0);
    if (plan.steps.empty()) verdict.histories = 1;
    return verdict;
}

std::vector<MeasurementStep> valid_steps(const Graph& g) {
    std::vector<MeasurementStep> out;
    for (VertexId a : g.vertices()) {
        out.push_back({a, PauliBasis::Z, std::nullopt});
        out.push_back({a, PauliBasis::Y, std::nullopt});
        if (g.degree(a) == 0) out.push_back({a, PauliBasis::X, std::nullopt});
        for (VertexId b : g.neighbors(a)) out.push_back({a, PauliBasis::X, b});
    }
    return out;
}

namespace {

Graph graph_on_mask(std::size_t n, std::uint64_t mask) {
    VertexSet vertices;
    for (VertexId v = 0; v < n; ++v) vertices.insert(v);
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1U) edges.emplace_back(i, j);
        }
    }
    return Graph(std::move(vertices), edges);
}

void sweep_graph(const Graph& g, const OracleConfig& config, SweepSummary& sum) {
    ++sum.graphs;
    for (const MeasurementStep& step : valid_steps(g)) {
        ++sum.steps;
        RuleVerdict v = verify_rule(g, step, config);
        sum.branches += v.branches.size();
        if (v.pass()) continue;
        ++sum.failures;
        if (sum.examples.size() < 10) {
            std::string text = std::string(to_string(step.basis)) + " on " + std::to_string(step.target);
            if (step.support) text += " (support " + std::to_string(*step.support) + ")";
            text += " in a graph with " + std::to_string(g.edge_count()) + " edges on " + std::to_string(g.order()) +
                    " vertices";
            sum.examples.push_back(std::move(text));
        }
    }
}

void check_sweep_size(std::size_t n_max) {
    if (n_max > 7) throw Error(ErrorKind::Resource, "rule sweeps support at most 7 vertices");
}

}  // namespace

SweepSummary verify_rules_exhaustive(std::size_t n_max, const OracleConfig& config) {
    check_sweep_size(n_max);
    SweepSummary sum;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t m = 0; m < masks; ++m) sweep_graph(graph_on_mask(n, m), config, sum);
    }
    return sum;
}

SweepSummary verify_rules_sampled(std::size_t n_max, std::size_t samples, std::uint64_t seed,
                                  const OracleConfig& config) {
    check_sweep_size(n_max);
    if (n_max == 0) throw Error(ErrorKind::Parameter, "n_max must be positive");
    // mt19937_64 output is fixed by the standard, so the sample is portable.
    std::mt19937_64 rng(seed);
    SweepSummary sum;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % n_max);
        const std::size_t pairs = n * (n - 1) / 2;
        const std::uint64_t mask = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
        sweep_graph(graph_on_mask(n, mask), config, sum);
    }
    return sum;
}

}  // namespace qlan::oracle
