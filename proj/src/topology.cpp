#include "qlan/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qlan/error.hpp"
#include "qlan/oracle/lc_orbit.hpp"
#include "qlan/oracle/verify.hpp"
#include "qlan/vertex_cover.hpp"

namespace qlan {

namespace {

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::string count_text(std::size_t n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::size_t require_chain(const QlanState& s) {
    auto k = chain_client_count(s);
    if (!k) {
        throw Error(ErrorKind::NotAChainState, "state is not a chain: expected o_i adjacent to exactly c_i and c_{i+1}");
    }
    return *k;
}

TreeShape require_tree(const QlanState& s) {
    auto shape = tree_like_shape(s);
    if (!shape) {
        throw Error(ErrorKind::NotATreeLikeState, "state does not match any constructible tree-like state");
    }
    return *shape;
}

void require_client(const QlanState& s, VertexId v) {
    if (!s.is_client(v)) {
        throw Error(ErrorKind::Role, s.label(v) + " is an orchestrator, expected a client");
    }
}

// Applies the plan, fills the trajectory and attaches the oracle check.
TopologyReport run(std::string procedure, const QlanState& s, MeasurementPlan plan, const ReportOptions& options) {
    PlanResult result = apply_plan(s.graph(), plan);
    TopologyReport report{std::move(procedure), s, std::move(plan), std::move(result.final),
                          std::move(result.trajectory), {}};
    if (options.oracle_max_qubits > 0 && s.graph().order() <= options.oracle_max_qubits) {
        try {
            oracle::PlanVerdict v = oracle::verify_plan(s.graph(), report.plan);
            report.checks.push_back({"oracle_lc_equivalent", v.pass,
                                     v.pass ? count_text(v.histories, "outcome history") + " verified" : v.detail});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Resource) throw;
        }
    }
    return report;
}

void add_check(TopologyReport& r, std::string name, bool pass, std::string detail) {
    // Procedure checks go before the oracle check.
    auto at = std::find_if(r.checks.begin(), r.checks.end(),
                           [](const Check& c) { return c.name == "oracle_lc_equivalent"; });
    r.checks.insert(at, Check{std::move(name), pass, std::move(detail)});
}

// Most bridges adjacent to one orchestrator.
std::size_t star_bridge_bound(const TreeShape& shape) {
    if (shape.n_o == 1) return 0;
    return shape.n_o == 2 ? shape.k_b_min : 2 * shape.k_b_min;
}

std::set<std::pair<VertexId, VertexId>> pairs_within(const std::vector<VertexId>& vs) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) out.insert(std::minmax(vs[i], vs[j]));
    }
    return out;
}

std::vector<VertexId> client_neighbors(const QlanState& s, VertexId o) {
    std::vector<VertexId> out;
    for (VertexId v : s.graph().neighbors(o)) {
        if (s.is_client(v)) out.push_back(v);
    }
    return out;
}

TopologyReport roll(std::string procedure, const QlanState& s, VertexId ci, VertexId cj,
                    const ReportOptions& options) {
    MeasurementPlan plan = rolling_plan(s, ci, cj);
    const std::size_t d = client_proximity(s, ci, cj);
    const std::size_t steps = plan.size();
    TopologyReport r = run(std::move(procedure), s, std::move(plan), options);
    add_check(r, "edge_present", r.final.has_edge(ci, cj),
              r.final.has_edge(ci, cj) ? s.label(ci) + "-" + s.label(cj) + " present"
                                       : s.label(ci) + "-" + s.label(cj) + " missing");
    add_check(r, "plan_length", steps == d,
              count_text(steps, "step") + ", proximity " + std::to_string(d));
    return r;
}

}  // namespace

bool TopologyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* TopologyReport::check(std::string_view name) const {
    for (const Check& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

TopologyReport to_bus(const QlanState& s, const std::vector<std::size_t>& orchestrator_order,
                      const ReportOptions& options) {
    const std::size_t k = require_chain(s);
    std::vector<std::size_t> order = orchestrator_order;
    if (order.empty()) {
        for (std::size_t i = 1; i < k; ++i) order.push_back(i);
    }
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted.size() != k - 1 || sorted[i] != i + 1) {
            throw Error(ErrorKind::Parameter, "orchestrator order must be a permutation of 1.." + std::to_string(k - 1));
        }
    }
    MeasurementPlan plan;
    for (std::size_t i : order) plan.steps.push_back({s.orchestrator(i), PauliBasis::Y, std::nullopt});
    TopologyReport r = run("bus", s, std::move(plan), options);
    const bool is_path = r.final == path_graph(s.clients());
    add_check(r, "is_path", is_path, is_path ? "path c1-...-c" + std::to_string(k) : "final graph is not the client path");
    return r;
}

TopologyReport extract_epr_pairs(const QlanState& s, const ReportOptions& options) {
    const std::size_t k = require_chain(s);
    MeasurementPlan plan;
    for (std::size_t i = 1; i < k; ++i) {
        plan.steps.push_back({s.orchestrator(i), i % 2 == 1 ? PauliBasis::Y : PauliBasis::Z, std::nullopt});
    }
    TopologyReport r = run("epr", s, std::move(plan), options);
    std::vector<Edge> expected;
    for (std::size_t i = 0; 2 * i + 2 <= k; ++i) expected.emplace_back(s.client(2 * i + 1), s.client(2 * i + 2));
    const bool pass = r.final.edges() == expected && r.final.vertices() == VertexSet(s.clients().begin(), s.clients().end());
    add_check(r, "epr_count", pass,
              count_text(r.final.edge_count(), "pair") + ", expected " + std::to_string(k / 2));
    return r;
}

MeasurementPlan rolling_plan(const QlanState& s, VertexId ci, VertexId cj) {
    require_client(s, ci);
    require_client(s, cj);
    if (ci == cj) {
        throw Error(ErrorKind::Parameter, "rolling needs two distinct clients");
    }
    auto path = shortest_path(s.graph(), ci, cj);
    if (!path) {
        throw Error(ErrorKind::Disconnected, s.label(ci) + " and " + s.label(cj) + " are not connected");
    }
    const auto& p = path->vertices;
    MeasurementPlan plan;
    for (std::size_t pos = 1; pos + 1 < p.size(); pos += 2) {
        if (!s.is_orchestrator(p[pos]) || !s.is_client(p[pos + 1])) {
            throw Error(ErrorKind::Role, "shortest path " + s.label(ci) + " to " + s.label(cj) +
                                             " does not alternate between clients and orchestrators");
        }
        plan.steps.push_back({p[pos], PauliBasis::X, p[pos + 1]});
    }
    return plan;
}

TopologyReport roll_chain(const QlanState& s, VertexId ci, VertexId cj, const ReportOptions& options) {
    require_chain(s);
    require_client(s, ci);
    require_client(s, cj);
    if (s.index_of(ci) >= s.index_of(cj)) {
        throw Error(ErrorKind::Ordering, "chain rolling expects c_i before c_j, got " + s.label(ci) + " and " +
                                             s.label(cj));
    }
    return roll("roll", s, ci, cj, options);
}

TopologyReport roll_tree(const QlanState& s, VertexId ci, VertexId cj, const ReportOptions& options) {
    return roll("roll", s, ci, cj, options);
}

std::size_t enhanced_ring_edge_count(const TreeShape& shape) {
    return shape.n_o * choose2(shape.k_c) - 2 * (shape.n_o - 1) * choose2(shape.k_b_min);
}

Graph enhanced_ring_edge_set(const QlanState& s) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (VertexId o : s.orchestrators()) {
        auto within = pairs_within(client_neighbors(s, o));
        edges.insert(within.begin(), within.end());
    }
    for (std::size_t i = 2; i <= s.orchestrator_count(); ++i) {
        const VertexSet& prev = s.graph().neighbors(s.orchestrator(i - 1));
        std::vector<VertexId> shared;
        for (VertexId v : client_neighbors(s, s.orchestrator(i))) {
            if (prev.contains(v)) shared.push_back(v);
        }
        for (const auto& e : pairs_within(shared)) edges.erase(e);
    }
    std::vector<Edge> list;
    for (auto [a, b] : edges) list.emplace_back(a, b);
    return Graph(VertexSet(s.clients().begin(), s.clients().end()), list);
}

TopologyReport to_enhanced_ring(const QlanState& s, const ReportOptions& options) {
    TreeShape shape = require_tree(s);
    MeasurementPlan plan;
    for (VertexId o : s.orchestrators()) plan.steps.push_back({o, PauliBasis::Y, std::nullopt});
    TopologyReport r = run("ring", s, std::move(plan), options);
    const std::size_t expected = enhanced_ring_edge_count(shape);
    add_check(r, "edge_count_formula", r.final.edge_count() == expected,
              count_text(r.final.edge_count(), "edge") + ", formula gives " + std::to_string(expected));
    const bool same = r.final == enhanced_ring_edge_set(s);
    add_check(r, "edge_set_formula", same, same ? "edge sets agree" : "edge sets differ");
    return r;
}

LcReduction lc_reduce_enhanced_ring(const QlanState& s) {
    TreeShape shape = require_tree(s);
    const std::size_t largest_bridge_degree = star_bridge_bound(shape);
    if (shape.k_c <= largest_bridge_degree) {
        throw Error(ErrorKind::Parameter, "reduction needs k_c > " + std::to_string(largest_bridge_degree) +
                                              " so that every star keeps a non-bridge client");
    }
    std::map<VertexId, Role> roles;
    for (VertexId c : s.clients()) roles[c] = Role::Client;
    std::vector<Edge> edges;
    std::vector<VertexId> certificate;
    for (VertexId o : s.orchestrators()) {
        auto nbrs = client_neighbors(s, o);
        auto hub = std::find_if(nbrs.begin(), nbrs.end(), [&](VertexId c) { return bridge_rank(s, c) == 1; });
        certificate.push_back(*hub);
        roles[*hub] = Role::Orchestrator;
        for (VertexId c : nbrs) {
            if (c != *hub) edges.emplace_back(*hub, c);
        }
    }
    Graph reduced(VertexSet(s.clients().begin(), s.clients().end()), edges);
    VertexSet fictitious = s.fictitious();
    for (VertexId hub : certificate) fictitious.erase(hub);
    ReportOptions quiet;
    quiet.oracle_max_qubits = 0;
    return LcReduction{QlanState(std::move(reduced), std::move(roles), std::move(fictitious)), std::move(certificate),
                       to_enhanced_ring(s, quiet).final};
}

SchmidtBounds schmidt_bounds(const Graph& g) {
    SchmidtBounds b;
    b.upper = min_vertex_cover(g).size();
    b.lower = max_cut_rank(g, b.upper);
    return b;
}

namespace {

// Graph LC-equivalent to the ring with the smallest vertex cover found, and
// that cover size. Uses the star reduction when it exists; otherwise searches
// the ring's orbit until the cover meets `target`.
std::pair<Graph, std::size_t> smallest_cover_form(const QlanState& s, const TreeShape& shape, std::size_t target) {
    if (shape.k_c > star_bridge_bound(shape)) {
        Graph reduced = lc_reduce_enhanced_ring(s).reduced.graph();
        const std::size_t cover = min_vertex_cover(reduced).size();
        return {std::move(reduced), cover};
    }
    ReportOptions quiet;
    quiet.oracle_max_qubits = 0;
    Graph best = to_enhanced_ring(s, quiet).final;
    std::size_t cover = min_vertex_cover(best).size();
    if (cover <= target) return {std::move(best), cover};
    for (const Graph& g : oracle::lc_orbit(best)) {
        const std::size_t c = min_vertex_cover(g).size();
        if (c < cover) {
            cover = c;
            best = g;
            if (cover <= target) break;
        }
    }
    return {std::move(best), cover};
}

}  // namespace

std::size_t schmidt_measure_enhanced_ring(const QlanState& s) {
    const TreeShape shape = require_tree(s);
    const std::size_t n_o = shape.n_o;
    auto [graph, cover] = smallest_cover_form(s, shape, n_o);
    SchmidtBounds b{max_cut_rank(graph, cover), cover};
    if (b.lower != b.upper || b.upper != n_o) {
        throw Error(ErrorKind::BoundsMismatch, "cut-rank bound " + std::to_string(b.lower) + " and vertex-cover bound " +
                                                   std::to_string(b.upper) + " do not both equal n_o = " +
                                                   std::to_string(n_o));
    }
    return n_o;
}

std::size_t enhanced_ring_persistency(const QlanState& s) {
    const TreeShape shape = require_tree(s);
    return smallest_cover_form(s, shape, shape.n_o).second;
}

std::size_t persistency(const Graph& g) { return min_vertex_cover(g).size(); }

DemandPlan plan_for_demand(const QlanState& s, const Demand& d) {
    std::map<VertexId, std::size_t> used;
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        auto [a, b] = d.pairs[i];
        require_client(s, a);
        require_client(s, b);
        if (a == b) throw Error(ErrorKind::Parameter, "demand pair with equal endpoints " + s.label(a));
        for (VertexId v : {a, b}) {
            if (s.is_fictitious(v)) {
                throw Error(ErrorKind::Parameter, s.label(v) + " is a fictitious client and carries no traffic");
            }
            if (auto [it, fresh] = used.emplace(v, i); !fresh) {
                throw Error(ErrorKind::OverlappingPairs, s.label(v) + " appears in demand pairs " +
                                                             std::to_string(it->second + 1) + " and " +
                                                             std::to_string(i + 1));
            }
        }
    }

    DemandPlan out;
    out.final = s.graph();
    auto infeasible = [&](std::string reason) {
        out.feasible = false;
        out.plan = {};
        out.final = s.graph();
        out.reason = std::move(reason);
        return out;
    };

    if (d.pairs.empty()) {
        out.feasible = true;
        return out;
    }

    const bool chain = chain_client_count(s).has_value();
    const bool consecutive = std::all_of(d.pairs.begin(), d.pairs.end(), [&](auto p) {
        const std::size_t a = s.index_of(p.first);
        const std::size_t b = s.index_of(p.second);
        const std::size_t lo = std::min(a, b);
        const std::size_t hi = std::max(a, b);
        return lo % 2 == 1 && hi == lo + 1;
    });
    if (chain && consecutive && d.pairs.size() > 1) {
        ReportOptions quiet;
        quiet.oracle_max_qubits = 0;
        TopologyReport r = extract_epr_pairs(s, quiet);
        out.feasible = true;
        out.plan = r.plan;
        out.final = r.final;
        return out;
    }

    std::map<VertexId, std::size_t> owner;
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        auto [a, b] = d.pairs[i];
        MeasurementPlan part = rolling_plan(s, a, b);
        for (const MeasurementStep& step : part.steps) {
            if (auto [it, fresh] = owner.emplace(step.target, i); !fresh) {
                auto [pa, pb] = d.pairs[it->second];
                return infeasible("orchestrator segments of " + s.label(pa) + "-" + s.label(pb) + " and " +
                                  s.label(a) + "-" + s.label(b) + " both need " + s.label(step.target));
            }
        }
        out.plan.steps.insert(out.plan.steps.end(), part.steps.begin(), part.steps.end());
    }
    try {
        out.final = apply_plan(s.graph(), out.plan).final;
    } catch (const Error& e) {
        return infeasible(std::string("composed rolling plan fails: ") + e.what());
    }
    for (auto [a, b] : d.pairs) {
        if (!out.final.has_edge(a, b)) {
            return infeasible("composed rolling plan loses the " + s.label(a) + "-" + s.label(b) + " link");
        }
    }
    out.feasible = true;
    return out;
}

}  // namespace qlan
