#include "qlan/model.hpp"

#include <algorithm>
#include <cctype>

#include "qlan/error.hpp"

namespace qlan {

namespace {

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }
std::size_t floor_half(std::size_t x) { return x / 2; }

std::set<VertexId> fictitious_ids(const std::set<std::size_t>& indices, std::size_t k) {
    std::set<VertexId> ids;
    for (std::size_t i : indices) {
        if (i < 1 || i > k) {
            throw Error(ErrorKind::Parameter,
                        "fictitious client index " + std::to_string(i) + " outside 1.." + std::to_string(k));
        }
        ids.insert(static_cast<VertexId>(i - 1));
    }
    return ids;
}

// Clients occupy ids 0..k-1, orchestrators k..k+n_o-1.
QlanState assemble(std::size_t k, std::size_t n_o, const std::vector<std::vector<std::size_t>>& neighborhoods,
                   const std::set<std::size_t>& fictitious_clients) {
    VertexSet vertices;
    std::map<VertexId, Role> roles;
    for (std::size_t i = 0; i < k; ++i) {
        vertices.insert(static_cast<VertexId>(i));
        roles[static_cast<VertexId>(i)] = Role::Client;
    }
    std::vector<Edge> edges;
    for (std::size_t o = 0; o < n_o; ++o) {
        auto id = static_cast<VertexId>(k + o);
        vertices.insert(id);
        roles[id] = Role::Orchestrator;
        for (std::size_t c : neighborhoods[o]) {
            edges.emplace_back(id, static_cast<VertexId>(c - 1));
        }
    }
    return QlanState(Graph(std::move(vertices), edges), std::move(roles), fictitious_ids(fictitious_clients, k));
}

// Neighbour client indices of orchestrator number `o` (1-based), sorted.
std::vector<std::size_t> client_indices(const QlanState& s, VertexId o) {
    std::vector<std::size_t> out;
    for (VertexId v : s.graph().neighbors(o)) {
        if (s.is_client(v)) {
            out.push_back(s.index_of(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_role(const QlanState& s, VertexId v, Role role) {
    if (s.role(v) != role) {
        throw Error(ErrorKind::Role, "vertex " + std::to_string(v) + " is not " +
                                         (role == Role::Client ? "a client" : "an orchestrator"));
    }
}

std::string check_tree_shape(const TreeShape& shape) {
    if (shape.n_o < 1) return "n_o must be at least 1";
    if (shape.k_b_min < 1) return "k_b_min must be at least 1";
    if (shape.k_c <= shape.k_b_min) return "k_c must exceed k_b_min";
    if (shape.n_o >= 3) {
        // Internal orchestrators need room for two disjoint bridge groups in
        // each half of the split; otherwise a client ends up with rank >= 3.
        bool up_ok = ceil_half(shape.k_c) >= 2 * ceil_half(shape.k_b_min);
        bool down_ok = floor_half(shape.k_c) >= 2 * floor_half(shape.k_b_min);
        if (!up_ok || !down_ok) {
            return "k_c=" + std::to_string(shape.k_c) + " cannot host 2*k_b_min=" + std::to_string(2 * shape.k_b_min) +
                   " rank-2 bridges per internal orchestrator under the up/down labeling";
        }
    }
    return {};
}

}  // namespace

std::string_view to_string(Role role) { return role == Role::Client ? "client" : "orchestrator"; }

Role parse_role(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "client") return Role::Client;
    if (lower == "orchestrator") return Role::Orchestrator;
    throw Error(ErrorKind::Parse, "unknown role '" + std::string(text) + "'");
}

QlanState::QlanState(Graph graph, std::map<VertexId, Role> roles, VertexSet fictitious)
    : graph_(std::move(graph)), roles_(std::move(roles)), fictitious_(std::move(fictitious)) {
    for (VertexId v : graph_.vertices()) {
        if (!roles_.contains(v)) {
            throw Error(ErrorKind::Role, "vertex " + std::to_string(v) + " has no role");
        }
    }
    for (const auto& [v, role] : roles_) {
        if (!graph_.has_vertex(v)) {
            throw Error(ErrorKind::Role, "role given for vertex " + std::to_string(v) + " which is not in the graph");
        }
        (role == Role::Client ? clients_ : orchestrators_).push_back(v);
    }
    if (orchestrators_.empty() || clients_.empty()) {
        throw Error(ErrorKind::Role, "a QLAN state needs at least one orchestrator and one client");
    }
    for (VertexId v : fictitious_) {
        if (!roles_.contains(v) || roles_.at(v) != Role::Client) {
            throw Error(ErrorKind::Role, "fictitious vertex " + std::to_string(v) + " is not a client");
        }
    }
}

Role QlanState::role(VertexId v) const {
    auto it = roles_.find(v);
    if (it == roles_.end()) {
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the state");
    }
    return it->second;
}

VertexId QlanState::orchestrator(std::size_t index) const {
    if (index < 1 || index > orchestrators_.size()) {
        throw Error(ErrorKind::Parameter, "orchestrator index " + std::to_string(index) + " out of range");
    }
    return orchestrators_[index - 1];
}

VertexId QlanState::client(std::size_t index) const {
    if (index < 1 || index > clients_.size()) {
        throw Error(ErrorKind::Parameter, "client index " + std::to_string(index) + " out of range");
    }
    return clients_[index - 1];
}

std::size_t QlanState::index_of(VertexId v) const {
    const auto& pool = is_client(v) ? clients_ : orchestrators_;
    return static_cast<std::size_t>(std::lower_bound(pool.begin(), pool.end(), v) - pool.begin()) + 1;
}

std::string QlanState::label(VertexId v) const {
    return (is_client(v) ? "c" : "o") + std::to_string(index_of(v));
}

bool DesignReport::violates(std::string_view clause) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.clause == clause; });
}

QlanState build_chain_state(std::size_t k, const std::set<std::size_t>& fictitious_clients) {
    if (k < 2) {
        throw Error(ErrorKind::Parameter, "a chain state needs at least 2 clients, got " + std::to_string(k));
    }
    std::vector<std::vector<std::size_t>> neighborhoods;
    for (std::size_t i = 1; i < k; ++i) {
        neighborhoods.push_back({i, i + 1});
    }
    return assemble(k, k - 1, neighborhoods, fictitious_clients);
}

std::vector<std::vector<std::size_t>> tree_like_neighborhoods(const TreeShape& shape) {
    if (auto why = check_tree_shape(shape); !why.empty()) {
        throw Error(ErrorKind::Parameter, why);
    }
    const std::size_t up_size = ceil_half(shape.k_c);
    const std::size_t down_size = floor_half(shape.k_c);
    // Size of the up group.
    const std::size_t k_f = up_size * shape.n_o - ceil_half(shape.k_b_min) * (shape.n_o - 1);
    // Per-orchestrator starting offsets grow by (half size - half bridges).
    const std::size_t up_step = up_size - ceil_half(shape.k_b_min);
    const std::size_t down_step = down_size - floor_half(shape.k_b_min);

    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 1; i <= shape.n_o; ++i) {
        std::vector<std::size_t> nbrs;
        const std::size_t up_start = 1 + up_step * (i - 1);
        for (std::size_t j = 0; j < up_size; ++j) {
            nbrs.push_back(up_start + j);
        }
        const std::size_t down_start = k_f + 1 + down_step * (i - 1);
        for (std::size_t j = 0; j < down_size; ++j) {
            nbrs.push_back(down_start + j);
        }
        out.push_back(std::move(nbrs));
    }
    return out;
}

QlanState build_tree_like_state(std::size_t k_c, std::size_t k_b_min, std::size_t n_o,
                                const std::set<std::size_t>& fictitious_clients) {
    return build_tree_like_state(TreeShape{k_c, k_b_min, n_o}, fictitious_clients);
}

QlanState build_tree_like_state(const TreeShape& shape, const std::set<std::size_t>& fictitious_clients) {
    auto neighborhoods = tree_like_neighborhoods(shape);
    return assemble(shape.client_count(), shape.n_o, neighborhoods, fictitious_clients);
}

std::optional<std::size_t> chain_client_count(const QlanState& s) {
    const std::size_t k = s.client_count();
    if (k < 2 || s.orchestrator_count() != k - 1 || s.graph().edge_count() != 2 * (k - 1)) {
        return std::nullopt;
    }
    for (std::size_t i = 1; i < k; ++i) {
        if (client_indices(s, s.orchestrator(i)) != std::vector<std::size_t>{i, i + 1}) {
            return std::nullopt;
        }
    }
    return k;
}

std::optional<TreeShape> tree_like_shape(const QlanState& s) {
    TreeShape shape;
    shape.n_o = s.orchestrator_count();
    if (shape.n_o == 0) {
        return std::nullopt;
    }
    shape.k_c = s.graph().degree(s.orchestrator(1));
    if (shape.n_o >= 2) {
        const VertexSet& a = s.graph().neighbors(s.orchestrator(1));
        const VertexSet& b = s.graph().neighbors(s.orchestrator(2));
        shape.k_b_min = static_cast<std::size_t>(
            std::count_if(a.begin(), a.end(), [&](VertexId v) { return b.contains(v); }));
    } else {
        shape.k_b_min = 1;
    }
    if (!check_tree_shape(shape).empty() || shape.client_count() != s.client_count() ||
        s.graph().edge_count() != shape.n_o * shape.k_c) {
        return std::nullopt;
    }
    auto expected = tree_like_neighborhoods(shape);
    for (std::size_t i = 1; i <= shape.n_o; ++i) {
        auto got = client_indices(s, s.orchestrator(i));
        auto want = expected[i - 1];
        std::sort(want.begin(), want.end());
        if (got != want) {
            return std::nullopt;
        }
    }
    return shape;
}

std::size_t client_degree(const QlanState& s, VertexId o) {
    require_role(s, o, Role::Orchestrator);
    const VertexSet& nbrs = s.graph().neighbors(o);
    return static_cast<std::size_t>(std::count_if(nbrs.begin(), nbrs.end(), [&](VertexId v) { return s.is_client(v); }));
}

std::size_t bridge_rank(const QlanState& s, VertexId c) {
    require_role(s, c, Role::Client);
    const VertexSet& nbrs = s.graph().neighbors(c);
    return static_cast<std::size_t>(
        std::count_if(nbrs.begin(), nbrs.end(), [&](VertexId v) { return s.is_orchestrator(v); }));
}

std::size_t bridge_degree(const QlanState& s, VertexId o, std::size_t r) {
    require_role(s, o, Role::Orchestrator);
    if (r <= 1) {
        throw Error(ErrorKind::Parameter, "bridge rank must exceed one, got " + std::to_string(r));
    }
    std::size_t count = 0;
    for (VertexId v : s.graph().neighbors(o)) {
        if (s.is_client(v) && bridge_rank(s, v) == r) {
            ++count;
        }
    }
    return count;
}

std::size_t max_bridge_degree(const QlanState& s, std::size_t r) {
    std::size_t best = 0;
    for (VertexId o : s.orchestrators()) {
        best = std::max(best, bridge_degree(s, o, r));
    }
    return best;
}

std::size_t min_bridge_degree(const QlanState& s, std::size_t r) {
    std::size_t best = SIZE_MAX;
    for (VertexId o : s.orchestrators()) {
        best = std::min(best, bridge_degree(s, o, r));
    }
    return best;
}

DesignReport validate_design_principles(const QlanState& s) {
    DesignReport report;
    auto violate = [&](std::string clause, std::string detail) {
        report.violations.push_back({std::move(clause), std::move(detail)});
    };

    // (i) partition of V into V_o and V_c.
    if (s.roles().size() != s.graph().order()) {
        violate("i", "roles do not cover the vertex set exactly");
    }

    // (ii) more than one orchestration qubit.
    const std::size_t n_o = s.orchestrator_count();
    const std::size_t k = s.client_count();
    if (n_o <= 1) {
        violate("ii", "|V_o| = " + std::to_string(n_o) + ", need more than one orchestration vertex");
    }

    // (iii) only vertical edges.
    for (const Edge& e : s.graph().edges()) {
        if (s.role(e.a) == s.role(e.b)) {
            violate("iii", s.label(e.a) + "-" + s.label(e.b) + " joins two vertices of the same role");
        }
    }

    // (iv) uniform client degree, single bridge rank, bridge degrees within {max, min}.
    std::set<std::size_t> client_degrees;
    for (VertexId o : s.orchestrators()) {
        client_degrees.insert(client_degree(s, o));
    }
    std::set<std::size_t> ranks;
    for (VertexId c : s.clients()) {
        if (std::size_t r = bridge_rank(s, c); r > 1) {
            ranks.insert(r);
        }
    }
    std::size_t k_c = client_degrees.size() == 1 ? *client_degrees.begin() : 0;
    std::size_t rank = 0;
    std::size_t k_b_max = 0;
    std::size_t k_b_min = 0;
    if (client_degrees.size() != 1) {
        violate("iv", "client degree differs across orchestration vertices");
    }
    if (ranks.empty()) {
        violate("iv", "no bridge client (rank > 1) exists");
    } else if (ranks.size() > 1) {
        violate("iv", "bridges of more than one rank");
    } else {
        rank = *ranks.begin();
        std::set<std::size_t> degrees;
        for (VertexId o : s.orchestrators()) {
            std::size_t d = bridge_degree(s, o, rank);
            if (d == 0) {
                violate("iv", s.label(o) + " has no rank-" + std::to_string(rank) + " bridge");
            }
            degrees.insert(d);
        }
        if (degrees.size() > 2) {
            violate("iv", "bridge degrees take more than two distinct values");
        }
        k_b_max = *degrees.rbegin();
        k_b_min = *degrees.begin();
    }

    if (report.ok()) {
        report.params = DesignParams{n_o, k, k_c, rank, k_b_max, k_b_min};
    }
    return report;
}

std::size_t client_proximity(const QlanState& s, VertexId ci, VertexId cj) {
    require_role(s, ci, Role::Client);
    require_role(s, cj, Role::Client);
    if (ci == cj) {
        throw Error(ErrorKind::Parameter, "proximity needs two distinct clients");
    }
    auto path = shortest_path(s.graph(), ci, cj);
    if (!path) {
        throw Error(ErrorKind::Disconnected, s.label(ci) + " and " + s.label(cj) + " are not connected");
    }
    std::size_t bridges = 0;
    for (std::size_t i = 1; i + 1 < path->vertices.size(); ++i) {
        VertexId v = path->vertices[i];
        if (s.is_client(v) && bridge_rank(s, v) > 1) {
            ++bridges;
        }
    }
    return 1 + bridges;
}

}  // namespace qlan
