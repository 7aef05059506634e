#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlan/graph.hpp"

namespace qlan {

enum class Role { Orchestrator, Client };

std::string_view to_string(Role role);
Role parse_role(std::string_view text);

// A resource graph plus the orchestrator/client split.
//
// Orchestrators o_1..o_{n_o} and clients c_1..c_k are numbered by ascending
// vertex id within each role; builders allocate clients first, so c_i has id
// i-1 and o_i has id k+i-1.
//
// Construction checks the role partition only. Whether every edge is
// vertical (orchestrator-client) is a design principle and is reported by
// validate_design_principles rather than enforced here, so arbitrary states
// can be linted.
class QlanState {
public:
    QlanState(Graph graph, std::map<VertexId, Role> roles, VertexSet fictitious = {});

    const Graph& graph() const { return graph_; }
    const std::map<VertexId, Role>& roles() const { return roles_; }
    Role role(VertexId v) const;
    bool is_client(VertexId v) const { return role(v) == Role::Client; }
    bool is_orchestrator(VertexId v) const { return role(v) == Role::Orchestrator; }

    // Padding clients: ordinary clients in all graph math, excluded from
    // traffic planning.
    const VertexSet& fictitious() const { return fictitious_; }
    bool is_fictitious(VertexId v) const { return fictitious_.contains(v); }

    const std::vector<VertexId>& orchestrators() const { return orchestrators_; }
    const std::vector<VertexId>& clients() const { return clients_; }
    std::size_t orchestrator_count() const { return orchestrators_.size(); }
    std::size_t client_count() const { return clients_.size(); }

    // 1-based, as in o_i / c_i. Throw Parameter when out of range.
    VertexId orchestrator(std::size_t index) const;
    VertexId client(std::size_t index) const;
    // 1-based position of v within its role.
    std::size_t index_of(VertexId v) const;

    // "o3" / "c7".
    std::string label(VertexId v) const;

    bool operator==(const QlanState&) const = default;

private:
    Graph graph_;
    std::map<VertexId, Role> roles_;
    VertexSet fictitious_;
    std::vector<VertexId> orchestrators_;
    std::vector<VertexId> clients_;
};

struct TreeShape {
    std::size_t k_c = 0;
    std::size_t k_b_min = 0;
    std::size_t n_o = 0;

    std::size_t client_count() const { return n_o * (k_c - k_b_min) + k_b_min; }
    bool operator==(const TreeShape&) const = default;
};

struct DesignParams {
    std::size_t n_o = 0;
    std::size_t k = 0;
    std::size_t k_c = 0;
    std::size_t r = 0;
    std::size_t k_b_max = 0;
    std::size_t k_b_min = 0;

    bool operator==(const DesignParams&) const = default;
};

struct Violation {
    // "i", "ii", "iii" or "iv".
    std::string clause;
    std::string detail;
};

struct DesignReport {
    std::optional<DesignParams> params;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool violates(std::string_view clause) const;
};

// Chain state: clients c_1..c_k, orchestrators o_1..o_{k-1}, o_i adjacent to
// c_i and c_{i+1}. `fictitious_clients` are 1-based client indices.
QlanState build_chain_state(std::size_t k, const std::set<std::size_t>& fictitious_clients = {});

// Client indices (1-based) adjacent to each orchestrator of a tree-like state,
// following the up/down split labeling. Entry i-1 holds N_{o_i}.
std::vector<std::vector<std::size_t>> tree_like_neighborhoods(const TreeShape& shape);

// n_o star subgraphs with k_c clients each; consecutive stars share k_b_min
// bridge clients of rank 2. Throws Parameter when k_c <= k_b_min, k_b_min or
// n_o is zero, or the labeling would give some client three or more
// orchestrator neighbours (internal orchestrators need 2*k_b_min bridges to
// fit in each half of the split).
QlanState build_tree_like_state(std::size_t k_c, std::size_t k_b_min, std::size_t n_o,
                                const std::set<std::size_t>& fictitious_clients = {});
QlanState build_tree_like_state(const TreeShape& shape, const std::set<std::size_t>& fictitious_clients = {});

// Recognizers: the state has exactly the structure the builder would produce,
// with o_i / c_i taken in id order. Return the client count / shape.
std::optional<std::size_t> chain_client_count(const QlanState& s);
std::optional<TreeShape> tree_like_shape(const QlanState& s);

DesignReport validate_design_principles(const QlanState& s);

// |N_o ∩ V_c|. Throws Role if o is a client.
std::size_t client_degree(const QlanState& s, VertexId o);

// |N_c ∩ V_o|; c is a bridge when this exceeds one. Throws Role if c is an
// orchestrator.
std::size_t bridge_rank(const QlanState& s, VertexId c);

// Number of neighbours of o that are bridges of rank exactly r (r > 1).
std::size_t bridge_degree(const QlanState& s, VertexId o, std::size_t r);

// Largest / smallest r-rank bridge degree over all orchestrators.
std::size_t max_bridge_degree(const QlanState& s, std::size_t r);
std::size_t min_bridge_degree(const QlanState& s, std::size_t r);

// 1 + number of bridges strictly inside the shortest ci-cj path. Endpoints
// are not counted even when they are bridges themselves.
std::size_t client_proximity(const QlanState& s, VertexId ci, VertexId cj);

}  // namespace qlan
