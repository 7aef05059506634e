#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace qlan {

// Vertex ids are stable labels. Deleting a vertex leaves a gap; ids are never
// renumbered, so measurement plans keep referring to the original labels.
using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;

// Unordered pair stored with the smaller id first.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    Edge() = default;
    Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    auto operator<=>(const Edge&) const = default;
};

struct Path {
    std::vector<VertexId> vertices;

    // Number of edges traversed.
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool operator==(const Path&) const = default;
};

// Finite simple undirected graph. Immutable: every operation below returns a
// new value. Equality compares vertex sets and canonical edge lists.
class Graph {
public:
    Graph() = default;

    // Throws InvalidGraph on self-loops or dangling endpoints. Duplicate edges
    // (in either orientation) are collapsed.
    Graph(VertexSet vertices, const std::vector<Edge>& edges);

    static Graph with_vertices(VertexSet vertices) { return Graph(std::move(vertices), {}); }

    const VertexSet& vertices() const { return vertices_; }
    // Sorted, each edge once with a < b.
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t order() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(VertexId a) const { return vertices_.contains(a); }
    bool has_edge(VertexId a, VertexId b) const;
    std::size_t degree(VertexId a) const;

    // Adjacency set of `a`. Throws UnknownVertex.
    const VertexSet& neighbors(VertexId a) const;

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    struct Trusted {};
    Graph(Trusted, std::map<VertexId, VertexSet> adjacency);

    void rebuild_edges();

    friend Graph local_complement(const Graph& g, VertexId a);
    friend Graph delete_vertex(const Graph& g, VertexId a);
    friend Graph complement(const Graph& g);
    friend Graph induced_subgraph(const Graph& g, const VertexSet& subset);

    VertexSet vertices_;
    std::map<VertexId, VertexSet> adjacency_;
    std::vector<Edge> edges_;
};

// N_a. Throws UnknownVertex.
VertexSet open_neighborhood(const Graph& g, VertexId a);
// N_a plus a itself.
VertexSet closed_neighborhood(const Graph& g, VertexId a);

// Vertices `subset`, edges of g with both endpoints in `subset`.
Graph induced_subgraph(const Graph& g, const VertexSet& subset);

// Toggles every pair inside N_a. Involution.
Graph local_complement(const Graph& g, VertexId a);

// Removes `a` and all incident edges.
Graph delete_vertex(const Graph& g, VertexId a);

// Same vertices, edge set V^2 \ E.
Graph complement(const Graph& g);

// Breadth-first shortest path. Among equally short paths the one whose
// vertex-id sequence is lexicographically smallest is returned. Absent when
// a and b lie in different components.
std::optional<Path> shortest_path(const Graph& g, VertexId a, VertexId b);

bool is_star_vertex(const Graph& g, VertexId s);

// Breadth-first 2-coloring per connected component. The smallest vertex of
// each component goes to the first part.
std::optional<std::pair<VertexSet, VertexSet>> is_two_colorable(const Graph& g);

// Convenience builders used throughout tests and the CLI.
Graph path_graph(const std::vector<VertexId>& order);
Graph complete_graph(const VertexSet& vertices);
Graph star_graph(VertexId center, const VertexSet& leaves);

}  // namespace qlan
