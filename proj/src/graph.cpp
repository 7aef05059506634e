#include "qlan/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qlan/error.hpp"

namespace qlan {

namespace {

[[noreturn]] void unknown_vertex(VertexId a) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(a) + " is not in the graph");
}

}  // namespace

Graph::Graph(VertexSet vertices, const std::vector<Edge>& edges) : vertices_(std::move(vertices)) {
    for (VertexId v : vertices_) {
        adjacency_[v];
    }
    for (const Edge& e : edges) {
        if (e.a == e.b) {
            throw Error(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(e.a));
        }
        if (!vertices_.contains(e.a) || !vertices_.contains(e.b)) {
            throw Error(ErrorKind::InvalidGraph,
                        "edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} has an endpoint outside the vertex set");
        }
        adjacency_[e.a].insert(e.b);
        adjacency_[e.b].insert(e.a);
    }
    rebuild_edges();
}

Graph::Graph(Trusted, std::map<VertexId, VertexSet> adjacency) : adjacency_(std::move(adjacency)) {
    for (const auto& [v, _] : adjacency_) {
        vertices_.insert(vertices_.end(), v);
    }
    rebuild_edges();
}

void Graph::rebuild_edges() {
    edges_.clear();
    for (const auto& [a, nbrs] : adjacency_) {
        for (auto it = nbrs.upper_bound(a); it != nbrs.end(); ++it) {
            edges_.emplace_back(a, *it);
        }
    }
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    auto it = adjacency_.find(a);
    return it != adjacency_.end() && it->second.contains(b);
}

std::size_t Graph::degree(VertexId a) const { return neighbors(a).size(); }

const VertexSet& Graph::neighbors(VertexId a) const {
    auto it = adjacency_.find(a);
    if (it == adjacency_.end()) {
        unknown_vertex(a);
    }
    return it->second;
}

VertexSet open_neighborhood(const Graph& g, VertexId a) { return g.neighbors(a); }

VertexSet closed_neighborhood(const Graph& g, VertexId a) {
    VertexSet out = g.neighbors(a);
    out.insert(a);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
    std::map<VertexId, VertexSet> adjacency;
    for (VertexId v : subset) {
        if (!g.has_vertex(v)) {
            unknown_vertex(v);
        }
        auto& row = adjacency[v];
        for (VertexId u : g.adjacency_.at(v)) {
            if (subset.contains(u)) {
                row.insert(u);
            }
        }
    }
    return Graph(Graph::Trusted{}, std::move(adjacency));
}

Graph local_complement(const Graph& g, VertexId a) {
    const VertexSet& nbrs = g.neighbors(a);
    auto adjacency = g.adjacency_;
    for (auto i = nbrs.begin(); i != nbrs.end(); ++i) {
        for (auto j = std::next(i); j != nbrs.end(); ++j) {
            auto& row_i = adjacency[*i];
            auto& row_j = adjacency[*j];
            if (row_i.erase(*j) == 0) {
                row_i.insert(*j);
                row_j.insert(*i);
            } else {
                row_j.erase(*i);
            }
        }
    }
    return Graph(Graph::Trusted{}, std::move(adjacency));
}

Graph delete_vertex(const Graph& g, VertexId a) {
    const VertexSet& nbrs = g.neighbors(a);
    auto adjacency = g.adjacency_;
    for (VertexId b : nbrs) {
        adjacency[b].erase(a);
    }
    adjacency.erase(a);
    return Graph(Graph::Trusted{}, std::move(adjacency));
}

Graph complement(const Graph& g) {
    std::map<VertexId, VertexSet> adjacency;
    for (VertexId a : g.vertices()) {
        auto& row = adjacency[a];
        const auto& old = g.adjacency_.at(a);
        for (VertexId b : g.vertices()) {
            if (b != a && !old.contains(b)) {
                row.insert(b);
            }
        }
    }
    return Graph(Graph::Trusted{}, std::move(adjacency));
}

std::optional<Path> shortest_path(const Graph& g, VertexId a, VertexId b) {
    if (!g.has_vertex(a)) unknown_vertex(a);
    if (!g.has_vertex(b)) unknown_vertex(b);

    // Distances to b; then walk greedily from a choosing the smallest id that
    // lies one step closer. This yields the lexicographically smallest
    // shortest path.
    std::map<VertexId, std::size_t> dist{{b, 0}};
    std::deque<VertexId> queue{b};
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(x)) {
            if (dist.emplace(y, dist[x] + 1).second) {
                queue.push_back(y);
            }
        }
    }
    auto it = dist.find(a);
    if (it == dist.end()) {
        return std::nullopt;
    }
    Path path{{a}};
    std::size_t remaining = it->second;
    VertexId cur = a;
    while (remaining > 0) {
        for (VertexId y : g.neighbors(cur)) {
            auto dy = dist.find(y);
            if (dy != dist.end() && dy->second + 1 == remaining) {
                cur = y;
                break;
            }
        }
        path.vertices.push_back(cur);
        --remaining;
    }
    return path;
}

bool is_star_vertex(const Graph& g, VertexId s) { return g.degree(s) + 1 == g.order(); }

std::optional<std::pair<VertexSet, VertexSet>> is_two_colorable(const Graph& g) {
    std::map<VertexId, int> color;
    VertexSet first;
    VertexSet second;
    for (VertexId start : g.vertices()) {
        if (color.contains(start)) {
            continue;
        }
        color[start] = 0;
        first.insert(start);
        std::deque<VertexId> queue{start};
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (VertexId y : g.neighbors(x)) {
                auto found = color.find(y);
                if (found == color.end()) {
                    color[y] = 1 - color[x];
                    (color[y] == 0 ? first : second).insert(y);
                    queue.push_back(y);
                } else if (found->second == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(std::move(first), std::move(second));
}

Graph path_graph(const std::vector<VertexId>& order) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        edges.emplace_back(order[i], order[i + 1]);
    }
    return Graph(VertexSet(order.begin(), order.end()), edges);
}

Graph complete_graph(const VertexSet& vertices) {
    std::vector<Edge> edges;
    for (auto i = vertices.begin(); i != vertices.end(); ++i) {
        for (auto j = std::next(i); j != vertices.end(); ++j) {
            edges.emplace_back(*i, *j);
        }
    }
    return Graph(vertices, edges);
}

Graph star_graph(VertexId center, const VertexSet& leaves) {
    VertexSet vertices = leaves;
    vertices.insert(center);
    std::vector<Edge> edges;
    for (VertexId leaf : leaves) {
        edges.emplace_back(center, leaf);
    }
    return Graph(vertices, edges);
}

}  // namespace qlan
