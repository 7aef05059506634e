#include "qlan/oracle/lc_orbit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>

#include "qlan/error.hpp"

namespace qlan::oracle {

namespace {

constexpr std::size_t max_vertices = 16;

using Rows = std::array<std::uint16_t, max_vertices>;

struct Key {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.lo * 0x9e3779b97f4a7c15ULL ^ k.hi);
    }
};

// Packs the strict upper triangle of the adjacency matrix into 120 bits.
Key pack(const Rows& rows, std::size_t n) {
    Key k;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++pos) {
            if ((rows[i] >> j) & 1U) {
                (pos < 64 ? k.lo : k.hi) |= std::uint64_t{1} << (pos % 64);
            }
        }
    }
    return k;
}

Rows unpack(const Key& k, std::size_t n) {
    Rows rows{};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++pos) {
            if (((pos < 64 ? k.lo : k.hi) >> (pos % 64)) & 1U) {
                rows[i] |= static_cast<std::uint16_t>(1U << j);
                rows[j] |= static_cast<std::uint16_t>(1U << i);
            }
        }
    }
    return rows;
}

void complement_at(Rows& rows, std::size_t a) {
    const std::uint16_t nbrs = rows[a];
    for (std::size_t u = 0; u < max_vertices; ++u) {
        if ((nbrs >> u) & 1U) rows[u] ^= static_cast<std::uint16_t>(nbrs & ~(1U << u));
    }
}

struct Indexed {
    std::vector<VertexId> labels;
    Rows rows{};
};

Indexed index_graph(const Graph& g) {
    if (g.order() > max_vertices) {
        throw Error(ErrorKind::Resource, "orbit search supports at most 16 vertices, got " + std::to_string(g.order()));
    }
    Indexed out;
    out.labels.assign(g.vertices().begin(), g.vertices().end());
    std::unordered_map<VertexId, std::size_t> at;
    for (std::size_t i = 0; i < out.labels.size(); ++i) at[out.labels[i]] = i;
    for (const Edge& e : g.edges()) {
        out.rows[at[e.a]] |= static_cast<std::uint16_t>(1U << at[e.b]);
        out.rows[at[e.b]] |= static_cast<std::uint16_t>(1U << at[e.a]);
    }
    return out;
}

Graph to_graph(const Rows& rows, const std::vector<VertexId>& labels) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if ((rows[i] >> j) & 1U) edges.emplace_back(labels[i], labels[j]);
        }
    }
    return Graph(VertexSet(labels.begin(), labels.end()), edges);
}

struct Parent {
    Key from;
    std::uint8_t vertex = 0;
    bool root = false;
};

// Explores the orbit; stops early when `target` is reached. Returns the
// parent map and BFS order.
struct Search {
    std::unordered_map<Key, Parent, KeyHash> parents;
    std::vector<Key> order;
    bool found = false;
};

Search explore(const Rows& start, std::size_t n, const Key* target, std::size_t cap) {
    Search s;
    Key root = pack(start, n);
    s.parents.emplace(root, Parent{root, 0, true});
    s.order.push_back(root);
    if (target && *target == root) {
        s.found = true;
        return s;
    }
    for (std::size_t head = 0; head < s.order.size(); ++head) {
        const Key cur = s.order[head];
        const Rows rows = unpack(cur, n);
        for (std::size_t a = 0; a < n; ++a) {
            if (std::popcount(rows[a]) < 2) continue;
            Rows next = rows;
            complement_at(next, a);
            Key k = pack(next, n);
            if (!s.parents.emplace(k, Parent{cur, static_cast<std::uint8_t>(a), false}).second) continue;
            s.order.push_back(k);
            if (target && *target == k) {
                s.found = true;
                return s;
            }
            if (s.order.size() > cap) {
                throw Error(ErrorKind::Resource,
                            "local-complementation orbit exceeds the cap of " + std::to_string(cap) + " graphs");
            }
        }
    }
    return s;
}

}  // namespace

std::optional<std::vector<VertexId>> lc_equivalent(const Graph& g1, const Graph& g2, const OracleConfig& config) {
    if (g1.vertices() != g2.vertices()) {
        throw Error(ErrorKind::Parameter, "LC equivalence needs graphs on the same labelled vertex set");
    }
    Indexed a = index_graph(g1);
    Indexed b = index_graph(g2);
    const std::size_t n = a.labels.size();
    Key target = pack(b.rows, n);
    Search s = explore(a.rows, n, &target, config.orbit_cap);
    if (!s.found) return std::nullopt;
    std::vector<VertexId> witness;
    for (Key k = target; !s.parents.at(k).root; k = s.parents.at(k).from) {
        witness.push_back(a.labels[s.parents.at(k).vertex]);
    }
    std::reverse(witness.begin(), witness.end());
    return witness;
}

std::vector<Graph> lc_orbit(const Graph& g, const OracleConfig& config) {
    Indexed a = index_graph(g);
    Search s = explore(a.rows, a.labels.size(), nullptr, config.orbit_cap);
    std::vector<Graph> out;
    out.reserve(s.order.size());
    for (const Key& k : s.order) out.push_back(to_graph(unpack(k, a.labels.size()), a.labels));
    return out;
}

std::vector<LocalGate> lc_gates(const Graph& g, const std::vector<VertexId>& sequence) {
    std::vector<LocalGate> gates;
    Graph cur = g;
    for (VertexId a : sequence) {
        // sqrt(-iX) on a and sqrt(iZ) on each neighbour, as H S H and Sdg.
        for (VertexId b : cur.neighbors(a)) gates.push_back({b, GateKind::Sdg});
        gates.push_back({a, GateKind::H});
        gates.push_back({a, GateKind::S});
        gates.push_back({a, GateKind::H});
        cur = local_complement(cur, a);
    }
    return gates;
}

}  // namespace qlan::oracle
