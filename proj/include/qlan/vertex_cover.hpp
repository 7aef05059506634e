#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlan/graph.hpp"

namespace qlan {

// Largest graph accepted by the exhaustive routines below.
inline constexpr std::size_t exhaustive_vertex_limit = 24;

// A minimum vertex cover, found by branch and bound. Throws Resource above
// exhaustive_vertex_limit vertices.
VertexSet min_vertex_cover(const Graph& g);

// Rank over GF(2) of the given bit rows.
std::size_t gf2_rank(std::vector<std::uint64_t> rows);

// Rank over GF(2) of the adjacency block between `side` and its complement.
std::size_t cut_rank(const Graph& g, const VertexSet& side);

// Maximum cut rank over all bipartitions. The search stops as soon as
// `stop_at` is reached (pass a known upper bound to finish early without
// changing the answer). Throws Resource above exhaustive_vertex_limit.
std::size_t max_cut_rank(const Graph& g, std::optional<std::size_t> stop_at = std::nullopt);

}  // namespace qlan
