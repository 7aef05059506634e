#include "qlan/vertex_cover.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qlan/error.hpp"

namespace qlan {

namespace {

struct Dense {
    std::vector<VertexId> labels;
    std::vector<std::uint32_t> rows;
};

Dense densify(const Graph& g, const char* what) {
    if (g.order() > exhaustive_vertex_limit) {
        throw Error(ErrorKind::Resource, std::string(what) + " is limited to " +
                                             std::to_string(exhaustive_vertex_limit) + " vertices, got " +
                                             std::to_string(g.order()));
    }
    Dense d{{g.vertices().begin(), g.vertices().end()}, std::vector<std::uint32_t>(g.order(), 0)};
    auto index = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(d.labels.begin(), d.labels.end(), v) - d.labels.begin());
    };
    for (const Edge& e : g.edges()) {
        d.rows[index(e.a)] |= 1U << index(e.b);
        d.rows[index(e.b)] |= 1U << index(e.a);
    }
    return d;
}

class CoverSearch {
public:
    explicit CoverSearch(const std::vector<std::uint32_t>& rows) : rows_(rows) {
        best_ = 0;
        for (std::size_t v = 0; v < rows_.size(); ++v) {
            if (rows_[v]) best_ |= 1U << v;
        }
    }

    std::uint32_t run() {
        branch(0, 0);
        return best_;
    }

private:
    // Edges not yet covered, as adjacency restricted to uncovered vertices.
    void branch(std::uint32_t chosen, std::uint32_t removed) {
        if (std::popcount(chosen) >= std::popcount(best_)) return;
        std::size_t pick = rows_.size();
        int pick_degree = 0;
        int edges_left = 0;
        for (std::size_t v = 0; v < rows_.size(); ++v) {
            if ((removed >> v) & 1U) continue;
            int d = std::popcount(rows_[v] & ~removed);
            edges_left += d;
            if (d > pick_degree) {
                pick_degree = d;
                pick = v;
            }
        }
        if (pick == rows_.size()) {
            best_ = chosen;
            return;
        }
        edges_left /= 2;
        // Each further vertex covers at most pick_degree edges.
        int needed = (edges_left + pick_degree - 1) / pick_degree;
        if (std::popcount(chosen) + needed >= std::popcount(best_)) return;

        const std::uint32_t v = 1U << pick;
        branch(chosen | v, removed | v);
        const std::uint32_t nbrs = rows_[pick] & ~removed;
        branch(chosen | nbrs, removed | nbrs | v);
    }

    const std::vector<std::uint32_t>& rows_;
    std::uint32_t best_;
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
    Dense d = densify(g, "minimum vertex cover");
    std::uint32_t mask = CoverSearch(d.rows).run();
    VertexSet cover;
    for (std::size_t v = 0; v < d.labels.size(); ++v) {
        if ((mask >> v) & 1U) cover.insert(d.labels[v]);
    }
    return cover;
}

std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 64; ++col) {
        const std::uint64_t m = std::uint64_t{1} << col;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & m)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && (rows[i] & m)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

std::size_t cut_rank(const Graph& g, const VertexSet& side) {
    std::vector<std::uint64_t> rows;
    std::vector<VertexId> other;
    for (VertexId v : g.vertices()) {
        if (!side.contains(v)) other.push_back(v);
    }
    if (other.size() > 64) {
        throw Error(ErrorKind::Resource, "cut rank supports at most 64 columns");
    }
    for (VertexId a : side) {
        const VertexSet& nbrs = g.neighbors(a);
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < other.size(); ++j) {
            if (nbrs.contains(other[j])) r |= std::uint64_t{1} << j;
        }
        rows.push_back(r);
    }
    return gf2_rank(std::move(rows));
}

std::size_t max_cut_rank(const Graph& g, std::optional<std::size_t> stop_at) {
    Dense d = densify(g, "maximum cut rank");
    const std::size_t n = d.labels.size();
    if (n < 2) return 0;
    std::size_t best = 0;
    // Fix the last vertex on the complementary side to visit each
    // bipartition once.
    const std::uint32_t limit = 1U << (n - 1);
    std::vector<std::uint64_t> rows;
    for (std::uint32_t side = 1; side < limit; ++side) {
        rows.clear();
        const std::uint32_t rest = ~side & ((1U << n) - 1);
        for (std::size_t v = 0; v < n; ++v) {
            if ((side >> v) & 1U) rows.push_back(d.rows[v] & rest);
        }
        best = std::max(best, gf2_rank(rows));
        if (stop_at && best >= *stop_at) break;
    }
    return best;
}

}  // namespace qlan
