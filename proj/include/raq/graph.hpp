#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace raq {

/// Finite simple graph on vertices 1..n (n <= 64).
///
/// Immutable after construction; edges are stored sorted with u < v, and
/// adjacency is kept as per-vertex bitmasks (bit v-1) for O(1) queries.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : SimpleGraph(n, {}) {}
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    /// Neighbors of v as a bitmask (bit u-1 set iff {u,v} is an edge).
    std::uint64_t neighbor_mask(int v) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

/// Complete graph K_n.
SimpleGraph complete_graph(int n);
/// K_{m-1} together with an isolated vertex m.
SimpleGraph complete_plus_isolated(int m);
/// Path graph 1 - 2 - ... - n.
SimpleGraph path_graph(int n);
/// Cycle graph on n >= 3 vertices.
SimpleGraph cycle_graph(int n);

/// counts[d] = number of d-element cliques of g, for d = 0..n (counts[0] = 1).
std::vector<long long> clique_count_by_size(const SimpleGraph& g);

}  // namespace raq
