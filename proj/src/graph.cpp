#include "raq/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace raq {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("SimpleGraph: vertex count must be in 0..64, got " +
                                    std::to_string(n));
    for (auto& [u, v] : edges_) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("SimpleGraph: edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} out of range 1.." +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("SimpleGraph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("SimpleGraph: duplicate edge");
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        adj_[u - 1] |= std::uint64_t{1} << (v - 1);
        adj_[v - 1] |= std::uint64_t{1} << (u - 1);
    }
}

bool SimpleGraph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::out_of_range("SimpleGraph::adjacent: vertex out of range");
    return (adj_[u - 1] >> (v - 1)) & 1;
}

std::uint64_t SimpleGraph::neighbor_mask(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("SimpleGraph::neighbor_mask: vertex out of range");
    return adj_[v - 1];
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_plus_isolated(int m) {
    if (m < 1) throw std::invalid_argument("complete_plus_isolated: m must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return SimpleGraph(m, std::move(edges));
}

SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(1, n);
    return SimpleGraph(n, std::move(edges));
}

namespace {

void extend_cliques(const SimpleGraph& g, std::uint64_t clique, std::uint64_t candidates,
                    int size, std::vector<long long>& counts) {
    ++counts[static_cast<std::size_t>(size)];
    std::uint64_t rest = candidates;
    while (rest) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        extend_cliques(g, clique | (std::uint64_t{1} << (v - 1)),
                       candidates & g.neighbor_mask(v) & ~((std::uint64_t{2} << (v - 1)) - 1),
                       size + 1, counts);
    }
}

}  // namespace

std::vector<long long> clique_count_by_size(const SimpleGraph& g) {
    std::vector<long long> counts(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << g.vertex_count()) - 1;
    extend_cliques(g, 0, all, 0, counts);
    return counts;
}

}  // namespace raq
