#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "raq/graph.hpp"
#include "raq/simplicial.hpp"

using namespace raq;

namespace {

// Independent oracle: count cliques by checking all vertex subsets.
std::vector<long long> clique_counts_by_subsets(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool clique = true;
        auto vs = mask_to_vertices(mask);
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size() && clique; ++b)
                clique = g.adjacent(vs[a], vs[b]);
        if (clique) ++counts[vs.size()];
    }
    return counts;
}

}  // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    SimpleGraph g(3, {{2, 1}});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("clique counts") {
    CHECK(clique_count_by_size(SimpleGraph(4)) == std::vector<long long>{1, 4, 0, 0, 0});
    CHECK(clique_count_by_size(complete_graph(3)) == std::vector<long long>{1, 3, 3, 1});
    CHECK(clique_count_by_size(cycle_graph(4)) == std::vector<long long>{1, 4, 4, 0, 0});

    for (std::uint64_t bits = 0; bits < 64; ++bits) {  // all graphs on 4 vertices
        std::vector<std::pair<int, int>> edges;
        int idx = 0;
        for (int u = 1; u <= 4; ++u)
            for (int v = u + 1; v <= 4; ++v, ++idx)
                if (bits >> idx & 1) edges.emplace_back(u, v);
        SimpleGraph g(4, edges);
        CHECK(clique_count_by_size(g) == clique_counts_by_subsets(g));
    }
}

TEST_CASE("flag complex") {
    SUBCASE("4-cycle has no triangles") {
        auto k = flag_complex(cycle_graph(4));
        CHECK(k.face_masks().size() == 1 + 4 + 4);
        CHECK(k.dimension() == 1);
    }
    SUBCASE("K3 gives the full 2-simplex") {
        auto k = flag_complex(complete_graph(3));
        CHECK(k.face_masks().size() == 8);
        CHECK(k.contains({1, 2, 3}));
    }
    SUBCASE("complete plus isolated vertex") {
        for (int m = 2; m <= 5; ++m) {
            auto k = flag_complex(complete_plus_isolated(m));
            // Δ^{[m-1]} ⊔ {m}: subsets of [m-1], plus the isolated vertex.
            CHECK(k.face_masks().size() ==
                  (std::uint64_t{1} << (m - 1)) + 1);
            CHECK(k.contains(mask_to_vertices((std::uint64_t{1} << (m - 1)) - 1)));
            CHECK_FALSE(k.contains({1, m}));
        }
    }
    SUBCASE("1-skeleton round trip on flag complexes") {
        for (const auto& g : {path_graph(4), cycle_graph(5), complete_graph(4), SimpleGraph(3)}) {
            auto k = flag_complex(g);
            CHECK(one_skeleton(k) == g);
            CHECK(is_flag(k));
        }
    }
}

TEST_CASE("full subcomplex") {
    auto simplex2 = flag_complex(complete_graph(3));
    SUBCASE("of the 2-simplex") {
        auto sub = full_subcomplex(simplex2, {1, 2});
        CHECK(sub.vertex_count() == 2);
        CHECK(sub.contains({1, 2}));
        CHECK(sub.face_masks().size() == 4);
    }
    SUBCASE("of the boundary of the triangle") {
        SimplicialComplex boundary(3, {{1, 2}, {1, 3}, {2, 3}});
        auto sub = full_subcomplex(boundary, {1, 2});
        CHECK(sub.contains({1, 2}));
        CHECK(sub.face_masks().size() == 4);
    }
    SUBCASE("complete plus isolated: subsets avoiding the isolated vertex") {
        int m = 4;
        auto k = flag_complex(complete_plus_isolated(m));
        auto sub = full_subcomplex(k, {1, 3});
        CHECK(sub == flag_complex(complete_graph(2)));
    }
    SUBCASE("identity and transitivity") {
        auto k = flag_complex(path_graph(4));
        CHECK(full_subcomplex(k, {1, 2, 3, 4}) == k);
        // (K_I)_J = K_J for J ⊆ I, with J re-indexed through I.
        auto ki = full_subcomplex(k, {1, 2, 4});   // J = {2,4} sits at positions {2,3} in I
        CHECK(full_subcomplex(ki, {2, 3}) == full_subcomplex(k, {2, 4}));
    }
    SUBCASE("empty subset rejected") {
        CHECK_THROWS_AS(full_subcomplex(simplex2, std::vector<int>{}), std::invalid_argument);
    }
}

TEST_CASE("link and deletion") {
    SUBCASE("link of a vertex of the 2-simplex") {
        auto k = flag_complex(complete_graph(3));
        auto lk = link(k, 3);
        CHECK(lk.vertex_count() == 2);
        CHECK(lk.contains({1, 2}));
    }
    SUBCASE("deletion of the isolated vertex") {
        auto k = flag_complex(complete_plus_isolated(4));
        CHECK(deletion(k, 4) == flag_complex(complete_graph(3)));
    }
    SUBCASE("flag test via links") {
        // For flag k, the full subcomplex on the link's vertex set is the link.
        for (const auto& g : {path_graph(4), cycle_graph(5), complete_graph(3)}) {
            auto k = flag_complex(g);
            for (int v = 1; v <= k.vertex_count(); ++v) {
                auto lk = link(k, v);
                std::vector<int> V;
                for (int u = 1; u <= g.vertex_count(); ++u)
                    if (u != v && g.adjacent(u, v)) V.push_back(u);
                if (V.empty()) continue;
                CHECK(full_subcomplex(k, V) == lk);
            }
        }
    }
    SUBCASE("out of range rejected") {
        auto k = flag_complex(path_graph(3));
        CHECK_THROWS_AS(link(k, 0), std::out_of_range);
        CHECK_THROWS_AS(deletion(k, 4), std::out_of_range);
    }
}

TEST_CASE("is_flag") {
    SimplicialComplex boundary(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_flag(boundary));
    SimplicialComplex simplex3(4, {{1, 2, 3, 4}});
    CHECK(is_flag(simplex3));
    CHECK(is_flag(flag_complex(cycle_graph(5))));
}

TEST_CASE("links and deletions of flag complexes are flag") {
    for (const auto& g : {path_graph(5), cycle_graph(5), complete_graph(4)}) {
        auto k = flag_complex(g);
        for (int v = 1; v <= k.vertex_count(); ++v) {
            CHECK(is_flag(link(k, v)));
            CHECK(is_flag(deletion(k, v)));
        }
    }
}
