#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "raq/coxeter.hpp"

using namespace raq;
using oracles::brute_force_c;
using oracles::Dihedral;
using oracles::dmul;
using oracles::Perm;
using oracles::pmul;
using oracles::SPerm;
using oracles::spmul;

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(CoxeterMatrix(2, {1, 2, 3, 1}), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(CoxeterMatrix(2, {2, 2, 2, 2}), std::invalid_argument);  // bad diagonal
    CHECK_THROWS_AS(CoxeterMatrix(2, {1, 1, 1, 1}), std::invalid_argument);  // off-diagonal 1
    CHECK_THROWS_AS(CoxeterMatrix(2, {1, 0, 0, 1}), std::invalid_argument);  // bad entry
    CHECK_NOTHROW(CoxeterMatrix(2, {1, kInfiniteOrder, kInfiniteOrder, 1}));
}

TEST_CASE("right-angled detection") {
    CHECK_FALSE(CoxeterMatrix::symmetric_group(3).is_right_angled());
    CHECK(CoxeterMatrix(2, {1, kInfiniteOrder, kInfiniteOrder, 1}).is_right_angled());
    CHECK(CoxeterMatrix(2, {1, 2, 2, 1}).is_right_angled());
    CHECK(CoxeterMatrix::right_angled(path_graph(3)).is_right_angled());
}

TEST_CASE("symmetric group matrices") {
    auto m2 = CoxeterMatrix::symmetric_group(2);
    CHECK(m2.size() == 1);
    CHECK(m2.order(1, 1) == 1);
    auto m3 = CoxeterMatrix::symmetric_group(3);
    CHECK(m3.order(1, 2) == 3);
    auto m4 = CoxeterMatrix::symmetric_group(4);
    CHECK(m4.order(1, 3) == 2);
    CHECK(m4.order(2, 3) == 3);
}

TEST_CASE("class structure") {
    SUBCASE("symmetric groups have one class") {
        for (int n = 2; n <= 6; ++n) {
            auto sys = build_system(CoxeterMatrix::symmetric_group(n));
            CHECK(sys.class_count() == 1);
        }
    }
    SUBCASE("right-angled systems have singleton classes") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 1 + static_cast<int>(rng() % 6);
            std::vector<std::pair<int, int>> edges;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    if (rng() & 1) edges.emplace_back(u, v);
            auto sys = build_right_angled_system(SimpleGraph(n, edges));
            CHECK(sys.class_count() == n);
            CHECK(sys.right_angled);
            for (const auto& cls : sys.classes) CHECK(cls.size() == 1);
        }
    }
    SUBCASE("gamma keeps exactly the finite bonds >= 2") {
        auto sys = build_system(CoxeterMatrix(3, {1, 4, kInfiniteOrder,
                                                  4, 1, 3,
                                                  kInfiniteOrder, 3, 1}));
        CHECK(sys.gamma.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
        CHECK(sys.class_count() == 2);  // odd bond joins 2,3
        CHECK(sys.class_of == std::vector<int>{0, 1, 1});
        CHECK(sys.representatives == std::vector<int>{1, 2});
    }
    SUBCASE("odd paths connect classes transitively") {
        // 1 -3- 2 -5- 3: all three generators in one class.
        auto sys = build_system(CoxeterMatrix(3, {1, 3, 2, 3, 1, 5, 2, 5, 1}));
        CHECK(sys.class_count() == 1);
    }
}

TEST_CASE("dihedral brute force") {
    // c for m(s,t) = k against explicit enumeration of the order-2k group.
    auto dihedral_c = [](int k) {
        std::vector<Dihedral> gens{{k, 0, 1}, {k, 1, 1}};
        return brute_force_c(gens, dmul);
    };
    std::map<int, int> expected;
    for (int k : {2, 3, 4, 5, 6}) {
        auto sys = build_system(CoxeterMatrix(2, {1, k, k, 1}));
        CHECK(sys.class_count() == dihedral_c(k));
        expected[k] = sys.class_count();
    }
    CHECK(expected[2] == 2);
    CHECK(expected[3] == 1);
    CHECK(expected[4] == 2);
    CHECK(expected[5] == 1);
    // m = ∞: no odd path, so two classes.
    CHECK(build_system(CoxeterMatrix(2, {1, kInfiniteOrder, kInfiniteOrder, 1})).class_count() ==
          2);
}

TEST_CASE("rank-3 brute force") {
    SUBCASE("Σ4 by permutation enumeration") {
        std::vector<Perm> gens{{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
        CHECK(brute_force_c(gens, pmul) == 1);
        CHECK(build_system(CoxeterMatrix::symmetric_group(4)).class_count() == 1);
    }
    SUBCASE("hyperoctahedral group of rank 3 by signed permutations") {
        // Bonds: m(1,2) = 3, m(2,3) = 4, m(1,3) = 2: classes {1,2} and {3}.
        std::vector<SPerm> gens{{2, 1, 3}, {1, 3, 2}, {1, 2, -3}};
        CHECK(brute_force_c(gens, spmul) == 2);
        CHECK(build_system(CoxeterMatrix(3, {1, 3, 2, 3, 1, 4, 2, 4, 1})).class_count() == 2);
    }
    SUBCASE("reducible product of an involution and a dihedral group") {
        for (int k : {2, 3, 4}) {
            // m(1,2) = m(1,3) = 2, m(2,3) = k, via pairs (Z/2, D_k).
            struct E {
                int a;
                Dihedral d;
                auto operator<=>(const E&) const = default;
            };
            auto emul = [](const E& x, const E& y) {
                return E{x.a ^ y.a, dmul(x.d, y.d)};
            };
            std::vector<E> gens{{1, {k, 0, 0}}, {0, {k, 0, 1}}, {0, {k, 1, 1}}};
            int brute = brute_force_c(gens, emul);
            auto sys = build_system(CoxeterMatrix(3, {1, 2, 2, 2, 1, k, 2, k, 1}));
            CHECK(sys.class_count() == brute);
        }
    }
    SUBCASE("elementary abelian group from the complete graph") {
        struct V {
            int bits;
            auto operator<=>(const V&) const = default;
        };
        auto vmul = [](const V& x, const V& y) { return V{x.bits ^ y.bits}; };
        std::vector<V> gens{{1}, {2}, {4}};
        CHECK(brute_force_c(gens, vmul) == 3);
        CHECK(build_right_angled_system(complete_graph(3)).class_count() == 3);
    }
}

TEST_CASE("abelianization descriptors") {
    auto sigma = abelianization_descriptors(build_system(CoxeterMatrix::symmetric_group(4)));
    CHECK(sigma.c == 1);
    CHECK(sigma.w_ab() == "(Z/2)^1");
    CHECK(sigma.a_ab() == "Z^1");
    CHECK(sigma.ad_ab() == "Z^1");

    auto ra = abelianization_descriptors(build_right_angled_system(path_graph(3)));
    CHECK(ra.c == 3);
    CHECK(ra.class_of == std::vector<int>{0, 1, 2});

    auto dihedral4 = abelianization_descriptors(build_system(CoxeterMatrix(2, {1, 4, 4, 1})));
    CHECK(dihedral4.c == 2);
    CHECK(dihedral4.w_ab() == "(Z/2)^2");
}
