#include "cgraph/structure.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace cgraph;
using testutil::random_cgraph;

namespace {

const Modulus m3(3);

bool valid_k_path(const CGraph& g, const KPath& path) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : path.vertices) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 1; i < path.vertices.size(); ++i)
        if (g.color(path.vertices[i - 1], path.vertices[i]) != path.color.value()) return false;
    if (path.closed) {
        if (path.vertices.size() < 3) return false;
        if (g.color(path.vertices.back(), path.vertices.front()) != path.color.value())
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("connected components of the non-white graph") {
    CHECK(components(CGraph(4, m3)).blocks ==
          std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});

    CGraph k3(3, m3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    CHECK(components(k3).blocks == std::vector<std::vector<int>>{{0, 1, 2}});

    CGraph two_edges(4, m3, {{0, 2, 1}, {1, 3, 2}});
    CHECK(components(two_edges).blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    CHECK(is_connected(CGraph(1, m3)));
    CHECK_FALSE(is_connected(two_edges));

    // all edges inside {0,1} and {2,3}: disconnected by the partition rule
    CGraph split(4, m3, {{0, 1, 2}, {2, 3, 1}});
    CHECK_FALSE(is_connected(split));
    CHECK(is_connected(CGraph(2, m3, {{0, 1, 2}})));
}

TEST_CASE("components ignore colors") {
    std::mt19937 rng(31);
    ColorPermutation swap12({0, 2, 1});
    for (int trial = 0; trial < 30; ++trial) {
        CGraph g = random_cgraph(rng, 2 + trial % 6, m3);
        CHECK(components(g) == components(pi_complement(g, swap12)));
    }
}

TEST_CASE("single-color paths") {
    CGraph g(5, m3, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 2}, {0, 4, 1}});
    FieldElement one(1, m3), two(2, m3);

    auto trivial = find_k_path(g, one, 2, 2);
    REQUIRE(trivial.has_value());
    CHECK(trivial->vertices == std::vector<int>{2});

    auto direct = find_k_path(g, one, 0, 1);
    REQUIRE(direct.has_value());
    CHECK(direct->vertices == std::vector<int>{0, 1});

    // 0-3 has color 2, so the color-1 route goes the long way
    auto around = find_k_path(g, one, 0, 3);
    REQUIRE(around.has_value());
    CHECK(around->vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(valid_k_path(g, *around));

    auto shortcut = find_k_path(g, two, 0, 3);
    REQUIRE(shortcut.has_value());
    CHECK(shortcut->vertices == std::vector<int>{0, 3});

    CHECK_FALSE(find_k_path(g, two, 0, 4).has_value());
    CHECK_FALSE(find_k_path(g, two, 1, 2).has_value());
    CHECK_THROWS_AS(find_k_path(g, FieldElement(0, m3), 0, 1), WhiteColorRequested);
    CHECK_THROWS_AS(find_k_path(g, one, 0, 9), VertexOutOfRange);
}

TEST_CASE("shortest single-color cycles with deterministic tie-breaks") {
    CGraph tri(3, m3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    auto c = find_k_cycle(tri, FieldElement(1, m3));
    REQUIRE(c.has_value());
    CHECK(c->vertices == std::vector<int>{0, 1, 2});
    CHECK(c->closed);
    CHECK(valid_k_path(tri, *c));

    CGraph tree(4, m3, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK_FALSE(find_k_cycle(tree, FieldElement(1, m3)).has_value());

    // two 1-colored triangles; the lexicographically least wins
    CGraph twin(5, m3, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 2, 1}, {3, 4, 1}});
    auto t = find_k_cycle(twin, FieldElement(1, m3));
    REQUIRE(t.has_value());
    CHECK(t->vertices == std::vector<int>{0, 1, 2});

    // square beats nothing: a lone 4-cycle is returned whole
    CGraph square(4, m3, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
    auto s = find_k_cycle(square, FieldElement(2, m3));
    REQUIRE(s.has_value());
    CHECK(s->vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(valid_k_path(square, *s));

    CHECK_THROWS_AS(find_k_cycle(tri, FieldElement(0, m3)), WhiteColorRequested);
}

TEST_CASE("single-color connectivity") {
    CGraph k3(3, m3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    CHECK(is_j_connected(k3, FieldElement(1, m3)));
    CHECK_FALSE(is_j_connected(k3, FieldElement(2, m3)));
    CHECK(is_j_connected(CGraph(1, m3), FieldElement(1, m3)));
    CHECK_THROWS_AS(is_j_connected(k3, FieldElement(0, m3)), WhiteColorRequested);

    std::mt19937 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        CGraph g = random_cgraph(rng, 2 + trial % 5, m3);
        for (int j = 1; j < 3; ++j)
            if (is_j_connected(g, FieldElement(j, m3))) CHECK(is_connected(g));
    }
}

TEST_CASE("path between the two odd-degree vertices") {
    CGraph edge(2, m3, {{0, 1, 2}});
    CHECK(odd_degree_path(edge) == std::vector<int>{0, 1});

    CGraph abc(3, m3, {{0, 1, 1}, {1, 2, 2}});
    CHECK(odd_degree_path(abc) == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(odd_degree_path(CGraph(3, m3)), PreconditionViolated);
    CGraph four_odd(4, m3, {{0, 1, 1}, {2, 3, 1}});
    CHECK_THROWS_AS(odd_degree_path(four_odd), PreconditionViolated);
}

TEST_CASE("odd-degree path is valid on 1000 random instances") {
    std::mt19937 rng(33);
    int collected = 0;
    while (collected < 1000) {
        CGraph g = random_cgraph(rng, 4 + collected % 4, m3);
        std::vector<int> odd;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (degree(g, v) % 2 == 1) odd.push_back(v);
        if (odd.size() != 2) continue;
        ++collected;
        std::vector<int> path = odd_degree_path(g);
        REQUIRE(!path.empty());
        CHECK(path.front() == odd[0]);
        CHECK(path.back() == odd[1]);
        std::vector<bool> seen(g.vertex_count(), false);
        for (int v : path) {
            CHECK_FALSE(seen[v]);
            seen[v] = true;
        }
        for (std::size_t i = 1; i < path.size(); ++i)
            CHECK(g.color(path[i - 1], path[i]) != 0);
    }
}

TEST_CASE("odd-degree vertex count is always even") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        CGraph g = random_cgraph(rng, 1 + trial % 8, m3);
        int odd = 0;
        for (int v = 0; v < g.vertex_count(); ++v) odd += degree(g, v) % 2;
        CHECK(odd % 2 == 0);
    }
}

TEST_CASE("edge bound for a given component count") {
    CHECK(max_colored_edges(7, 1) == 21);
    CHECK(max_colored_edges(5, 5) == 0);
    CHECK(max_colored_edges(6, 2) == 10);
    CHECK_THROWS_AS(max_colored_edges(4, 0), InvalidArgs);
    CHECK_THROWS_AS(max_colored_edges(4, 5), InvalidArgs);
}

TEST_CASE("edge bound holds exhaustively for small sizes") {
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled(n, m3, [&](const CGraph& g) {
            int k = static_cast<int>(components(g).blocks.size());
            CHECK(g.edge_count() <= max_colored_edges(n, k));
        });
    }
}
