#include "cgraph/reconstruct.hpp"

#include <random>
#include <set>

#include "cgraph/apply.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cgraph;
using testutil::random_cgraph;
using testutil::random_permutation;

namespace {
const Modulus m2(2);
const Modulus m3(3);
}  // namespace

TEST_CASE("vertex decks") {
    CGraph k3(3, m3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    Deck d = vertex_deck(k3);
    REQUIRE(d.cards.size() == 3);
    for (const auto& card : d.cards) {
        CHECK(card.vertex_count() == 2);
        CHECK(card.code() == std::vector<int>{1});
    }
    CHECK_THROWS_AS(vertex_deck(CGraph(2, m3, {{0, 1, 1}})), TooSmall);
}

TEST_CASE("edge decks") {
    CGraph k4(4, m3, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    Deck d = edge_deck(k4);
    REQUIRE(d.cards.size() == 6);
    for (const auto& card : d.cards) CHECK(card == d.cards.front());

    CGraph three_edges(4, m3, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    CHECK_THROWS_AS(edge_deck(three_edges), TooFewEdges);

    std::mt19937 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        CGraph g = random_cgraph(rng, 5, m3);
        if (g.edge_count() < 4) continue;
        CHECK(edge_deck(g).cards.size() == static_cast<std::size_t>(g.edge_count()));
    }
}

TEST_CASE("decks are relabeling-invariant") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 3 + trial % 4;
        CGraph g = random_cgraph(rng, m, m3);
        CGraph h = apply_vertex_perm(g, VertexPermutation(random_permutation(rng, m)));
        CHECK(vertex_deck(g) == vertex_deck(h));
        if (g.edge_count() >= 4) CHECK(edge_deck(g) == edge_deck(h));
    }
}

TEST_CASE("every Fano card is a complete cgraph with the same color profile") {
    // Cards are not mutually cisomorphic: a cisomorphism fixes colors, and
    // each deleted point names a different triple of lines. What is shared
    // is the shape: deleting a point cuts each of its 3 lines down to one
    // edge and leaves the other 4 lines whole.
    CGraph fano = packing_cgraph(build_projective_plane(2), Modulus(11));
    Deck d = vertex_deck(fano);
    REQUIRE(d.cards.size() == 7);
    for (const auto& card : d.cards) {
        std::vector<int> per_color(11, 0);
        int edges = 0;
        for (int c : card.code()) {
            ++per_color[c];
            edges += c != 0;
        }
        CHECK(edges == 15);
        std::vector<int> multiplicities;
        for (int c = 1; c <= 10; ++c)
            if (per_color[c] > 0) multiplicities.push_back(per_color[c]);
        std::sort(multiplicities.begin(), multiplicities.end());
        CHECK(multiplicities == std::vector<int>{1, 1, 1, 3, 3, 3, 3});
    }
}

TEST_CASE("the edge count is recoverable from the vertex deck") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 3 + trial % 4;
        CGraph g = random_cgraph(rng, m, m3);
        long long total = 0;
        for (const auto& card : vertex_deck(g).cards)
            for (int c : card.code()) total += c != 0;
        CHECK(total % (m - 2) == 0);
        CHECK(total / (m - 2) == g.edge_count());
    }
}

TEST_CASE("chypomorphism") {
    std::mt19937 rng(54);
    CGraph g = random_cgraph(rng, 5, m3);
    CGraph h = apply_vertex_perm(g, VertexPermutation(random_permutation(rng, 5)));
    CHECK(chypomorphic(g, h));

    CGraph one_edge(4, m3, {{0, 1, 1}});
    CGraph two_edges(4, m3, {{0, 1, 1}, {2, 3, 1}});
    CHECK_FALSE(chypomorphic(one_edge, two_edges));

    CHECK_THROWS_AS(chypomorphic(g, CGraph(4, m3)), SizeMismatch);
    CHECK_THROWS_AS(chypomorphic(g, CGraph(5, Modulus(5))), ModulusMismatch);
}

TEST_CASE("chypomorphic respects cisomorphism classes across the n=4 p=2 census") {
    std::vector<CGraph> reps;
    std::set<CanonicalCode> seen;
    for_each_labeled(4, m2, [&](const CGraph& g) {
        if (seen.insert(canonical_code(g)).second) reps.push_back(g);
    });
    REQUIRE(reps.size() == 11);
    // at n=4 the classical reconstruction result: same deck iff same class
    for (const auto& a : reps)
        for (const auto& b : reps)
            CHECK(chypomorphic(a, b) == cisomorphic(a, b).has_value());
}

TEST_CASE("counterexample search at n=4 over GF(2) comes back empty") {
    ReconSearchResult r = conjecture_search(4, m2, DeckMode::Vertex);
    CHECK(r.classes.size() == 11);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("counterexample search on the 3-vertex GF(3) census") {
    ReconSearchResult r = conjecture_search(3, m3, DeckMode::Vertex);
    CHECK(r.classes.size() == 10);
    for (const auto& [a, b] : r.counterexamples) {
        CHECK(vertex_deck(a.representative()) == vertex_deck(b.representative()));
        CHECK_FALSE(cisomorphic(a.representative(), b.representative()).has_value());
    }
}

TEST_CASE("edge-mode search considers only classes with at least four edges") {
    ReconSearchResult r = conjecture_search(4, m2, DeckMode::Edge);
    CHECK(r.classes.size() == 4);
    for (const auto& c : r.classes) {
        int edges = 0;
        for (int x : c.code()) edges += x != 0;
        CHECK(edges >= 4);
    }
    for (const auto& [a, b] : r.counterexamples) {
        CHECK(edge_deck(a.representative()) == edge_deck(b.representative()));
        CHECK_FALSE(cisomorphic(a.representative(), b.representative()).has_value());
    }
}

TEST_CASE("search guards") {
    CHECK_THROWS_AS(conjecture_search(2, m3, DeckMode::Vertex), TooSmall);
    CHECK_THROWS_AS(conjecture_search(8, m3, DeckMode::Vertex), BudgetExceeded);
}
