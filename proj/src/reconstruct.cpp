#include "cgraph/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cgraph {

Deck vertex_deck(const CGraph& g) {
    if (g.vertex_count() < 3)
        throw TooSmall("vertex deck needs at least 3 vertices, have " +
                       std::to_string(g.vertex_count()));
    Deck deck;
    for (int v = 0; v < g.vertex_count(); ++v)
        deck.cards.push_back(canonical_code(delete_vertex(g, v)));
    std::sort(deck.cards.begin(), deck.cards.end());
    return deck;
}

Deck edge_deck(const CGraph& g) {
    std::vector<Edge> edges = g.edges();
    if (edges.size() < 4) throw TooFewEdges(static_cast<int>(edges.size()), 4);
    Deck deck;
    for (const Edge& e : edges)
        deck.cards.push_back(canonical_code(delete_edge(g, e.u, e.v)));
    std::sort(deck.cards.begin(), deck.cards.end());
    return deck;
}

bool chypomorphic(const CGraph& g, const CGraph& h) {
    if (g.modulus() != h.modulus()) throw ModulusMismatch();
    if (g.vertex_count() != h.vertex_count())
        throw SizeMismatch("cgraphs on " + std::to_string(g.vertex_count()) + " and " +
                           std::to_string(h.vertex_count()) + " vertices");
    return vertex_deck(g) == vertex_deck(h);
}

ReconSearchResult conjecture_search(int n, Modulus mod, DeckMode mode, long long budget) {
    int q = pair_count(n);
    long long space = 1;
    for (int i = 0; i < q; ++i) {
        if (space > budget / mod.value())
            throw BudgetExceeded("p^q = " + std::to_string(mod.value()) + "^" +
                                 std::to_string(q) + " labeled cgraphs exceed the budget " +
                                 std::to_string(budget));
        space *= mod.value();
    }
    if (n < 3) throw TooSmall("decks need at least 3 vertices");

    // Census: one canonical representative per cisomorphism class.
    std::set<CanonicalCode> classes;
    for_each_labeled(n, mod, [&](const CGraph& g) { classes.insert(canonical_code(g)); });

    ReconSearchResult result;
    std::map<Deck, std::vector<CanonicalCode>> by_deck;
    for (const CanonicalCode& code : classes) {
        CGraph rep = code.representative();
        if (mode == DeckMode::Edge && rep.edge_count() < 4) continue;
        result.classes.push_back(code);
        Deck deck = mode == DeckMode::Vertex ? vertex_deck(rep) : edge_deck(rep);
        by_deck[std::move(deck)].push_back(code);
    }

    for (const auto& [deck, members] : by_deck) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                CGraph a = members[i].representative();
                CGraph b = members[j].representative();
                // Independent re-verification: fresh decks, fresh search.
                Deck da = mode == DeckMode::Vertex ? vertex_deck(a) : edge_deck(a);
                Deck db = mode == DeckMode::Vertex ? vertex_deck(b) : edge_deck(b);
                if (da != db || cisomorphic(a, b).has_value())
                    throw Error("deck grouping produced an unverifiable pair");
                result.counterexamples.emplace_back(members[i], members[j]);
            }
        }
    }
    return result;
}

}  // namespace cgraph
