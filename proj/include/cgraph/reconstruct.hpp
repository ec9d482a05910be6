#ifndef CGRAPH_RECONSTRUCT_HPP
#define CGRAPH_RECONSTRUCT_HPP

#include <utility>
#include <vector>

#include "cgraph/iso.hpp"

namespace cgraph {

// A multiset of cards, each the cisomorphism class of a vertex-deleted or
// edge-deleted subcgraph. Stored sorted, so equality is multiset equality.
struct Deck {
    std::vector<CanonicalCode> cards;

    friend bool operator==(const Deck&, const Deck&) = default;
    friend std::strong_ordering operator<=>(const Deck&, const Deck&) = default;
};

// One card per vertex; needs at least three vertices.
Deck vertex_deck(const CGraph& g);

// One card per non-white edge; needs at least four of them.
Deck edge_deck(const CGraph& g);

// Equal vertex decks as multisets, equivalent to the existence of a
// bijection matching each deleted vertex of g with one of h whose cards
// are cisomorphic.
bool chypomorphic(const CGraph& g, const CGraph& h);

enum class DeckMode { Vertex, Edge };

struct ReconSearchResult {
    // Every cisomorphism class on n vertices (in edge mode: those with at
    // least four edges), sorted by code.
    std::vector<CanonicalCode> classes;
    // Distinct classes sharing a deck; empty means the conjecture holds at
    // this size. Every reported pair has been re-verified: decks recomputed
    // and equal, classes confirmed non-cisomorphic.
    std::vector<std::pair<CanonicalCode, CanonicalCode>> counterexamples;
};

// Exhaustive search for reconstruction counterexamples on n vertices over
// GF(p): enumerates all p^(n(n-1)/2) labeled cgraphs, reduces them to
// cisomorphism classes, and groups the classes by deck. The labeled space
// must fit the budget.
ReconSearchResult conjecture_search(int n, Modulus mod, DeckMode mode,
                                    long long budget = 10'000'000);

}  // namespace cgraph

#endif
