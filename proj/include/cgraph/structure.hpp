#ifndef CGRAPH_STRUCTURE_HPP
#define CGRAPH_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "cgraph/core.hpp"

namespace cgraph {

// Connected components of the graph whose edges are all non-white pairs.
// Blocks are sorted internally and by smallest member; they are nonempty,
// pairwise disjoint and cover V(G).
struct ComponentPartition {
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

ComponentPartition components(const CGraph& g);

bool is_connected(const CGraph& g);

// A path all of whose consecutive pairs carry the single color `color`;
// closed == true means the last-to-first pair carries it too (a k-cycle,
// at least 3 vertices).
struct KPath {
    FieldElement color;
    std::vector<int> vertices;
    bool closed = false;
};

// Shortest k-path from s to t (breadth-first over k-edges, neighbors in
// ascending order), or nothing. s == t yields the single-vertex path.
std::optional<KPath> find_k_path(const CGraph& g, FieldElement k, int s, int t);

// Shortest k-cycle; ties broken by lexicographically least vertex sequence
// after rotating the cycle to start at its smallest vertex and taking the
// lesser of the two directions.
std::optional<KPath> find_k_cycle(const CGraph& g, FieldElement k);

// The j-colored subcgraph is connected on all m vertices.
bool is_j_connected(const CGraph& g, FieldElement j);

// For a cgraph with exactly two odd-degree vertices: a path of non-white
// edges (colors may vary) joining them. Any other odd-degree count is a
// precondition violation.
std::vector<int> odd_degree_path(const CGraph& g);

// Maximum number of colored edges in a simple cgraph with n vertices and
// k components: (n-k)(n-k+1)/2.
long long max_colored_edges(int n, int k);

}  // namespace cgraph

#endif
