#ifndef CGRAPH_CORE_HPP
#define CGRAPH_CORE_HPP

#include <functional>
#include <vector>

#include "cgraph/field.hpp"

namespace cgraph {

// Number of unordered vertex pairs on m vertices.
inline int pair_count(int m) { return m * (m - 1) / 2; }

// Index of the pair {u, v}, u < v, in lexicographic order
// (0,1), (0,2), ..., (0,m-1), (1,2), ..., (m-2,m-1).
inline int pair_index(int u, int v, int m) {
    return u * m - u * (u + 1) / 2 + (v - u - 1);
}

struct Edge {
    int u;
    int v;
    int color;  // 1..p-1; white (0) edges are never stored

    friend bool operator==(const Edge&, const Edge&) = default;
};

// An edge-colored simple graph over GF(p). Color 0 (white) means the pair
// carries no edge. Immutable after construction; every operation below is
// a pure function returning fresh values, so CGraphs are freely shareable
// across threads.
//
// Internally the coloring is a dense upper-triangle vector in the canonical
// pair order, which doubles as the graph's GF(p)^q coordinate vector.
class CGraph {
public:
    // Empty cgraph (all pairs white) on m >= 1 vertices.
    CGraph(int vertex_count, Modulus mod);

    // From an edge list. Pairs may be given in either orientation; endpoints
    // must be distinct and in range, colors in [0, p-1]. A color-0 entry is
    // normalized away (white = absent). Listing a pair twice is an error.
    CGraph(int vertex_count, Modulus mod, const std::vector<Edge>& edges);

    // From a raw upper-triangle color vector of length m(m-1)/2.
    static CGraph from_colors(int vertex_count, Modulus mod, std::vector<int> colors);

    int vertex_count() const { return m_; }
    Modulus modulus() const { return mod_; }
    int prime() const { return mod_.value(); }

    // Color of the pair {u, v}; 0 when absent. color(v, v) is 0 by convention.
    int color(int u, int v) const;

    // Non-white edges, u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    int edge_count() const;

    const std::vector<int>& colors() const { return colors_; }

    friend bool operator==(const CGraph&, const CGraph&);

private:
    void check_vertex(int v) const;

    int m_;
    Modulus mod_;
    std::vector<int> colors_;  // length m(m-1)/2, values in [0, p-1]
};

struct Arc {
    int from;
    int to;
    int color;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// A directed cgraph. The two orientations of a vertex pair are independent.
class CDigraph {
public:
    CDigraph(int vertex_count, Modulus mod);
    CDigraph(int vertex_count, Modulus mod, const std::vector<Arc>& arcs);

    int vertex_count() const { return m_; }
    Modulus modulus() const { return mod_; }

    int color(int from, int to) const;
    std::vector<Arc> arcs() const;

    friend bool operator==(const CDigraph&, const CDigraph&);

private:
    int m_;
    Modulus mod_;
    std::vector<int> colors_;  // row-major m*m, zero diagonal
};

// Square color matrix. Symmetric with zero diagonal when built from a
// CGraph; a CDigraph's matrix need not be symmetric.
class AdjMatrix {
public:
    AdjMatrix(int size, Modulus mod, std::vector<int> entries);

    int size() const { return m_; }
    Modulus modulus() const { return mod_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * m_ + j]; }

    bool symmetric() const;
    bool zero_diagonal() const;

    friend bool operator==(const AdjMatrix&, const AdjMatrix&);

private:
    int m_;
    Modulus mod_;
    std::vector<int> entries_;
};

AdjMatrix adjacency_matrix(const CGraph& g);
AdjMatrix adjacency_matrix(const CDigraph& d);

// Inverse of adjacency_matrix(CGraph): requires symmetry and zero diagonal.
CGraph from_matrix(const AdjMatrix& a);

// A bijection on the color set {0, ..., p-1}. Note that white takes part:
// a permutation with pi(0) != 0 turns non-edges into edges, which is what
// makes the complement of a cgraph generalize the ordinary graph complement.
class ColorPermutation {
public:
    explicit ColorPermutation(std::vector<int> images);

    static ColorPermutation identity(int size);

    // Convenience for permutations that keep white fixed: images of 1..p-1.
    static ColorPermutation fixing_white(const std::vector<int>& nonwhite_images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int color) const { return images_[color]; }
    const std::vector<int>& images() const { return images_; }

    ColorPermutation inverse() const;

    // compose(pi, sigma) applies sigma first: (pi . sigma)(j) = pi(sigma(j)).
    friend ColorPermutation compose(const ColorPermutation& pi, const ColorPermutation& sigma);

    friend bool operator==(const ColorPermutation&, const ColorPermutation&) = default;

private:
    std::vector<int> images_;
};

// The pi-complement: every pair with color j is recolored pi(j).
CGraph pi_complement(const CGraph& g, const ColorPermutation& pi);

// --- monochromatic decomposition and local predicates ---

// The j-colored subcgraph: same vertex set, exactly the j-colored edges.
CGraph monochromatic_component(const CGraph& g, FieldElement j);

// Count of non-white edges incident on v.
int degree(const CGraph& g, int v);

// Every vertex pair joined by an edge of color exactly j (vacuous for m = 1).
bool is_j_complete(const CGraph& g, FieldElement j);

// No pair inside s carries color k.
bool is_k_independent(const CGraph& g, const std::vector<int>& s, FieldElement k);

// The two parts must partition V(g). True iff some k-edge crosses the
// partition and no k-edge lies inside a part.
bool is_k_bipartite(const CGraph& g, const std::vector<int>& part_a,
                    const std::vector<int>& part_b, FieldElement k);

// All cross pairs colored k, nothing else; vertices 0..a-1 and a..a+b-1.
CGraph k_complete_bipartite(int a, int b, FieldElement k);

// Induced subcgraph on s: keeps every edge with both endpoints in s,
// colors unchanged, vertices relabeled to 0..|s|-1 order-preservingly.
CGraph subgraph(const CGraph& g, std::vector<int> s);

CGraph delete_vertex(const CGraph& g, int v);

// Removes the (non-white) edge {u, v}.
CGraph delete_edge(const CGraph& g, int u, int v);

// Copy of g with pair {u, v} set to the given color (0 clears it).
CGraph with_edge(const CGraph& g, int u, int v, int color);

// --- the GF(p)^q vector-space view ---

// A coordinate vector in GF(p)^q. For a cgraph on m vertices, q = m(m-1)/2
// and entry i is the color of the i-th pair in the canonical pair order.
class CVector {
public:
    CVector(Modulus mod, std::vector<int> entries);

    Modulus modulus() const { return mod_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int at(int i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const CVector&, const CVector&);

private:
    Modulus mod_;
    std::vector<int> entries_;
};

CVector to_vector(const CGraph& g);
CGraph from_vector(const CVector& v, int vertex_count);

CVector vector_add(const CVector& u, const CVector& v);
CVector scalar_mul(FieldElement c, const CVector& v);

// Position of w relative to a base vector, in the representative order
// 0 < 1 < ... < p-1 on colors. GF(p) itself is unordered; the order on
// representatives is what the sub/supercgraph classification presupposes.
enum class Relation { Subcgraph, Supercgraph, Neither, Both };

Relation classify_relative(const CVector& base, const CVector& w);

const char* to_string(Relation r);

// Visits every labeled cgraph on the given vertex count, i.e. all p^q color
// vectors, in lexicographic order of the color vector.
void for_each_labeled(int vertex_count, Modulus mod,
                      const std::function<void(const CGraph&)>& visit);

}  // namespace cgraph

#endif
