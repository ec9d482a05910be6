#ifndef CGRAPH_ISO_HPP
#define CGRAPH_ISO_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cgraph/core.hpp"

namespace cgraph {

// A bijection on vertex labels {0, ..., m-1}, stored as its image list.
class VertexPermutation {
public:
    explicit VertexPermutation(std::vector<int> images);

    static VertexPermutation identity(int m);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    VertexPermutation inverse() const;

    // 0/1 permutation matrix M with M[sigma(i)][i] = 1, so that
    // A(apply_vertex_perm(g, sigma)) = M * A(g) * M^T entrywise.
    std::vector<std::vector<int>> matrix() const;

    friend VertexPermutation compose(const VertexPermutation& pi, const VertexPermutation& sigma);

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

private:
    std::vector<int> images_;
};

// Relabeled copy: pair {sigma(i), sigma(j)} gets the color of {i, j}.
CGraph apply_vertex_perm(const CGraph& g, const VertexPermutation& sigma);

// The lexicographically least upper-triangle color string over all vertex
// relabelings, in the canonical pair order. Two cgraphs have equal codes
// iff they are cisomorphic, so a code names a cisomorphism class.
class CanonicalCode {
public:
    CanonicalCode(int vertex_count, int prime, std::vector<int> code);

    int vertex_count() const { return m_; }
    int prime() const { return p_; }
    const std::vector<int>& code() const { return code_; }

    // The labeled representative whose color vector is the code itself.
    CGraph representative() const;

    // Space-separated colors; empty for a single vertex.
    std::string str() const;

    friend std::strong_ordering operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

private:
    int m_;
    int p_;
    std::vector<int> code_;
};

// Vertex-count ceiling for the relabeling searches below; the environment
// variable CGRAPH_SEARCH_LIMIT overrides the default of 10.
int search_limit();

CanonicalCode canonical_code(const CGraph& g, int limit = search_limit());

// A witnessing relabeling sigma with apply_vertex_perm(h, sigma) == g
// (lexicographically least), or nothing. Graphs of different sizes are
// simply not cisomorphic; mixing moduli is an error.
std::optional<VertexPermutation> cisomorphic(const CGraph& g, const CGraph& h,
                                             int limit = search_limit());

// The full cautomorphism group of g, in lexicographic order of image lists.
std::vector<VertexPermutation> cautomorphisms(const CGraph& g, int limit = search_limit());

// Tests the commutation of complements with isomorphism on one instance:
// true iff [g ~ h] <=> [pi(g) ~ pi(h)]. Always true in theory; the
// operation exists so test campaigns can look for a counterexample.
bool complement_commutes_check(const CGraph& g, const CGraph& h, const ColorPermutation& pi,
                               int limit = search_limit());

}  // namespace cgraph

#endif
