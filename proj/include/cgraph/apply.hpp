#ifndef CGRAPH_APPLY_HPP
#define CGRAPH_APPLY_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cgraph/core.hpp"

namespace cgraph {

// --- job assignment via nonzero determinantal monomials ---

// Rows are persons, columns are jobs. Entry (u, v) is v+1 (the 1-based job
// index) when person u can do job v, else 0; so every nonzero entry in
// column v equals v+1, and a permutation sigma yields a proper assignment
// exactly when the monomial prod_u a[u][sigma(u)] is nonzero.
//
// Colors here are job indices, plain positive integers: they may exceed any
// particular field's p-1 and are not GF(p) elements.
//
// Entries equal to kWildcard appear only in the dummy rows/columns added by
// pad_to_square and match anything; zero-filled dummies would kill every
// monomial and hide real matchings.
class AssignmentMatrix {
public:
    static constexpr int kWildcard = -1;

    // Zero-filled n persons x m jobs matrix, no dummies.
    AssignmentMatrix(int persons, int jobs);

    // From row-major entries, no dummies. Every entry must be 0 or v+1 for
    // its column v.
    static AssignmentMatrix from_entries(int rows, int cols, std::vector<int> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // The non-dummy prefix; equal to rows()/cols() unless padded.
    int real_rows() const { return real_rows_; }
    int real_cols() const { return real_cols_; }

    int at(int u, int v) const;

    // Entry is nonzero or a wildcard.
    bool admissible(int u, int v) const;

    friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;

    friend AssignmentMatrix pad_to_square(const AssignmentMatrix& m);

private:
    AssignmentMatrix(int rows, int cols, int real_rows, int real_cols, std::vector<int> entries);

    int rows_;
    int cols_;
    int real_rows_;
    int real_cols_;
    std::vector<int> entries_;  // row-major
};

// A proper job assignment: person -> job pairs, jobs pairwise distinct.
// Only real persons and jobs appear; pairs ascend by person. Real persons
// or jobs missing from the pairs were matched to padding and are unfilled.
struct Assignment {
    std::vector<std::pair<int, int>> pairs;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// The matrix of a bipartite cgraph: persons/jobs must partition V(g), every
// non-white edge must cross the partition (NotBipartite otherwise), and the
// edge at job index v must carry color v+1 (ColorConventionViolated
// otherwise). Entry (u, v) is v+1 when persons[u] and jobs[v] are joined.
AssignmentMatrix build_assignment_matrix(const CGraph& g, const std::vector<int>& persons,
                                         const std::vector<int>& jobs);

// The bipartite cgraph of a matrix without dummies: persons 0..n-1, jobs
// n..n+m-1, an edge of color v+1 joining person u to job v when the entry
// is nonzero. Inverse of build_assignment_matrix; the modulus must exceed
// the number of jobs.
CGraph assignment_cgraph(const AssignmentMatrix& m, Modulus mod);

// All permutations sigma whose monomial avoids the zero entries, in
// ascending lexicographic order of the image list, projected to their real
// person -> job pairs. Distinct sigma that differ only on padding project
// to one assignment, reported once; at most `limit` assignments are
// returned. The matrix must be square (pad first if not).
std::vector<Assignment> find_assignments(const AssignmentMatrix& m, int limit);

// Extends a rectangular matrix with wildcard dummy rows or columns to a
// square one; real_rows/real_cols keep the original shape. Square input is
// returned unchanged.
AssignmentMatrix pad_to_square(const AssignmentMatrix& m);

// Whitespace-separated integer grid, one row per line; blank lines and
// lines starting with '#' are skipped. Rows must agree in length and every
// entry must be 0 or its column's 1-based index.
AssignmentMatrix parse_matrix(std::istream& in);
AssignmentMatrix parse_matrix(const std::string& text);
AssignmentMatrix read_matrix_file(const std::string& path);

std::string write_matrix(const AssignmentMatrix& m);

// --- projective planes as tight packings ---

// An edge-coloring of K_N in which each color class is a complete subgraph
// and every pair is covered exactly once. Colors are 1-based line indices,
// plain integers up to N = q^2+q+1; packing_cgraph converts to a GF(p)
// cgraph once a prime p > N is chosen.
class PlanePacking {
public:
    // lines: point sets (each sorted ascending); coloring: line index of
    // each vertex pair in canonical pair order, 0 meaning uncovered.
    // Validates shape only; verify_packing judges packing validity.
    PlanePacking(int order, std::vector<std::vector<int>> lines, std::vector<int> coloring);

    int order() const { return order_; }
    int point_count() const { return points_; }

    const std::vector<std::vector<int>>& lines() const { return lines_; }

    // 1-based index of the line covering {u, v}; 0 if uncovered.
    int line_through(int u, int v) const;

    const std::vector<int>& coloring() const { return coloring_; }

private:
    int order_;
    int points_;
    std::vector<std::vector<int>> lines_;
    std::vector<int> coloring_;  // length C(points_, 2), values 0..lines_.size()
};

// The classical projective plane of prime order q over GF(q): points are
// the 1-dimensional subspaces of GF(q)^3, lines the 2-dimensional ones,
// N = q^2+q+1 of each. Line i's q+1 points get pairwise edges of color i.
// The builder checks that the lines tile all C(N, 2) pairs exactly once.
PlanePacking build_projective_plane(int q);

struct PackingReport {
    bool pass = false;
    std::string violation;  // empty when pass

    friend bool operator==(const PackingReport&, const PackingReport&) = default;
};

// Checks, in order: no white pairs; every pair inside exactly one color
// class's point set; each color class complete on its point set. Reports
// the first violation.
PackingReport verify_packing(const PlanePacking& pk);

// The packing as a cgraph over GF(p); requires p > point count so that
// every line index is a valid nonwhite color.
CGraph packing_cgraph(const PlanePacking& pk, Modulus mod);

// Smallest prime strictly greater than n; the natural modulus for
// packing_cgraph.
int smallest_prime_above(int n);

// --- censuses ---

// Counts over vertex triples whose three pairs are all non-white.
struct TriangleCensus {
    long long total = 0;
    long long monochromatic = 0;  // all three colors equal
    long long rainbow = 0;        // all three distinct
    long long other = 0;

    friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

TriangleCensus triangle_census(const CGraph& g);

// counts[j] = number of r-vertex subsets inducing a j-complete subcgraph,
// for each color j in 1..p-1 (counts[0] stays 0). Needs r >= 2; r = 2
// recovers per-color edge counts.
std::vector<long long> monochromatic_clique_census(const CGraph& g, int r);

}  // namespace cgraph

#endif
