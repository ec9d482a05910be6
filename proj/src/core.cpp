#include "cgraph/core.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace cgraph {

// --- CGraph ---

CGraph::CGraph(int vertex_count, Modulus mod) : m_(vertex_count), mod_(mod) {
    if (vertex_count < 1) throw InvalidArgs("vertex count must be >= 1");
    colors_.assign(pair_count(m_), 0);
}

CGraph::CGraph(int vertex_count, Modulus mod, const std::vector<Edge>& edges)
    : CGraph(vertex_count, mod) {
    for (const Edge& e : edges) {
        int u = e.u, v = e.v;
        if (u > v) std::swap(u, v);
        check_vertex(e.u);
        check_vertex(e.v);
        if (u == v) throw InvalidArgs("self-loop {" + std::to_string(u) + "} not allowed");
        if (e.color < 0 || e.color >= mod_.value())
            throw InvalidArgs("color " + std::to_string(e.color) + " not in [0, p-1]");
        if (e.color == 0) continue;  // white = absent
        int idx = pair_index(u, v, m_);
        if (colors_[idx] != 0)
            throw InvalidArgs("pair {" + std::to_string(u) + ", " + std::to_string(v) +
                              "} listed twice");
        colors_[idx] = e.color;
    }
}

CGraph CGraph::from_colors(int vertex_count, Modulus mod, std::vector<int> colors) {
    CGraph g(vertex_count, mod);
    if (static_cast<int>(colors.size()) != pair_count(vertex_count))
        throw LengthMismatch(colors.size(), pair_count(vertex_count));
    for (int c : colors) {
        if (c < 0 || c >= mod.value())
            throw InvalidArgs("color " + std::to_string(c) + " not in [0, p-1]");
    }
    g.colors_ = std::move(colors);
    return g;
}

void CGraph::check_vertex(int v) const {
    if (v < 0 || v >= m_) throw VertexOutOfRange(v, m_);
}

int CGraph::color(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    return colors_[pair_index(u, v, m_)];
}

std::vector<Edge> CGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < m_; ++u) {
        for (int v = u + 1; v < m_; ++v) {
            int c = colors_[pair_index(u, v, m_)];
            if (c != 0) out.push_back({u, v, c});
        }
    }
    return out;
}

int CGraph::edge_count() const {
    return static_cast<int>(std::count_if(colors_.begin(), colors_.end(),
                                          [](int c) { return c != 0; }));
}

bool operator==(const CGraph& a, const CGraph& b) {
    return a.m_ == b.m_ && a.mod_ == b.mod_ && a.colors_ == b.colors_;
}

// --- CDigraph ---

CDigraph::CDigraph(int vertex_count, Modulus mod) : m_(vertex_count), mod_(mod) {
    if (vertex_count < 1) throw InvalidArgs("vertex count must be >= 1");
    colors_.assign(static_cast<std::size_t>(m_) * m_, 0);
}

CDigraph::CDigraph(int vertex_count, Modulus mod, const std::vector<Arc>& arcs)
    : CDigraph(vertex_count, mod) {
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= m_) throw VertexOutOfRange(a.from, m_);
        if (a.to < 0 || a.to >= m_) throw VertexOutOfRange(a.to, m_);
        if (a.from == a.to) throw InvalidArgs("self-loop not allowed");
        if (a.color < 0 || a.color >= mod_.value())
            throw InvalidArgs("color " + std::to_string(a.color) + " not in [0, p-1]");
        if (a.color == 0) continue;
        std::size_t idx = static_cast<std::size_t>(a.from) * m_ + a.to;
        if (colors_[idx] != 0)
            throw InvalidArgs("arc (" + std::to_string(a.from) + ", " + std::to_string(a.to) +
                              ") listed twice");
        colors_[idx] = a.color;
    }
}

int CDigraph::color(int from, int to) const {
    if (from < 0 || from >= m_) throw VertexOutOfRange(from, m_);
    if (to < 0 || to >= m_) throw VertexOutOfRange(to, m_);
    return colors_[static_cast<std::size_t>(from) * m_ + to];
}

std::vector<Arc> CDigraph::arcs() const {
    std::vector<Arc> out;
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            int c = colors_[static_cast<std::size_t>(i) * m_ + j];
            if (c != 0) out.push_back({i, j, c});
        }
    }
    return out;
}

bool operator==(const CDigraph& a, const CDigraph& b) {
    return a.m_ == b.m_ && a.mod_ == b.mod_ && a.colors_ == b.colors_;
}

// --- AdjMatrix ---

AdjMatrix::AdjMatrix(int size, Modulus mod, std::vector<int> entries)
    : m_(size), mod_(mod), entries_(std::move(entries)) {
    if (size < 1) throw InvalidArgs("matrix size must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(m_) * m_)
        throw LengthMismatch(entries_.size(), static_cast<std::size_t>(m_) * m_);
    for (int c : entries_) {
        if (c < 0 || c >= mod_.value())
            throw InvalidArgs("entry " + std::to_string(c) + " not in [0, p-1]");
    }
}

bool AdjMatrix::symmetric() const {
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool AdjMatrix::zero_diagonal() const {
    for (int i = 0; i < m_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

bool operator==(const AdjMatrix& a, const AdjMatrix& b) {
    return a.m_ == b.m_ && a.mod_ == b.mod_ && a.entries_ == b.entries_;
}

AdjMatrix adjacency_matrix(const CGraph& g) {
    int m = g.vertex_count();
    std::vector<int> entries(static_cast<std::size_t>(m) * m, 0);
    for (const Edge& e : g.edges()) {
        entries[static_cast<std::size_t>(e.u) * m + e.v] = e.color;
        entries[static_cast<std::size_t>(e.v) * m + e.u] = e.color;
    }
    return AdjMatrix(m, g.modulus(), std::move(entries));
}

AdjMatrix adjacency_matrix(const CDigraph& d) {
    int m = d.vertex_count();
    std::vector<int> entries(static_cast<std::size_t>(m) * m, 0);
    for (const Arc& a : d.arcs())
        entries[static_cast<std::size_t>(a.from) * m + a.to] = a.color;
    return AdjMatrix(m, d.modulus(), std::move(entries));
}

CGraph from_matrix(const AdjMatrix& a) {
    if (!a.zero_diagonal()) throw InvalidArgs("matrix has a nonzero diagonal entry");
    if (!a.symmetric()) throw InvalidArgs("matrix is not symmetric");
    int m = a.size();
    std::vector<int> colors(pair_count(m));
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) colors[pair_index(u, v, m)] = a.at(u, v);
    return CGraph::from_colors(m, a.modulus(), std::move(colors));
}

// --- ColorPermutation ---

ColorPermutation::ColorPermutation(std::vector<int> images) : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    if (n == 0) throw InvalidArgs("empty color permutation");
    std::vector<bool> seen(n, false);
    for (int x : images_) {
        if (x < 0 || x >= n || seen[x]) throw InvalidArgs("image list is not a bijection");
        seen[x] = true;
    }
}

ColorPermutation ColorPermutation::identity(int size) {
    std::vector<int> img(size);
    std::iota(img.begin(), img.end(), 0);
    return ColorPermutation(std::move(img));
}

ColorPermutation ColorPermutation::fixing_white(const std::vector<int>& nonwhite_images) {
    std::vector<int> img;
    img.reserve(nonwhite_images.size() + 1);
    img.push_back(0);
    for (int x : nonwhite_images) {
        if (x == 0) throw InvalidArgs("white-fixing permutation cannot map a color to 0");
        img.push_back(x);
    }
    return ColorPermutation(std::move(img));
}

ColorPermutation ColorPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return ColorPermutation(std::move(inv));
}

ColorPermutation compose(const ColorPermutation& pi, const ColorPermutation& sigma) {
    if (pi.size() != sigma.size())
        throw SizeMismatch("composing color permutations of different sizes");
    std::vector<int> img(pi.size());
    for (int j = 0; j < pi.size(); ++j) img[j] = pi(sigma(j));
    return ColorPermutation(std::move(img));
}

CGraph pi_complement(const CGraph& g, const ColorPermutation& pi) {
    if (pi.size() != g.prime())
        throw SizeMismatch("color permutation on " + std::to_string(pi.size()) +
                           " symbols, cgraph over GF(" + std::to_string(g.prime()) + ")");
    std::vector<int> colors = g.colors();
    for (int& c : colors) c = pi(c);
    return CGraph::from_colors(g.vertex_count(), g.modulus(), std::move(colors));
}

// --- monochromatic decomposition and local predicates ---

namespace {

void check_color(const CGraph& g, FieldElement j, bool reject_white) {
    if (j.modulus() != g.modulus()) throw ModulusMismatch();
    if (reject_white && j.is_zero()) throw WhiteColorRequested();
}

}  // namespace

CGraph monochromatic_component(const CGraph& g, FieldElement j) {
    check_color(g, j, true);
    std::vector<int> colors = g.colors();
    for (int& c : colors)
        if (c != j.value()) c = 0;
    return CGraph::from_colors(g.vertex_count(), g.modulus(), std::move(colors));
}

int degree(const CGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRange(v, g.vertex_count());
    int d = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v && g.color(u, v) != 0) ++d;
    return d;
}

bool is_j_complete(const CGraph& g, FieldElement j) {
    check_color(g, j, true);
    const std::vector<int>& colors = g.colors();
    return std::all_of(colors.begin(), colors.end(), [&](int c) { return c == j.value(); });
}

namespace {

std::vector<int> checked_vertex_set(const CGraph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count()) throw VertexOutOfRange(s[i], g.vertex_count());
        if (i > 0 && s[i] == s[i - 1])
            throw InvalidArgs("vertex " + std::to_string(s[i]) + " listed twice");
    }
    return s;
}

}  // namespace

bool is_k_independent(const CGraph& g, const std::vector<int>& s, FieldElement k) {
    check_color(g, k, false);
    std::vector<int> vs = checked_vertex_set(g, s);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.color(vs[i], vs[j]) == k.value()) return false;
    return true;
}

bool is_k_bipartite(const CGraph& g, const std::vector<int>& part_a,
                    const std::vector<int>& part_b, FieldElement k) {
    check_color(g, k, true);
    std::vector<int> a = checked_vertex_set(g, part_a);
    std::vector<int> b = checked_vertex_set(g, part_b);
    std::vector<int> side(g.vertex_count(), -1);
    for (int v : a) side[v] = 0;
    for (int v : b) {
        if (side[v] == 0) throw NotAPartition("vertex " + std::to_string(v) + " in both parts");
        side[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == -1) throw NotAPartition("vertex " + std::to_string(v) + " in neither part");

    bool crossing = false;
    for (const Edge& e : g.edges()) {
        if (e.color != k.value()) continue;
        if (side[e.u] == side[e.v]) return false;  // k-edge inside a part
        crossing = true;
    }
    return crossing;
}

CGraph k_complete_bipartite(int a, int b, FieldElement k) {
    if (a < 1 || b < 1) throw InvalidArgs("both part sizes must be >= 1");
    if (k.is_zero()) throw WhiteColorRequested();
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v, k.value()});
    return CGraph(a + b, k.modulus(), edges);
}

CGraph subgraph(const CGraph& g, std::vector<int> s) {
    std::vector<int> vs = checked_vertex_set(g, s);
    if (vs.empty()) throw InvalidArgs("subgraph on an empty vertex set");
    int k = static_cast<int>(vs.size());
    std::vector<int> colors(pair_count(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            colors[pair_index(i, j, k)] = g.color(vs[i], vs[j]);
    return CGraph::from_colors(k, g.modulus(), std::move(colors));
}

CGraph delete_vertex(const CGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRange(v, g.vertex_count());
    if (g.vertex_count() == 1) throw InvalidArgs("cannot delete the only vertex");
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return subgraph(g, keep);
}

CGraph delete_edge(const CGraph& g, int u, int v) {
    if (g.color(u, v) == 0) throw EdgeAbsent(u, v);
    return with_edge(g, u, v, 0);
}

CGraph with_edge(const CGraph& g, int u, int v, int color) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.vertex_count()) throw VertexOutOfRange(u < 0 ? u : v, g.vertex_count());
    if (u == v) throw InvalidArgs("self-loop not allowed");
    if (color < 0 || color >= g.prime())
        throw InvalidArgs("color " + std::to_string(color) + " not in [0, p-1]");
    std::vector<int> colors = g.colors();
    colors[pair_index(u, v, g.vertex_count())] = color;
    return CGraph::from_colors(g.vertex_count(), g.modulus(), std::move(colors));
}

// --- vector-space view ---

CVector::CVector(Modulus mod, std::vector<int> entries)
    : mod_(mod), entries_(std::move(entries)) {
    for (int c : entries_) {
        if (c < 0 || c >= mod_.value())
            throw InvalidArgs("entry " + std::to_string(c) + " not in [0, p-1]");
    }
}

bool operator==(const CVector& a, const CVector& b) {
    return a.mod_ == b.mod_ && a.entries_ == b.entries_;
}

CVector to_vector(const CGraph& g) { return CVector(g.modulus(), g.colors()); }

CGraph from_vector(const CVector& v, int vertex_count) {
    if (v.size() != pair_count(vertex_count))
        throw LengthMismatch(v.size(), pair_count(vertex_count));
    return CGraph::from_colors(vertex_count, v.modulus(), v.entries());
}

CVector vector_add(const CVector& u, const CVector& v) {
    if (u.modulus() != v.modulus()) throw ModulusMismatch();
    if (u.size() != v.size()) throw LengthMismatch(v.size(), u.size());
    int p = u.modulus().value();
    std::vector<int> out(u.size());
    for (int i = 0; i < u.size(); ++i) out[i] = (u.at(i) + v.at(i)) % p;
    return CVector(u.modulus(), std::move(out));
}

CVector scalar_mul(FieldElement c, const CVector& v) {
    if (c.modulus() != v.modulus()) throw ModulusMismatch();
    int p = v.modulus().value();
    std::vector<int> out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = (c.value() * v.at(i)) % p;
    return CVector(v.modulus(), std::move(out));
}

Relation classify_relative(const CVector& base, const CVector& w) {
    if (base.modulus() != w.modulus()) throw ModulusMismatch();
    if (base.size() != w.size()) throw LengthMismatch(w.size(), base.size());
    bool sub = true, super = true;
    for (int i = 0; i < base.size(); ++i) {
        if (w.at(i) > base.at(i)) sub = false;
        if (w.at(i) < base.at(i)) super = false;
    }
    if (sub && super) return Relation::Both;
    if (sub) return Relation::Subcgraph;
    if (super) return Relation::Supercgraph;
    return Relation::Neither;
}

const char* to_string(Relation r) {
    switch (r) {
        case Relation::Subcgraph: return "Subcgraph";
        case Relation::Supercgraph: return "Supercgraph";
        case Relation::Neither: return "Neither";
        case Relation::Both: return "Both";
    }
    return "?";
}

void for_each_labeled(int vertex_count, Modulus mod,
                      const std::function<void(const CGraph&)>& visit) {
    int q = pair_count(vertex_count);
    int p = mod.value();
    std::vector<int> colors(q, 0);
    while (true) {
        visit(CGraph::from_colors(vertex_count, mod, colors));
        int i = q - 1;
        while (i >= 0 && colors[i] == p - 1) colors[i--] = 0;
        if (i < 0) break;
        ++colors[i];
    }
}

}  // namespace cgraph
