#include "cgraph/structure.hpp"

#include <algorithm>
#include <deque>

namespace cgraph {

namespace {

// BFS over edges accepted by `admit`, neighbors scanned in ascending order.
// Returns the parent array (-1 = unreached, s is its own parent).
std::vector<int> bfs_parents(const CGraph& g, int s,
                             const std::function<bool(int)>& admit) {
    std::vector<int> parent(g.vertex_count(), -1);
    parent[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (u == v || parent[u] != -1) continue;
            if (!admit(g.color(v, u))) continue;
            parent[u] = v;
            queue.push_back(u);
        }
    }
    return parent;
}

std::vector<int> path_from_parents(const std::vector<int>& parent, int s, int t) {
    std::vector<int> path;
    for (int v = t; v != s; v = parent[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

void check_vertex(const CGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRange(v, g.vertex_count());
}

void check_k(const CGraph& g, FieldElement k) {
    if (k.modulus() != g.modulus()) throw ModulusMismatch();
    if (k.is_zero()) throw WhiteColorRequested();
}

}  // namespace

ComponentPartition components(const CGraph& g) {
    ComponentPartition out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> parent = bfs_parents(g, s, [](int c) { return c != 0; });
        std::vector<int> block;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (parent[v] != -1) {
                block.push_back(v);
                seen[v] = true;
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

bool is_connected(const CGraph& g) { return components(g).blocks.size() == 1; }

std::optional<KPath> find_k_path(const CGraph& g, FieldElement k, int s, int t) {
    check_k(g, k);
    check_vertex(g, s);
    check_vertex(g, t);
    if (s == t) return KPath{k, {s}, false};
    std::vector<int> parent = bfs_parents(g, s, [&](int c) { return c == k.value(); });
    if (parent[t] == -1) return std::nullopt;
    return KPath{k, path_from_parents(parent, s, t), false};
}

std::optional<KPath> find_k_cycle(const CGraph& g, FieldElement k) {
    check_k(g, k);
    std::optional<std::vector<int>> best;
    for (const Edge& e : g.edges()) {
        if (e.color != k.value()) continue;
        // Shortest k-path between the endpoints avoiding the edge itself;
        // closing it up gives the shortest k-cycle through this edge.
        CGraph without = delete_edge(g, e.u, e.v);
        std::vector<int> parent =
            bfs_parents(without, e.u, [&](int c) { return c == k.value(); });
        if (parent[e.v] == -1) continue;
        std::vector<int> cycle = path_from_parents(parent, e.u, e.v);

        // Normalize: start at the least vertex, then the lesser direction.
        auto least = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), least, cycle.end());
        std::vector<int> reversed{cycle.front()};
        reversed.insert(reversed.end(), cycle.rbegin(), cycle.rend() - 1);
        if (reversed < cycle) cycle = std::move(reversed);

        if (!best || cycle.size() < best->size() ||
            (cycle.size() == best->size() && cycle < *best))
            best = std::move(cycle);
    }
    if (!best) return std::nullopt;
    return KPath{k, *best, true};
}

bool is_j_connected(const CGraph& g, FieldElement j) {
    check_k(g, j);
    return is_connected(monochromatic_component(g, j));
}

std::vector<int> odd_degree_path(const CGraph& g) {
    std::vector<int> odd;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (degree(g, v) % 2 == 1) odd.push_back(v);
    if (odd.size() != 2)
        throw PreconditionViolated("cgraph has " + std::to_string(odd.size()) +
                                   " odd-degree vertices, need exactly 2");
    // The two odd vertices share a component (the number of odd-degree
    // vertices in any component is even), so the walk always exists.
    std::vector<int> parent = bfs_parents(g, odd[0], [](int c) { return c != 0; });
    return path_from_parents(parent, odd[0], odd[1]);
}

long long max_colored_edges(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw InvalidArgs("need 1 <= k <= n");
    long long s = n - k;
    return s * (s + 1) / 2;
}

}  // namespace cgraph
