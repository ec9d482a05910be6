#include "cgraph/iso.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cgraph {

// --- VertexPermutation ---

VertexPermutation::VertexPermutation(std::vector<int> images) : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    if (n == 0) throw InvalidArgs("empty vertex permutation");
    std::vector<bool> seen(n, false);
    for (int x : images_) {
        if (x < 0 || x >= n || seen[x]) throw InvalidArgs("image list is not a bijection");
        seen[x] = true;
    }
}

VertexPermutation VertexPermutation::identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    return VertexPermutation(std::move(img));
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return VertexPermutation(std::move(inv));
}

std::vector<std::vector<int>> VertexPermutation::matrix() const {
    std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
    for (int i = 0; i < size(); ++i) m[images_[i]][i] = 1;
    return m;
}

VertexPermutation compose(const VertexPermutation& pi, const VertexPermutation& sigma) {
    if (pi.size() != sigma.size())
        throw SizeMismatch("composing vertex permutations of different sizes");
    std::vector<int> img(pi.size());
    for (int i = 0; i < pi.size(); ++i) img[i] = pi(sigma(i));
    return VertexPermutation(std::move(img));
}

CGraph apply_vertex_perm(const CGraph& g, const VertexPermutation& sigma) {
    if (sigma.size() != g.vertex_count())
        throw SizeMismatch("permutation on " + std::to_string(sigma.size()) +
                           " symbols, cgraph on " + std::to_string(g.vertex_count()));
    int m = g.vertex_count();
    std::vector<int> colors(pair_count(m), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int a = sigma(i), b = sigma(j);
            if (a > b) std::swap(a, b);
            colors[pair_index(a, b, m)] = g.colors()[pair_index(i, j, m)];
        }
    }
    return CGraph::from_colors(m, g.modulus(), std::move(colors));
}

// --- CanonicalCode ---

CanonicalCode::CanonicalCode(int vertex_count, int prime, std::vector<int> code)
    : m_(vertex_count), p_(prime), code_(std::move(code)) {
    if (static_cast<int>(code_.size()) != pair_count(m_))
        throw LengthMismatch(code_.size(), pair_count(m_));
}

CGraph CanonicalCode::representative() const {
    return CGraph::from_colors(m_, Modulus(p_), code_);
}

std::string CanonicalCode::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < code_.size(); ++i) {
        if (i) out << ' ';
        out << code_[i];
    }
    return out.str();
}

int search_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("CGRAPH_SEARCH_LIMIT")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 10;
    }();
    return limit;
}

namespace {

void check_limit(const CGraph& g, int limit) {
    if (g.vertex_count() > limit)
        throw TooLarge("cgraph on " + std::to_string(g.vertex_count()) +
                       " vertices exceeds the search limit " + std::to_string(limit));
}

// Exact minimization over all m! relabelings. `placement[d]` is the original
// vertex put at new position d; the code of a placement reads, in the pair
// order (0,1), (0,2), ..., the colors between placed originals. Positions are
// filled left to right, so after placing depth d the code prefix
// (0,1)..(0,d) is known and prunes against the best string found so far:
// the entry written at depth d is exactly code position (0,d). With a
// candidate order ascending by that entry, good strings are reached early.
// Entries beyond row 0 become known only when all positions are filled;
// leaves compare the full string.
class Canonicalizer {
public:
    explicit Canonicalizer(const CGraph& g) : g_(g), m_(g.vertex_count()) {}

    std::vector<int> run() {
        best_ = initial_guess();
        placement_.assign(m_, -1);
        used_.assign(m_, false);
        // Any starting vertex may begin the optimum; candidates for later
        // depths are pruned against row 0 of the best string.
        for (int u = 0; u < m_; ++u) {
            placement_[0] = u;
            used_[u] = true;
            descend(1, /*tied=*/true);
            used_[u] = false;
        }
        return best_;
    }

private:
    std::vector<int> code_of(const std::vector<int>& placement) const {
        std::vector<int> code(pair_count(m_));
        for (int a = 0; a < m_; ++a)
            for (int b = a + 1; b < m_; ++b)
                code[pair_index(a, b, m_)] = g_.color(placement[a], placement[b]);
        return code;
    }

    // Vertices ordered by (degree, sorted incident colors) make a decent
    // first bound; low degree first, since white sorts below every color.
    std::vector<int> initial_guess() const {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int v = 0; v < m_; ++v) {
            std::vector<int> incident;
            for (int u = 0; u < m_; ++u)
                if (u != v) incident.push_back(g_.color(u, v));
            std::sort(incident.begin(), incident.end());
            keyed.emplace_back(std::move(incident), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> placement;
        for (auto& [key, v] : keyed) placement.push_back(v);
        return code_of(placement);
    }

    // `tied` records whether the known prefix still equals the best string;
    // once the prefix is strictly below, descendants skip prefix checks and
    // settle everything at the leaf. Pruning compares against the current
    // best, which may have improved since an ancestor's check; that only
    // ever discards subtrees that are already beaten.
    void descend(int depth, bool tied) {
        if (depth == m_) {
            std::vector<int> code = code_of(placement_);
            if (code < best_) best_ = std::move(code);
            return;
        }
        int anchor = placement_[0];
        // Candidates ascending by the code entry they would write at (0,depth).
        std::vector<std::pair<int, int>> cands;
        for (int u = 0; u < m_; ++u)
            if (!used_[u]) cands.emplace_back(g_.color(anchor, u), u);
        std::sort(cands.begin(), cands.end());
        for (auto [entry, u] : cands) {
            bool child_tied = tied;
            if (tied) {
                int best_entry = best_[depth - 1];  // position of pair (0, depth)
                if (entry > best_entry) break;      // ascending: the rest are no better
                if (entry < best_entry) child_tied = false;
            }
            placement_[depth] = u;
            used_[u] = true;
            descend(depth + 1, child_tied);
            used_[u] = false;
        }
    }

    const CGraph& g_;
    int m_;
    std::vector<int> placement_;
    std::vector<bool> used_;
    std::vector<int> best_;
};

}  // namespace

CanonicalCode canonical_code(const CGraph& g, int limit) {
    check_limit(g, limit);
    if (g.vertex_count() == 1) return CanonicalCode(1, g.prime(), {});
    return CanonicalCode(g.vertex_count(), g.prime(), Canonicalizer(g).run());
}

namespace {

// Depth-first search for a color-preserving relabeling sigma of h with
// apply_vertex_perm(h, sigma) == g... seen from g's side: we pick the image
// img[i] in h of each g-vertex i in order, requiring colors to match on all
// pairs to earlier picks. Candidates ascend, so the first full map found is
// the lexicographically least witness.
bool extend_map(const CGraph& g, const CGraph& h, std::vector<int>& img,
                std::vector<bool>& used, int depth,
                const std::function<bool(const std::vector<int>&)>& on_found) {
    int m = g.vertex_count();
    if (depth == m) return on_found(img);
    for (int u = 0; u < m; ++u) {
        if (used[u]) continue;
        bool ok = true;
        for (int i = 0; i < depth; ++i) {
            if (g.color(i, depth) != h.color(img[i], u)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        img[depth] = u;
        used[u] = true;
        if (extend_map(g, h, img, used, depth + 1, on_found)) return true;
        used[u] = false;
    }
    return false;
}

bool color_histograms_match(const CGraph& g, const CGraph& h) {
    std::vector<int> cg(g.prime(), 0), ch(h.prime(), 0);
    for (int c : g.colors()) ++cg[c];
    for (int c : h.colors()) ++ch[c];
    return cg == ch;
}

}  // namespace

std::optional<VertexPermutation> cisomorphic(const CGraph& g, const CGraph& h, int limit) {
    if (g.modulus() != h.modulus()) throw ModulusMismatch();
    check_limit(g, limit);
    check_limit(h, limit);
    if (g.vertex_count() != h.vertex_count()) return std::nullopt;
    if (!color_histograms_match(g, h)) return std::nullopt;

    // The witness satisfies apply_vertex_perm(h, sigma) == g, i.e.
    // g.color(sigma(i), sigma(j)) == h.color(i, j): sigma is a
    // color-preserving map from h's labels into g, so the search runs
    // from h's side and the first find is the least witness.
    std::vector<int> img(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    std::optional<VertexPermutation> witness;
    extend_map(h, g, img, used, 0, [&](const std::vector<int>& found) {
        witness = VertexPermutation(found);
        return true;  // first = lexicographically least
    });
    return witness;
}

std::vector<VertexPermutation> cautomorphisms(const CGraph& g, int limit) {
    check_limit(g, limit);
    std::vector<int> img(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<VertexPermutation> group;
    extend_map(g, g, img, used, 0, [&](const std::vector<int>& found) {
        group.emplace_back(found);
        return false;  // keep searching
    });
    return group;
}

bool complement_commutes_check(const CGraph& g, const CGraph& h, const ColorPermutation& pi,
                               int limit) {
    bool plain = cisomorphic(g, h, limit).has_value();
    bool complemented = cisomorphic(pi_complement(g, pi), pi_complement(h, pi), limit).has_value();
    return plain == complemented;
}

}  // namespace cgraph
