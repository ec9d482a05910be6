#include "cgraph/apply.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace cgraph {

AssignmentMatrix::AssignmentMatrix(int persons, int jobs)
    : rows_(persons), cols_(jobs), real_rows_(persons), real_cols_(jobs) {
    if (persons < 1 || jobs < 1) throw InvalidArgs("matrix needs at least one row and column");
    entries_.assign(static_cast<std::size_t>(persons) * jobs, 0);
}

AssignmentMatrix::AssignmentMatrix(int rows, int cols, int real_rows, int real_cols,
                                   std::vector<int> entries)
    : rows_(rows), cols_(cols), real_rows_(real_rows), real_cols_(real_cols),
      entries_(std::move(entries)) {}

AssignmentMatrix AssignmentMatrix::from_entries(int rows, int cols, std::vector<int> entries) {
    AssignmentMatrix m(rows, cols);
    if (entries.size() != m.entries_.size())
        throw LengthMismatch(entries.size(), m.entries_.size());
    for (int u = 0; u < rows; ++u) {
        for (int v = 0; v < cols; ++v) {
            int e = entries[static_cast<std::size_t>(u) * cols + v];
            if (e != 0 && e != v + 1)
                throw InvalidArgs("entry at (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is " + std::to_string(e) + ", must be 0 or " +
                                  std::to_string(v + 1));
        }
    }
    m.entries_ = std::move(entries);
    return m;
}

int AssignmentMatrix::at(int u, int v) const {
    if (u < 0 || u >= rows_) throw VertexOutOfRange(u, rows_);
    if (v < 0 || v >= cols_) throw VertexOutOfRange(v, cols_);
    return entries_[static_cast<std::size_t>(u) * cols_ + v];
}

bool AssignmentMatrix::admissible(int u, int v) const { return at(u, v) != 0; }

AssignmentMatrix build_assignment_matrix(const CGraph& g, const std::vector<int>& persons,
                                         const std::vector<int>& jobs) {
    int m = g.vertex_count();
    std::vector<int> side(m, -1);  // 0 = person, 1 = job
    std::vector<int> index(m, -1);
    auto place = [&](const std::vector<int>& part, int tag) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            int v = part[i];
            if (v < 0 || v >= m) throw VertexOutOfRange(v, m);
            if (side[v] != -1) throw NotAPartition("vertex " + std::to_string(v) + " listed twice");
            side[v] = tag;
            index[v] = static_cast<int>(i);
        }
    };
    place(persons, 0);
    place(jobs, 1);
    for (int v = 0; v < m; ++v)
        if (side[v] == -1) throw NotAPartition("vertex " + std::to_string(v) + " in neither part");
    if (persons.empty() || jobs.empty()) throw NotAPartition("both parts must be nonempty");

    AssignmentMatrix out(static_cast<int>(persons.size()), static_cast<int>(jobs.size()));
    std::vector<int> entries(static_cast<std::size_t>(out.rows()) * out.cols(), 0);
    for (const Edge& e : g.edges()) {
        if (side[e.u] == side[e.v])
            throw NotBipartite("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                               "} lies inside one part");
        int u = side[e.u] == 0 ? e.u : e.v;  // person endpoint
        int v = side[e.u] == 0 ? e.v : e.u;  // job endpoint
        int job = index[v];
        if (e.color != job + 1)
            throw ColorConventionViolated("edge at job " + std::to_string(job + 1) +
                                          " has color " + std::to_string(e.color) + ", expected " +
                                          std::to_string(job + 1));
        entries[static_cast<std::size_t>(index[u]) * out.cols() + job] = job + 1;
    }
    return AssignmentMatrix::from_entries(out.rows(), out.cols(), std::move(entries));
}

CGraph assignment_cgraph(const AssignmentMatrix& m, Modulus mod) {
    if (m.rows() != m.real_rows() || m.cols() != m.real_cols())
        throw PreconditionViolated("padded matrices have no cgraph form");
    if (mod.value() <= m.cols())
        throw TooSmall("modulus " + std::to_string(mod.value()) +
                       " cannot color jobs 1.." + std::to_string(m.cols()));
    int n = m.rows();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m.cols(); ++v)
            if (m.at(u, v) != 0) edges.push_back({u, n + v, v + 1});
    return CGraph(n + m.cols(), mod, edges);
}

namespace {

// Lexicographically next admissible sigma, depth-first by row. Returns true
// once `limit` distinct real projections have been collected.
bool assignment_search(const AssignmentMatrix& m, int row, std::vector<int>& sigma,
                       std::vector<bool>& used,
                       std::set<std::vector<std::pair<int, int>>>& seen,
                       std::vector<Assignment>& out, int limit) {
    int n = m.rows();
    if (row == n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < m.real_rows(); ++u)
            if (sigma[u] < m.real_cols()) pairs.emplace_back(u, sigma[u]);
        if (seen.insert(pairs).second) out.push_back(Assignment{std::move(pairs)});
        return static_cast<int>(out.size()) >= limit;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v] || !m.admissible(row, v)) continue;
        used[v] = true;
        sigma[row] = v;
        bool done = assignment_search(m, row + 1, sigma, used, seen, out, limit);
        used[v] = false;
        if (done) return true;
    }
    return false;
}

}  // namespace

std::vector<Assignment> find_assignments(const AssignmentMatrix& m, int limit) {
    if (m.rows() != m.cols()) throw NotSquare(m.rows(), m.cols());
    if (limit < 1) throw InvalidArgs("limit must be at least 1");
    std::vector<int> sigma(m.rows());
    std::vector<bool> used(m.rows(), false);
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<Assignment> out;
    assignment_search(m, 0, sigma, used, seen, out, limit);
    return out;
}

AssignmentMatrix pad_to_square(const AssignmentMatrix& m) {
    if (m.rows() == m.cols()) return m;
    int n = std::max(m.rows(), m.cols());
    std::vector<int> entries(static_cast<std::size_t>(n) * n, AssignmentMatrix::kWildcard);
    for (int u = 0; u < m.rows(); ++u)
        for (int v = 0; v < m.cols(); ++v)
            entries[static_cast<std::size_t>(u) * n + v] = m.at(u, v);
    return AssignmentMatrix(n, n, m.real_rows(), m.real_cols(), std::move(entries));
}

AssignmentMatrix parse_matrix(std::istream& in) {
    std::vector<int> entries;
    int rows = 0, cols = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::string tok;
        std::vector<int> values;
        bool comment = false;
        while (row >> tok) {
            if (tok[0] == '#') {
                comment = values.empty();
                if (!comment) throw ParseError(lineno, "unexpected token '" + tok + "'");
                break;
            }
            std::size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "not an integer: '" + tok + "'");
            }
            if (pos != tok.size()) throw ParseError(lineno, "not an integer: '" + tok + "'");
            values.push_back(value);
        }
        if (values.empty()) continue;  // blank or comment line
        if (rows == 0) {
            cols = static_cast<int>(values.size());
        } else if (static_cast<int>(values.size()) != cols) {
            throw ParseError(lineno, "row has " + std::to_string(values.size()) +
                                         " entries, expected " + std::to_string(cols));
        }
        for (int v = 0; v < cols; ++v) {
            if (values[v] != 0 && values[v] != v + 1)
                throw ParseError(lineno, "entry " + std::to_string(values[v]) + " in column " +
                                             std::to_string(v + 1) + " must be 0 or " +
                                             std::to_string(v + 1));
        }
        entries.insert(entries.end(), values.begin(), values.end());
        ++rows;
    }
    if (rows == 0) throw ParseError(std::max(lineno, 1), "empty matrix");
    return AssignmentMatrix::from_entries(rows, cols, std::move(entries));
}

AssignmentMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

AssignmentMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgs("cannot open " + path);
    return parse_matrix(in);
}

std::string write_matrix(const AssignmentMatrix& m) {
    std::ostringstream out;
    for (int u = 0; u < m.rows(); ++u) {
        for (int v = 0; v < m.cols(); ++v) {
            if (v) out << " ";
            out << m.at(u, v);
        }
        out << "\n";
    }
    return out.str();
}

PlanePacking::PlanePacking(int order, std::vector<std::vector<int>> lines,
                           std::vector<int> coloring)
    : order_(order), points_(order * order + order + 1), lines_(std::move(lines)),
      coloring_(std::move(coloring)) {
    if (order < 2) throw TooSmall("plane order must be at least 2");
    if (static_cast<int>(lines_.size()) != points_)
        throw InvalidArgs("expected " + std::to_string(points_) + " lines");
    for (const auto& ln : lines_) {
        if (static_cast<int>(ln.size()) != order + 1)
            throw InvalidArgs("every line needs " + std::to_string(order + 1) + " points");
        for (std::size_t i = 0; i < ln.size(); ++i) {
            if (ln[i] < 0 || ln[i] >= points_) throw VertexOutOfRange(ln[i], points_);
            if (i > 0 && ln[i - 1] >= ln[i]) throw InvalidArgs("line points must ascend");
        }
    }
    if (static_cast<int>(coloring_.size()) != pair_count(points_))
        throw LengthMismatch(coloring_.size(), pair_count(points_));
    for (int c : coloring_)
        if (c < 0 || c > points_) throw InvalidArgs("line index " + std::to_string(c) +
                                                    " out of range");
}

int PlanePacking::line_through(int u, int v) const {
    if (u < 0 || u >= points_) throw VertexOutOfRange(u, points_);
    if (v < 0 || v >= points_) throw VertexOutOfRange(v, points_);
    if (u == v) throw InvalidArgs("a pair needs two distinct points");
    if (u > v) std::swap(u, v);
    return coloring_[pair_index(u, v, points_)];
}

PlanePacking build_projective_plane(int q) {
    if (!is_prime(q)) throw NotPrime(q);
    int n = q * q + q + 1;

    // Normalized homogeneous coordinates: one representative per
    // 1-dimensional subspace of GF(q)^3, leading nonzero coordinate 1.
    std::vector<std::array<int, 3>> reps;
    reps.reserve(n);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int a = 0; a < q; ++a) reps.push_back({0, 1, a});
    reps.push_back({0, 0, 1});

    // By duality the same list enumerates the lines: line (u, v, w) is the
    // set of points (x, y, z) with ux + vy + wz = 0 in GF(q).
    std::vector<std::vector<int>> lines(n);
    for (int i = 0; i < n; ++i) {
        const auto& l = reps[i];
        for (int pnt = 0; pnt < n; ++pnt) {
            const auto& x = reps[pnt];
            if ((l[0] * x[0] + l[1] * x[1] + l[2] * x[2]) % q == 0) lines[i].push_back(pnt);
        }
        if (static_cast<int>(lines[i].size()) != q + 1)
            throw Error("line " + std::to_string(i + 1) + " has " +
                        std::to_string(lines[i].size()) + " points, expected " +
                        std::to_string(q + 1));
    }

    // The lines must tile all C(n, 2) pairs exactly once; the pair counts
    // agree by arithmetic (C(n,2) = n * C(q+1,2)), the loop checks the
    // tiling itself.
    std::vector<int> coloring(pair_count(n), 0);
    for (int i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < lines[i].size(); ++a) {
            for (std::size_t b = a + 1; b < lines[i].size(); ++b) {
                int& slot = coloring[pair_index(lines[i][a], lines[i][b], n)];
                if (slot != 0)
                    throw Error("pair covered by lines " + std::to_string(slot) + " and " +
                                std::to_string(i + 1));
                slot = i + 1;
            }
        }
    }
    for (int c : coloring)
        if (c == 0) throw Error("uncovered pair in plane construction");
    if (pair_count(n) != n * pair_count(q + 1)) throw Error("pair count identity failed");

    return PlanePacking(q, std::move(lines), std::move(coloring));
}

PackingReport verify_packing(const PlanePacking& pk) {
    int n = pk.point_count();
    int classes = static_cast<int>(pk.lines().size());

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pk.line_through(u, v) == 0)
                return {false, "pair {" + std::to_string(u) + ", " + std::to_string(v) +
                                   "} is white"};

    // Point set of each color class: every vertex incident to an edge of
    // that color.
    std::vector<std::vector<int>> support(classes + 1);
    {
        std::vector<std::vector<bool>> in_class(classes + 1, std::vector<bool>(n, false));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                int c = pk.line_through(u, v);
                in_class[c][u] = in_class[c][v] = true;
            }
        }
        for (int c = 1; c <= classes; ++c)
            for (int v = 0; v < n; ++v)
                if (in_class[c][v]) support[c].push_back(v);
    }

    std::vector<int> cover(pair_count(n), 0);
    for (int c = 1; c <= classes; ++c)
        for (std::size_t a = 0; a < support[c].size(); ++a)
            for (std::size_t b = a + 1; b < support[c].size(); ++b)
                ++cover[pair_index(support[c][a], support[c][b], n)];
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int k = cover[pair_index(u, v, n)];
            if (k != 1)
                return {false, "pair {" + std::to_string(u) + ", " + std::to_string(v) +
                                   "} covered " + std::to_string(k) +
                                   " times, expected exactly once"};
        }
    }

    for (int c = 1; c <= classes; ++c)
        for (std::size_t a = 0; a < support[c].size(); ++a)
            for (std::size_t b = a + 1; b < support[c].size(); ++b)
                if (pk.line_through(support[c][a], support[c][b]) != c)
                    return {false, "color " + std::to_string(c) +
                                       " is not complete on its point set"};

    return {true, ""};
}

CGraph packing_cgraph(const PlanePacking& pk, Modulus mod) {
    if (mod.value() <= pk.point_count())
        throw TooSmall("modulus " + std::to_string(mod.value()) +
                       " cannot color line indices up to " + std::to_string(pk.point_count()));
    return CGraph::from_colors(pk.point_count(), mod, pk.coloring());
}

int smallest_prime_above(int n) {
    int c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

TriangleCensus triangle_census(const CGraph& g) {
    int m = g.vertex_count();
    TriangleCensus out;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int cij = g.color(i, j);
            if (cij == 0) continue;
            for (int k = j + 1; k < m; ++k) {
                int cik = g.color(i, k);
                int cjk = g.color(j, k);
                if (cik == 0 || cjk == 0) continue;
                ++out.total;
                if (cij == cik && cij == cjk)
                    ++out.monochromatic;
                else if (cij != cik && cij != cjk && cik != cjk)
                    ++out.rainbow;
                else
                    ++out.other;
            }
        }
    }
    return out;
}

std::vector<long long> monochromatic_clique_census(const CGraph& g, int r) {
    if (r < 2) throw InvalidArgs("need r >= 2");
    int m = g.vertex_count();
    std::vector<long long> counts(g.prime(), 0);
    if (r > m) return counts;

    std::vector<int> s(r);
    for (int i = 0; i < r; ++i) s[i] = i;
    while (true) {
        // A subset can only be complete in the color of its first pair.
        int c = g.color(s[0], s[1]);
        if (c != 0) {
            bool complete = true;
            for (int a = 0; a < r && complete; ++a)
                for (int b = a + 1; b < r; ++b)
                    if (g.color(s[a], s[b]) != c) {
                        complete = false;
                        break;
                    }
            if (complete) ++counts[c];
        }
        int i = r - 1;
        while (i >= 0 && s[i] == m - r + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
    }
    return counts;
}

}  // namespace cgraph
