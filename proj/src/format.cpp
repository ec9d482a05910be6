#include "cgraph/format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cgraph {

namespace {

bool significant(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return false;
        if (!isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

}  // namespace

CGraph parse_cgraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int p = -1, n = -1;

    // Header: first significant line.
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream hs(line);
        std::string tag, ptok, ntok;
        hs >> tag >> ptok >> ntok;
        std::string rest;
        if (tag != "cgraph" || ptok.rfind("p=", 0) != 0 || ntok.rfind("n=", 0) != 0 ||
            (hs >> rest))
            throw ParseError(lineno, "expected header 'cgraph p=<prime> n=<count>'");
        try {
            p = std::stoi(ptok.substr(2));
            n = std::stoi(ntok.substr(2));
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed header numbers");
        }
        break;
    }
    if (p < 0) throw ParseError(lineno + 1, "missing header");
    if (!is_prime(p)) throw ParseError(lineno, "p=" + std::to_string(p) + " is not prime");
    if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");

    Modulus mod(p);
    std::vector<Edge> edges;
    int prev_u = -1, prev_v = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream es(line);
        int u, v, c;
        std::string rest;
        if (!(es >> u >> v >> c) || (es >> rest))
            throw ParseError(lineno, "expected '<u> <v> <color>'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range [0, " + std::to_string(n) + ")");
        if (u >= v) throw ParseError(lineno, "edges must satisfy u < v");
        if (c < 1 || c > p - 1)
            throw ParseError(lineno, "color must be in [1, " + std::to_string(p - 1) + "]");
        if (u < prev_u || (u == prev_u && v < prev_v))
            throw ParseError(lineno, "edges must be sorted lexicographically");
        if (u == prev_u && v == prev_v) throw ParseError(lineno, "duplicate pair");
        prev_u = u;
        prev_v = v;
        edges.push_back({u, v, c});
    }
    return CGraph(n, mod, edges);
}

CGraph parse_cgraph(const std::string& text) {
    std::istringstream in(text);
    return parse_cgraph(in);
}

CGraph read_cgraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgs("cannot open file: " + path);
    return parse_cgraph(in);
}

std::string write_cgraph(const CGraph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    out << "cgraph p=" << g.prime() << " n=" << g.vertex_count() << "\n";
    for (const std::string& c : comments) out << "# " << c << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

}  // namespace cgraph
