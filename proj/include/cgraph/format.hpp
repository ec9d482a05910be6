#ifndef CGRAPH_FORMAT_HPP
#define CGRAPH_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cgraph/core.hpp"

namespace cgraph {

// The cgraph text format:
//
//   cgraph p=<prime> n=<vertex count>
//   <u> <v> <color>
//   ...
//
// with 0 <= u < v < n, 1 <= color <= p-1, one edge per line, sorted
// lexicographically on (u, v); absent pairs are white. Blank lines and
// lines whose first non-blank character is '#' are ignored. A duplicated
// or out-of-order pair is a parse error. Errors carry the line number.
CGraph parse_cgraph(std::istream& in);
CGraph parse_cgraph(const std::string& text);
CGraph read_cgraph_file(const std::string& path);

// Serialization is the unique canonical form of the same format; the
// optional comment lines are emitted (prefixed "# ") right after the header.
std::string write_cgraph(const CGraph& g, const std::vector<std::string>& comments = {});

}  // namespace cgraph

#endif
