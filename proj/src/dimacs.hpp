#ifndef LINCOM_DIMACS_HPP
#define LINCOM_DIMACS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lincom {

struct DimacsParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedGraph {
    Graph graph;
    // Non-fatal oddities (declared-m mismatch, dropped duplicates/self-loops).
    std::vector<std::string> warnings;
};

// DIMACS ASCII: `c` comment lines, one `p edge <n> <m>` (or `p col`) before
// any `e <u> <v>` line with 1-based endpoints. Blank lines and stray spaces
// are tolerated. The declared m is advisory. Hard errors carry line numbers.
ParsedGraph parse_dimacs(std::istream& in);
ParsedGraph parse_dimacs_string(const std::string& text);
ParsedGraph parse_dimacs_file(const std::string& path);

// Canonical form: `p edge n m` then one `e u v` per edge, 1-based, u < v,
// lexicographic. parse(serialize(parse(x))) == parse(x).
std::string serialize_dimacs(const Graph& g);

} // namespace lincom

#endif
