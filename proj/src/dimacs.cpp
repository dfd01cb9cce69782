#include "dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace lincom {
namespace {

[[noreturn]] void fail(std::int64_t line_no, const std::string& what) {
    throw DimacsParseError("line " + std::to_string(line_no) + ": " + what);
}

// Splits on blanks; returns false for an empty/whitespace-only line.
bool tokenize(const std::string& line, std::vector<std::string>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return !out.empty();
}

std::int64_t parse_int(const std::string& tok, std::int64_t line_no, const char* role) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(line_no, std::string("expected integer ") + role + ", got '" + tok + "'");
    return value;
}

} // namespace

ParsedGraph parse_dimacs(std::istream& in) {
    std::string line;
    std::vector<std::string> tok;
    std::int64_t line_no = 0;
    std::int64_t declared_n = -1, declared_m = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!tokenize(line, tok)) continue;
        const std::string& kind = tok[0];
        if (kind == "c") continue;
        if (kind == "p") {
            if (declared_n >= 0) fail(line_no, "duplicate p-line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                fail(line_no, "malformed p-line, expected 'p edge <n> <m>'");
            declared_n = parse_int(tok[2], line_no, "vertex count");
            declared_m = parse_int(tok[3], line_no, "edge count");
            if (declared_n < 0) fail(line_no, "negative vertex count");
            edges.reserve(static_cast<std::size_t>(std::max<std::int64_t>(declared_m, 0)));
            continue;
        }
        if (kind == "e") {
            if (declared_n < 0) fail(line_no, "edge line before p-line");
            if (tok.size() != 3) fail(line_no, "malformed e-line, expected 'e <u> <v>'");
            std::int64_t u = parse_int(tok[1], line_no, "endpoint");
            std::int64_t v = parse_int(tok[2], line_no, "endpoint");
            if (u < 1 || v < 1)
                fail(line_no, "vertex id " + std::to_string(std::min(u, v)) + " below 1");
            if (u > declared_n || v > declared_n)
                fail(line_no, "vertex id " + std::to_string(std::max(u, v)) +
                                  " exceeds declared " + std::to_string(declared_n));
            edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            continue;
        }
        fail(line_no, "unknown line type '" + kind + "'");
    }
    if (declared_n < 0) throw DimacsParseError("missing p-line");

    ParsedGraph out{Graph::from_edges(edges, static_cast<VertexId>(declared_n)), {}};
    if (out.graph.dropped_input_edges() > 0)
        out.warnings.push_back(std::to_string(out.graph.dropped_input_edges()) +
                               " duplicate/self-loop edge lines dropped");
    if (out.graph.edge_count() != declared_m)
        out.warnings.push_back("declared m=" + std::to_string(declared_m) + " but " +
                               std::to_string(out.graph.edge_count()) +
                               " distinct edges parsed");
    return out;
}

ParsedGraph parse_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

ParsedGraph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DimacsParseError("cannot open '" + path + "'");
    return parse_dimacs(in);
}

std::string serialize_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace lincom
