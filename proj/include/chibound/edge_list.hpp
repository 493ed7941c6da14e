#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "graph.hpp"

namespace chibound {

// DIMACS-style edge list:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (1-indexed, m lines)

/// ParseError offsets are byte positions of the offending line start.
inline Graph parse_dimacs(std::string_view text)
{
    std::size_t line_start = 0;
    int n = -1;
    long declared = -1, seen = 0;
    GraphBuilder b(0);

    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string line(text.substr(line_start, line_end - line_start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream in(line);
        std::string tag;
        in >> tag;

        if (tag.empty() || tag == "c") {
            line_start = line_end + 1;
            continue;
        }
        if (tag == "p") {
            std::string kind;
            long nn = -1;
            if (n >= 0) throw ParseError(line_start, "duplicate problem line");
            if (!(in >> kind >> nn >> declared) || (kind != "edge" && kind != "col"))
                throw ParseError(line_start, "expected 'p edge <n> <m>'");
            if (nn < 0 || nn > kMaxVertices)
                throw ParseError(line_start, "order " + std::to_string(nn) + " exceeds the " +
                                                 std::to_string(kMaxVertices) + "-vertex limit");
            n = static_cast<int>(nn);
            b = GraphBuilder(n);
        } else if (tag == "e") {
            long u = 0, v = 0;
            if (n < 0) throw ParseError(line_start, "edge line before problem line");
            if (!(in >> u >> v)) throw ParseError(line_start, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(line_start, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_start, "self-loop");
            b.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++seen;
        } else {
            throw ParseError(line_start, "unknown line type '" + tag + "'");
        }
        std::string rest;
        if (in >> rest) throw ParseError(line_start, "trailing tokens on line");
        line_start = line_end + 1;
    }
    if (n < 0) throw ParseError(text.size(), "missing problem line");
    if (seen != declared)
        throw ParseError(text.size(), "problem line declares " + std::to_string(declared) +
                                          " edges but " + std::to_string(seen) + " were listed");
    return b.build();
}

inline std::string serialize_dimacs(const Graph& g)
{
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

}  // namespace chibound
