#pragma once

#include <string>
#include <string_view>

#include "errors.hpp"
#include "graph.hpp"

namespace chibound {

// graph6: a size header N(n) followed by the upper triangle of the adjacency
// matrix in column order (0,1), (0,2), (1,2), (0,3), ... packed six bits per
// byte, most significant bit first, each byte offset by 63. Orders up to 62
// use a single header byte; larger orders use '~' followed by 18 bits.

namespace detail {

inline constexpr char kGraph6Offset = 63;
inline constexpr std::string_view kGraph6Prefix = ">>graph6<<";

inline int graph6_sixbits(std::string_view text, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError(pos, "character code " + std::to_string(c) + " outside graph6 range 63..126");
    return c - 63;
}

}  // namespace detail

inline std::string serialize_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + detail::kGraph6Offset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + detail::kGraph6Offset));
    }
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::kGraph6Offset));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kGraph6Offset));
    return out;
}

/// Parses exactly one graph6 record. An optional ">>graph6<<" prefix is
/// accepted; anything else, including a trailing newline, is rejected.
inline Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(detail::kGraph6Prefix)) pos = detail::kGraph6Prefix.size();
    if (pos >= text.size()) throw ParseError(pos, "missing graph6 size header");

    long n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw ParseError(pos, "orders above 258047 are not supported");
        if (pos + 4 > text.size()) throw ParseError(text.size(), "truncated graph6 size header");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | detail::graph6_sixbits(text, pos + k);
        if (n < 63) throw ParseError(pos, "non-canonical long header for order " + std::to_string(n));
        pos += 4;
    } else {
        n = detail::graph6_sixbits(text, pos);
        pos += 1;
    }
    if (n > kMaxVertices)
        throw ParseError(pos - 1, "order " + std::to_string(n) + " exceeds the " +
                                      std::to_string(kMaxVertices) + "-vertex limit");

    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + body)
        throw ParseError(text.size(), "truncated adjacency data: expected " + std::to_string(body) +
                                          " bytes after header");
    if (text.size() > pos + body) throw ParseError(pos + body, "trailing data after graph6 record");

    GraphBuilder b(static_cast<int>(n));
    long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((detail::graph6_sixbits(text, at) >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (detail::graph6_sixbits(text, last) & pad_mask)
            throw ParseError(last, "nonzero padding bits");
    }
    return b.build();
}

}  // namespace chibound
