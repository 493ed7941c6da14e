#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "clique.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "operations.hpp"
#include "patterns.hpp"

namespace chibound {

/// The k-cycle 0-1-...-(k-1)-0.
inline Graph cycle(int k)
{
    if (k < 3) throw GraphError("cycle needs at least 3 vertices");
    GraphBuilder b(Graph::checked_order(k));
    for (Vertex i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
    return b.build();
}

/// The 6-vertex wheel join(K1, C5): hub 0, rim 1-2-3-4-5-1.
inline Graph wheel6()
{
    return join(Graph(1), cycle(5));
}

namespace detail {

inline void expect_invariants(const Graph& g, int omega, int chi, const std::string& what)
{
    const int got_omega = max_clique(g).size;
    const int got_chi = chi_via_matching(g).colors;
    if (got_omega != omega || got_chi != chi)
        throw SelfCheckError(what + ": expected (omega, chi) = (" + std::to_string(omega) + ", " +
                             std::to_string(chi) + "), got (" + std::to_string(got_omega) + ", " +
                             std::to_string(got_chi) + ")");
}

}  // namespace detail

/// Join of r copies of C5; self-checked to have omega = 2r, chi = 3r.
///
/// For r >= 2 the result contains 2K1+(K2uK1) (two non-adjacent vertices of
/// one C5 together with an edge and an opposite vertex of another), so it is
/// not a class member; only r = 1 is.
inline Graph extremal_even(int r)
{
    if (r < 1) throw GraphError("extremal_even requires r >= 1");
    if (5 * r > kMaxVertices) throw GraphError("extremal_even(" + std::to_string(r) + ") exceeds the vertex limit");
    Graph g = cycle(5);
    for (int i = 1; i < r; ++i) g = join(g, cycle(5));
    detail::expect_invariants(g, 2 * r, 3 * r, "extremal_even(" + std::to_string(r) + ")");
    return g;
}

/// Join of (m-1) copies of C5 with the wheel W6, targeting omega = 2m+1 and
/// chi = 3m+1. Only m = 1 (W6 itself) is a class member.
inline Graph extremal_odd(int m)
{
    if (m < 1) throw GraphError("extremal_odd requires m >= 1");
    if (5 * (m - 1) + 6 > kMaxVertices)
        throw GraphError("extremal_odd(" + std::to_string(m) + ") exceeds the vertex limit");
    Graph g;
    for (int i = 1; i < m; ++i) g = join(g, cycle(5));
    g = join(g, wheel6());
    detail::expect_invariants(g, 2 * m + 1, 3 * m + 1, "extremal_odd(" + std::to_string(m) + ")");
    return g;
}

/// Vertex names of extremal_omega5(), by index.
inline constexpr std::array<std::string_view, 16> kOmega5Labels{
    "v", "w", "y1", "y2", "y3", "y1'", "y2'", "y3'", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4"};

/// Non-adjacency lists of the 16-vertex omega = 5 graph, by label.
inline constexpr std::array<std::pair<std::string_view, std::array<std::string_view, 5>>, 16> kOmega5NonAdjacency{{
    {"v", {"w", "c1", "c2", "c3", "c4"}},
    {"w", {"v", "b1", "b2", "b3", "b4"}},
    {"b1", {"w", "c1", "y1'", "y2'", "y3'"}},
    {"b2", {"w", "c2", "y1", "y2", "y3'"}},
    {"b3", {"w", "c3", "y1", "y2'", "y3"}},
    {"b4", {"w", "c4", "y1'", "y2", "y3"}},
    {"c1", {"v", "b1", "y1", "y2", "y3"}},
    {"c2", {"v", "b2", "y1'", "y2'", "y3"}},
    {"c3", {"v", "b3", "y1'", "y2", "y3'"}},
    {"c4", {"v", "b4", "y1", "y2'", "y3'"}},
    {"y1", {"y1'", "c1", "b2", "b3", "c4"}},
    {"y1'", {"y1", "b1", "c2", "c3", "b4"}},
    {"y2", {"y2'", "c1", "b2", "c3", "b4"}},
    {"y2'", {"y2", "b1", "c2", "b3", "c4"}},
    {"y3", {"y3'", "c1", "c2", "b3", "b4"}},
    {"y3'", {"y3", "b1", "b2", "c3", "c4"}},
}};

inline Vertex omega5_vertex(std::string_view label)
{
    for (std::size_t i = 0; i < kOmega5Labels.size(); ++i)
        if (kOmega5Labels[i] == label) return static_cast<Vertex>(i);
    throw SelfCheckError("unknown vertex label '" + std::string(label) + "' in omega-5 table");
}

/// The 16-vertex, 10-regular class member with omega = 5 and chi = 8,
/// built as the complement of its non-adjacency table. Construction checks
/// that the table is symmetric, then self-checks degree, omega, chi and
/// membership.
inline Graph extremal_omega5()
{
    constexpr int n = static_cast<int>(kOmega5Labels.size());
    GraphBuilder non(n);
    for (const auto& [label, missing] : kOmega5NonAdjacency)
        for (std::string_view other : missing) non.add_edge(omega5_vertex(label), omega5_vertex(other));
    const Graph non_graph = non.build();

    for (const auto& [label, missing] : kOmega5NonAdjacency)
        for (std::string_view other : missing) {
            bool listed_back = false;
            for (const auto& [l2, m2] : kOmega5NonAdjacency)
                if (l2 == other)
                    for (std::string_view x : m2) listed_back = listed_back || x == label;
            if (!listed_back)
                throw SelfCheckError("omega-5 table asymmetric: " + std::string(label) + " lists " +
                                     std::string(other) + " but not conversely");
        }

    const Graph g = complement(non_graph);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 10)
            throw SelfCheckError("omega-5 graph: vertex " + std::string(kOmega5Labels[v]) + " has degree " +
                                 std::to_string(g.degree(v)));
    detail::expect_invariants(g, 5, 8, "extremal_omega5()");
    if (!in_class(g)) throw SelfCheckError("extremal_omega5(): not a class member");
    return g;
}

}  // namespace chibound
