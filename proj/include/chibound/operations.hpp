#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "graph.hpp"

namespace chibound {

inline Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.non_neighbors(u) & VertexSet::above(u)) b.add_edge(u, v);
    return b.build();
}

namespace detail {

inline GraphBuilder place_side_by_side(const Graph& g, const Graph& h)
{
    const int total = g.order() + h.order();
    if (total > kMaxVertices)
        throw GraphError("combined order " + std::to_string(total) + " exceeds " +
                         std::to_string(kMaxVertices) + " vertices");
    GraphBuilder b(total);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
    return b;
}

}  // namespace detail

/// g's vertices keep their labels; h's are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    return detail::place_side_by_side(g, h).build();
}

/// Disjoint union plus every edge between the two sides (Zykov sum).
inline Graph join(const Graph& g, const Graph& h)
{
    GraphBuilder b = detail::place_side_by_side(g, h);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
    return b.build();
}

/// Left fold of join over the list.
inline Graph join_all(std::initializer_list<Graph> parts)
{
    Graph acc;
    for (const Graph& p : parts) acc = join(acc, p);
    return acc;
}

/// The subgraph induced by s, relabelled 0..|s|-1 in ascending order of s.
inline Graph induced_subgraph(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices()))
        throw GraphError("vertex set is not contained in the " + std::to_string(g.order()) +
                         "-vertex graph");
    const std::vector<Vertex> members = s.to_vector();
    GraphBuilder b(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

/// Vertex v of g becomes vertex perm[v] of the result.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw GraphError("permutation length does not match graph order");
    VertexSet seen;
    for (Vertex p : perm) {
        if (p < 0 || p >= g.order() || seen.contains(p)) throw GraphError("not a permutation");
        seen.insert(p);
    }
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

/// Components sorted by their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp{unseen.first()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

inline bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

/// Number of unordered vertex pairs on n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edge set is read from `mask`, bit k standing for the k-th
/// pair in graph6 order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
inline Graph graph_from_pair_mask(int n, std::uint64_t mask)
{
    GraphBuilder b(n);
    int k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) b.add_edge(i, j);
    return b.build();
}

}  // namespace chibound
