#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace chibound {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Instances are immutable once built; use GraphBuilder or the free
/// combinators in operations.hpp to produce new graphs. Invariants:
/// adjacency is symmetric, irreflexive, and has no bits at or above n.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(checked_order(n)) {}

    static Graph complete(int n)
    {
        Graph g(n);
        const VertexSet all = VertexSet::range(n);
        for (Vertex v = 0; v < n; ++v) g.adj_[v] = all.without(v).bits();
        return g;
    }

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
    /// N(v) together with v itself.
    VertexSet closed_neighbors(Vertex v) const { return neighbors(v).with(v); }
    VertexSet non_neighbors(Vertex v) const { return vertices() - closed_neighbors(v); }

    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
    int degree(Vertex v) const { return neighbors(v).size(); }

    int max_degree() const
    {
        int best = 0;
        for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    int edge_count() const
    {
        int twice = 0;
        for (Vertex v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors(u) & VertexSet::above(u)) out.emplace_back(u, v);
        return out;
    }

    bool is_clique(VertexSet s) const
    {
        for (Vertex v : s)
            if (!(s.without(v)).subset_of(neighbors(v))) return false;
        return true;
    }

    bool is_independent(VertexSet s) const
    {
        for (Vertex v : s)
            if (neighbors(v).intersects(s)) return false;
        return true;
    }

    bool is_complete() const { return edge_count() * 2 == n_ * (n_ - 1); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
    }

    static int checked_order(int n)
    {
        if (n < 0 || n > kMaxVertices)
            throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVertices) + "]");
        return n;
    }

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    explicit GraphBuilder(const Graph& start) : g_(start) {}

    int order() const { return g_.n_; }

    GraphBuilder& add_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        g_.adj_[u] |= std::uint64_t{1} << v;
        g_.adj_[v] |= std::uint64_t{1} << u;
        return *this;
    }

    GraphBuilder& remove_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        g_.adj_[u] &= ~(std::uint64_t{1} << v);
        g_.adj_[v] &= ~(std::uint64_t{1} << u);
        return *this;
    }

    bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

    Graph build() const { return g_; }

private:
    void check_pair(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") out of range for " + std::to_string(g_.n_) + " vertices");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    }

    Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

}  // namespace chibound
