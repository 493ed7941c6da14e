#pragma once

#include <vector>

#include "graph.hpp"

namespace chibound {

struct CliqueResult {
    int size = 0;
    VertexSet clique;
};

namespace detail {

/// Number of colours a greedy sequential colouring of ⟨s⟩ uses; an upper
/// bound on the clique number of ⟨s⟩.
inline int greedy_colour_bound(const Graph& g, VertexSet s)
{
    int colours = 0;
    while (!s.empty()) {
        VertexSet free = s;
        while (!free.empty()) {
            const Vertex v = free.first();
            s.erase(v);
            free = free.without(v) - g.neighbors(v);
        }
        ++colours;
    }
    return colours;
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    CliqueResult run(VertexSet candidates)
    {
        expand(VertexSet{}, 0, candidates);
        return best_;
    }

private:
    // Candidates are visited in ascending order and the incumbent is only
    // replaced on strict improvement, so the first maximum clique found is
    // the lexicographically smallest one.
    void expand(VertexSet current, int size, VertexSet candidates)
    {
        if (size > best_.size) best_ = {size, current};
        if (size + candidates.size() <= best_.size) return;
        if (size + greedy_colour_bound(g_, candidates) <= best_.size) return;
        while (!candidates.empty()) {
            if (size + candidates.size() <= best_.size) return;
            const Vertex v = candidates.first();
            candidates.erase(v);
            expand(current.with(v), size + 1, candidates & g_.neighbors(v));
        }
    }

    const Graph& g_;
    CliqueResult best_;
};

/// Vertex sets of the connected components of the complement of ⟨s⟩.
inline std::vector<VertexSet> co_components(const Graph& g, VertexSet s)
{
    std::vector<VertexSet> out;
    while (!s.empty()) {
        VertexSet part{s.first()}, frontier = part;
        s -= part;
        while (!frontier.empty()) {
            const Vertex v = frontier.first();
            frontier.erase(v);
            const VertexSet fresh = s - g.neighbors(v);
            part |= fresh;
            frontier |= fresh;
            s -= fresh;
        }
        out.push_back(part);
    }
    return out;
}

}  // namespace detail

/// Maximum clique of ⟨candidates⟩, lexicographically smallest among maxima.
///
/// ⟨candidates⟩ is the join of its co-components; the smallest maximum clique
/// of each part, unioned, is the smallest maximum clique of the whole.
inline CliqueResult max_clique_within(const Graph& g, VertexSet candidates)
{
    CliqueResult total;
    for (VertexSet part : detail::co_components(g, candidates & g.vertices())) {
        const CliqueResult r = detail::CliqueSearch(g).run(part);
        total.size += r.size;
        total.clique |= r.clique;
    }
    return total;
}

inline CliqueResult max_clique(const Graph& g)
{
    return max_clique_within(g, g.vertices());
}

}  // namespace chibound
