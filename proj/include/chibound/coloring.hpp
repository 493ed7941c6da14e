#pragma once

#include <string>
#include <vector>

#include "clique.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "operations.hpp"
#include "patterns.hpp"

namespace chibound {

/// A proper colouring with colours 0..colors-1; color[v] is v's colour.
struct Coloring {
    int colors = 0;
    std::vector<int> color;
};

inline constexpr int kDefaultExactLimit = 20;

class ExactLimitError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color)
{
    if (static_cast<int>(color.size()) != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

namespace detail {

/// DSATUR branch and bound. Vertex selection: highest saturation, then
/// highest degree, then lowest index.
class DsaturSearch {
public:
    explicit DsaturSearch(const Graph& g) : g_(g), n_(g.order()), color_(g.order(), -1) {}

    Coloring run()
    {
        if (n_ == 0) return {0, {}};
        const CliqueResult clique = max_clique(g_);
        lower_ = clique.size;

        greedy();
        if (best_colors_ == lower_) return {best_colors_, best_};

        // Clique vertices receive distinct colours in every colouring, so
        // fixing them removes colour-permutation symmetry.
        std::fill(color_.begin(), color_.end(), -1);
        classes_.assign(n_, VertexSet{});
        int k = 0;
        for (Vertex v : clique.clique) assign(v, k++);
        branch(k, n_ - clique.size);
        return {best_colors_, best_};
    }

private:
    void assign(Vertex v, int c)
    {
        color_[v] = c;
        classes_[c].insert(v);
    }
    void unassign(Vertex v)
    {
        classes_[color_[v]].erase(v);
        color_[v] = -1;
    }

    int saturation(Vertex v, int used) const
    {
        int s = 0;
        for (int c = 0; c < used; ++c)
            if (classes_[c].intersects(g_.neighbors(v))) ++s;
        return s;
    }

    Vertex select(int used) const
    {
        Vertex pick = -1;
        int pick_sat = -1, pick_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != -1) continue;
            const int sat = saturation(v, used);
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void greedy()
    {
        classes_.assign(n_, VertexSet{});
        int used = 0;
        for (int step = 0; step < n_; ++step) {
            const Vertex v = select(used);
            int c = 0;
            while (c < used && classes_[c].intersects(g_.neighbors(v))) ++c;
            if (c == used) ++used;
            assign(v, c);
        }
        best_ = color_;
        best_colors_ = used;
    }

    void branch(int used, int remaining)
    {
        if (best_colors_ == lower_) return;
        if (remaining == 0) {
            best_ = color_;
            best_colors_ = used;
            return;
        }
        const Vertex v = select(used);
        for (int c = 0; c < used; ++c) {
            if (classes_[c].intersects(g_.neighbors(v))) continue;
            assign(v, c);
            branch(used, remaining - 1);
            unassign(v);
            if (best_colors_ == lower_) return;
        }
        if (used + 1 < best_colors_) {
            assign(v, used);
            branch(used + 1, remaining - 1);
            unassign(v);
        }
    }

    const Graph& g_;
    int n_;
    int lower_ = 0;
    std::vector<int> color_;
    std::vector<VertexSet> classes_;
    std::vector<int> best_;
    int best_colors_ = 0;
};

}  // namespace detail

/// Exact chromatic number with a witness colouring.
/// Throws ExactLimitError when g has more than vertex_limit vertices.
inline Coloring chromatic_exact(const Graph& g, int vertex_limit = kDefaultExactLimit)
{
    if (g.order() > vertex_limit)
        throw ExactLimitError("graph has " + std::to_string(g.order()) +
                              " vertices, above the exact-solver limit of " + std::to_string(vertex_limit) +
                              "; use chi_via_matching for 3K1-free graphs");
    return detail::DsaturSearch(g).run();
}

/// Chromatic number of a 3K1-free graph as n - mu(complement). Colour
/// classes have at most two vertices, so a colouring is a matching of the
/// complement plus singletons. Throws PreconditionError if g contains 3K1.
inline Coloring chi_via_matching(const Graph& g)
{
    if (auto w = find_3K1(g))
        throw PreconditionError("matching identity requires a 3K1-free graph; independent triple {" +
                                std::to_string(w->vertices[0]) + ", " + std::to_string(w->vertices[1]) +
                                ", " + std::to_string(w->vertices[2]) + "}");
    const MatchingResult m = max_matching(complement(g));
    Coloring out{0, std::vector<int>(g.order(), -1)};
    for (auto [u, v] : m.edges) {
        out.color[u] = out.color[v] = out.colors;
        ++out.colors;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (out.color[v] == -1) out.color[v] = out.colors++;
    return out;
}

}  // namespace chibound
