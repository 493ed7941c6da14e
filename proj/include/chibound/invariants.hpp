#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clique.hpp"
#include "coloring.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace chibound {

/// The chromatic bound for the class: 8 at omega = 5, floor(3*omega/2) otherwise.
constexpr int bound_f(int omega)
{
    if (omega < 1) throw std::invalid_argument("bound_f requires omega >= 1");
    return omega == 5 ? 8 : (3 * omega) / 2;
}

enum class ChiEngine {
    Auto,      // matching identity when 3K1-free, branch and bound otherwise
    Exact,     // DSATUR branch and bound
    Matching,  // n - mu(complement); requires 3K1-free
};

struct InvariantReport {
    int n = 0;
    int omega = 0;
    int chi = 0;
    int delta = 0;
    int bound = 0;  // bound_f(omega); 0 for the empty graph
    bool tight = false;
    VertexSet clique;
    std::vector<int> coloring;
};

inline Coloring compute_chi(const Graph& g, ChiEngine engine, int exact_limit = kDefaultExactLimit)
{
    switch (engine) {
    case ChiEngine::Exact:
        return chromatic_exact(g, exact_limit);
    case ChiEngine::Matching:
        return chi_via_matching(g);
    case ChiEngine::Auto:
        break;
    }
    if (!find_3K1(g)) return chi_via_matching(g);
    return chromatic_exact(g, exact_limit);
}

inline InvariantReport compute_invariants(const Graph& g, ChiEngine engine = ChiEngine::Auto,
                                          int exact_limit = kDefaultExactLimit)
{
    InvariantReport r;
    r.n = g.order();
    const CliqueResult cl = max_clique(g);
    r.omega = cl.size;
    r.clique = cl.clique;
    Coloring col = compute_chi(g, engine, exact_limit);
    r.chi = col.colors;
    r.coloring = std::move(col.color);
    r.delta = g.max_degree();
    r.bound = r.omega >= 1 ? bound_f(r.omega) : 0;
    r.tight = r.omega >= 1 && r.chi == r.bound;
    return r;
}

}  // namespace chibound
