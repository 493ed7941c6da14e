#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "graph.hpp"

namespace chibound {

struct MatchingResult {
    int size = 0;
    std::vector<Edge> edges;  // (u, v) with u < v, sorted
};

namespace detail {

/// Edmonds' blossom algorithm: repeated BFS for augmenting paths from each
/// exposed vertex, contracting odd cycles by redirecting their vertices to
/// a common base.
class Blossom {
public:
    explicit Blossom(const Graph& g) : g_(g), n_(g.order())
    {
        mate_.fill(-1);
    }

    MatchingResult run()
    {
        // Greedy warm start; augmentations fix any suboptimal choice.
        for (Vertex u = 0; u < n_; ++u) {
            if (mate_[u] != -1) continue;
            for (Vertex v : g_.neighbors(u)) {
                if (mate_[v] == -1) {
                    mate_[u] = v;
                    mate_[v] = u;
                    break;
                }
            }
        }
        for (Vertex root = 0; root < n_; ++root) {
            if (mate_[root] != -1) continue;
            const Vertex end = find_augmenting_path(root);
            if (end != -1) augment(end);
        }
        MatchingResult out;
        for (Vertex u = 0; u < n_; ++u)
            if (mate_[u] > u) out.edges.emplace_back(u, mate_[u]);
        out.size = static_cast<int>(out.edges.size());
        return out;
    }

private:
    Vertex lowest_common_base(Vertex a, Vertex b) const
    {
        std::array<bool, kMaxVertices> on_path{};
        for (;;) {
            a = base_[a];
            on_path[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_blossom_path(Vertex v, Vertex b, Vertex child, std::array<bool, kMaxVertices>& in_blossom)
    {
        while (base_[v] != b) {
            in_blossom[base_[v]] = in_blossom[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    /// Returns the exposed endpoint of an augmenting path from root, or -1.
    Vertex find_augmenting_path(Vertex root)
    {
        used_.fill(false);
        parent_.fill(-1);
        for (Vertex i = 0; i < n_; ++i) base_[i] = i;

        std::array<Vertex, kMaxVertices> queue{};
        int head = 0, tail = 0;
        used_[root] = true;
        queue[tail++] = root;

        while (head < tail) {
            const Vertex v = queue[head++];
            for (Vertex to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    const Vertex cur_base = lowest_common_base(v, to);
                    std::array<bool, kMaxVertices> in_blossom{};
                    mark_blossom_path(v, cur_base, to, in_blossom);
                    mark_blossom_path(to, cur_base, v, in_blossom);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (in_blossom[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue[tail++] = i;
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = true;
                    queue[tail++] = mate_[to];
                }
            }
        }
        return -1;
    }

    void augment(Vertex v)
    {
        while (v != -1) {
            const Vertex pv = parent_[v];
            const Vertex ppv = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    int n_;
    std::array<Vertex, kMaxVertices> mate_{};
    std::array<Vertex, kMaxVertices> parent_{};
    std::array<Vertex, kMaxVertices> base_{};
    std::array<bool, kMaxVertices> used_{};
};

}  // namespace detail

inline MatchingResult max_matching(const Graph& g)
{
    return detail::Blossom(g).run();
}

}  // namespace chibound
