#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "operations.hpp"

namespace chibound {

// The two forbidden induced subgraphs of the class:
//   3K1            three pairwise non-adjacent vertices;
//   2K1+(K2 u K1)  two non-adjacent vertices u1, u2 joined to a, b, c where
//                  ab is the only edge among a, b, c. Seven edges; its
//                  complement is K2 u P3 (u1u2 and the path a-c-b).

enum class PatternKind { ThreeK1, TwoK1JoinK2K1 };

inline std::string_view to_string(PatternKind k)
{
    return k == PatternKind::ThreeK1 ? "3K1" : "2K1+(K2uK1)";
}

/// Role assignment inside a 2K1+(K2 u K1) occurrence.
struct PatternRoles {
    Vertex u1, u2;  // the non-adjacent pair, u1 < u2
    Vertex a, b;    // the K2, a < b
    Vertex c;       // the isolated vertex of K2 u K1

    friend bool operator==(const PatternRoles&, const PatternRoles&) = default;
};

struct PatternWitness {
    PatternKind kind;
    std::vector<Vertex> vertices;       // ascending
    std::optional<PatternRoles> roles;  // present for TwoK1JoinK2K1

    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// Lexicographically smallest independent triple, if any.
inline std::optional<PatternWitness> find_3K1(const Graph& g)
{
    for (Vertex a = 0; a < g.order(); ++a) {
        const VertexSet after_a = g.non_neighbors(a) & VertexSet::above(a);
        for (Vertex b : after_a) {
            const VertexSet third = after_a & g.non_neighbors(b) & VertexSet::above(b);
            if (!third.empty()) return PatternWitness{PatternKind::ThreeK1, {a, b, third.first()}, std::nullopt};
        }
    }
    return std::nullopt;
}

namespace detail {

/// Roles of the pattern within the 5-set s, or nullopt if ⟨s⟩ is not the pattern.
/// The induced degree multiset {3,3,3,3,2} with seven edges already forces the
/// pattern; the explicit role checks below confirm it.
inline std::optional<PatternRoles> match_pattern_roles(const Graph& g, VertexSet s)
{
    int twos = 0, threes = 0;
    Vertex c = -1;
    for (Vertex x : s) {
        const int d = (g.neighbors(x) & s).size();
        if (d == 3) {
            ++threes;
        } else if (d == 2) {
            ++twos;
            c = x;
        } else {
            return std::nullopt;
        }
    }
    if (twos != 1 || threes != 4) return std::nullopt;

    const VertexSet ab = s.without(c) - g.neighbors(c);
    const VertexSet uu = s.without(c) & g.neighbors(c);
    if (ab.size() != 2 || uu.size() != 2) return std::nullopt;
    const Vertex a = ab.first(), b = ab.without(a).first();
    const Vertex u1 = uu.first(), u2 = uu.without(u1).first();
    if (!g.adjacent(a, b) || g.adjacent(u1, u2)) return std::nullopt;
    const VertexSet abc{a, b, c};
    if (!abc.subset_of(g.neighbors(u1)) || !abc.subset_of(g.neighbors(u2))) return std::nullopt;
    return PatternRoles{u1, u2, a, b, c};
}

/// Existence test: some non-adjacent pair whose common neighbourhood
/// contains an induced K2 u K1.
inline bool has_forbidden_5pattern(const Graph& g)
{
    for (Vertex u1 = 0; u1 < g.order(); ++u1) {
        for (Vertex u2 : g.non_neighbors(u1) & VertexSet::above(u1)) {
            const VertexSet common = g.neighbors(u1) & g.neighbors(u2);
            if (common.size() < 3) continue;
            for (Vertex c : common) {
                const VertexSet far = common.without(c) - g.neighbors(c);
                for (Vertex a : far)
                    if (g.neighbors(a).intersects(far)) return true;
            }
        }
    }
    return false;
}

}  // namespace detail

/// Smallest 5-subset (lexicographic on the ascending tuple) inducing
/// 2K1+(K2 u K1), with its role map.
inline std::optional<PatternWitness> find_forbidden_5pattern(const Graph& g)
{
    const int n = g.order();
    if (n < 5 || !detail::has_forbidden_5pattern(g)) return std::nullopt;
    for (Vertex s0 = 0; s0 < n; ++s0)
        for (Vertex s1 = s0 + 1; s1 < n; ++s1)
            for (Vertex s2 = s1 + 1; s2 < n; ++s2)
                for (Vertex s3 = s2 + 1; s3 < n; ++s3)
                    for (Vertex s4 = s3 + 1; s4 < n; ++s4) {
                        const VertexSet s{s0, s1, s2, s3, s4};
                        if (auto roles = detail::match_pattern_roles(g, s))
                            return PatternWitness{PatternKind::TwoK1JoinK2K1, s.to_vector(), roles};
                    }
    return std::nullopt;
}

/// Membership verdict; `witness` is empty exactly for class members.
struct MembershipVerdict {
    std::optional<PatternWitness> witness;
    bool member() const { return !witness.has_value(); }
};

/// 3K1 is searched first; the first witness found is returned.
inline MembershipVerdict is_class_member(const Graph& g)
{
    if (auto w = find_3K1(g)) return {std::move(w)};
    return {find_forbidden_5pattern(g)};
}

/// Faster yes/no form of is_class_member (no witness construction).
inline bool in_class(const Graph& g)
{
    return !find_3K1(g) && !detail::has_forbidden_5pattern(g);
}

enum class OracleVerdict { Member, Excluded };

// Complement characterisation used as an independent decider:
//   G is 3K1-free            iff  complement(G) is triangle-free;
//   G is 2K1+(K2uK1)-free    iff  complement(G) has no induced K2 u P3.
namespace detail {

inline bool has_triangle(const Graph& h)
{
    for (auto [u, v] : h.edges())
        if ((h.neighbors(u) & h.neighbors(v)).intersects(VertexSet::above(v))) return true;
    return false;
}

inline bool has_induced_k2_p3(const Graph& h)
{
    const auto edges = h.edges();
    for (Vertex mid = 0; mid < h.order(); ++mid) {
        const VertexSet around = h.neighbors(mid);
        for (Vertex p : around) {
            for (Vertex q : around & VertexSet::above(p)) {
                if (h.adjacent(p, q)) continue;
                const VertexSet path{p, mid, q};
                for (auto [x, y] : edges) {
                    if (path.contains(x) || path.contains(y)) continue;
                    if (!(h.neighbors(x) | h.neighbors(y)).intersects(path)) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace detail

inline OracleVerdict complement_oracle_check(const Graph& g)
{
    const Graph h = complement(g);
    if (detail::has_triangle(h) || detail::has_induced_k2_p3(h)) return OracleVerdict::Excluded;
    return OracleVerdict::Member;
}

}  // namespace chibound
