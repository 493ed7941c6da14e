#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clique.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace chibound {

// Structure of a class member around a non-adjacent pair (v, w):
//   A = N(v) ∩ N(w)            common neighbours
//   B = N(v) \ (N(w) ∪ {w})    private to v
//   C = N(w) \ (N(v) ∪ {v})    private to w
//   D = a maximum clique of ⟨A⟩ (lexicographically smallest), Y = A \ D
//   missmap(y) = D \ N(y) for y in Y, Y' = union of the images, X = D \ Y'
// The four blocks are M1 = D, M2 = Y, M3 = B, M4 = C; v and w stay outside them.

/// Vertex found adjacent to neither v nor w; impossible in a 3K1-free graph.
class StructureError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Decomposition {
    Vertex v = -1;
    Vertex w = -1;
    VertexSet A, B, C;
    VertexSet D;
    VertexSet Y;
    VertexSet X;
    VertexSet Yp;
    std::vector<std::pair<Vertex, VertexSet>> missmap;  // ascending in y
    /// No vertex of D is missed by two different members of Y.
    bool missmap_injective = true;

    VertexSet m1() const { return D; }
    VertexSet m2() const { return Y; }
    VertexSet m3() const { return B; }
    VertexSet m4() const { return C; }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// v is the lowest-index vertex of maximum degree that has a non-neighbour,
/// w its lowest-index non-neighbour. Empty when every maximum-degree vertex
/// is universal (in particular when g is complete).
inline std::optional<std::pair<Vertex, Vertex>> choose_partitioning_pair(const Graph& g)
{
    const int delta = g.max_degree();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != delta) continue;
        const VertexSet far = g.non_neighbors(v);
        if (!far.empty()) return std::pair{v, far.first()};
    }
    return std::nullopt;
}

/// Every ordered pair (v, w) with deg v = max degree and vw a non-edge.
inline std::vector<std::pair<Vertex, Vertex>> partitioning_pairs(const Graph& g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    const int delta = g.max_degree();
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == delta)
            for (Vertex w : g.non_neighbors(v)) out.emplace_back(v, w);
    return out;
}

enum class MembershipCheck { Required, Skip };

inline Decomposition decompose(const Graph& g, Vertex v, Vertex w,
                               MembershipCheck check = MembershipCheck::Required)
{
    const int n = g.order();
    if (v < 0 || w < 0 || v >= n || w >= n)
        throw GraphError("pair (" + std::to_string(v) + ", " + std::to_string(w) + ") out of range");
    if (v == w) throw PreconditionError("pair must consist of two distinct vertices");
    if (g.adjacent(v, w))
        throw PreconditionError("vertices " + std::to_string(v) + " and " + std::to_string(w) + " are adjacent");
    if (check == MembershipCheck::Required && !in_class(g))
        throw PreconditionError("graph is not {3K1, 2K1+(K2uK1)}-free");

    Decomposition d;
    d.v = v;
    d.w = w;
    const VertexSet nv = g.neighbors(v), nw = g.neighbors(w);
    d.A = nv & nw;
    d.B = nv - nw;
    d.C = nw - nv;
    const VertexSet uncovered = g.vertices() - VertexSet{v, w} - nv - nw;
    if (!uncovered.empty())
        throw StructureError("vertex " + std::to_string(uncovered.first()) + " is adjacent to neither " +
                             std::to_string(v) + " nor " + std::to_string(w));

    d.D = max_clique_within(g, d.A).clique;
    d.Y = d.A - d.D;
    VertexSet seen;
    for (Vertex y : d.Y) {
        const VertexSet missed = d.D - g.neighbors(y);
        if (missed.intersects(seen)) d.missmap_injective = false;
        seen |= missed;
        d.missmap.emplace_back(y, missed);
    }
    d.Yp = seen;
    d.X = d.D - d.Yp;
    return d;
}

/// Independent re-check that {v}, {w}, A, B, C partition V(g) and that the
/// derived sets are consistent.
inline bool is_partition(const Graph& g, const Decomposition& d)
{
    const std::array<VertexSet, 5> parts{VertexSet{d.v}, VertexSet{d.w}, d.A, d.B, d.C};
    VertexSet covered;
    for (VertexSet p : parts) {
        if (p.intersects(covered)) return false;
        covered |= p;
    }
    return covered == g.vertices() && d.D.subset_of(d.A) && (d.D | d.Y) == d.A && !d.D.intersects(d.Y) &&
           d.X == d.D - d.Yp && d.Yp.subset_of(d.D);
}

enum class Outcome { Holds, Fails, Vacuous };

inline std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Vacuous: return "vacuous";
    }
    return "?";
}

/// Verdict of one property under one reading of its quantifier domain.
struct Verdict {
    Outcome outcome = Outcome::Vacuous;
    std::vector<Vertex> witness;  // concrete vertices when outcome is Fails
    std::string scope;            // which vertex set common neighbours were counted in, if relevant
};

struct PropertyCheck {
    std::string id;  // "1.1" ... "1.7"
    Verdict verdict;
    std::optional<Verdict> alternate;
};

struct Lemma1Report {
    std::array<PropertyCheck, 7> properties;

    bool any_fail() const
    {
        for (const auto& p : properties)
            if (p.verdict.outcome == Outcome::Fails) return true;
        return false;
    }
};

namespace detail {

class Lemma1Checker {
public:
    Lemma1Checker(const Graph& g, const Decomposition& d) : g_(g), d_(d) {}

    Lemma1Report run() const
    {
        Lemma1Report r;
        r.properties[0] = {"1.1", blocks_complete(), std::nullopt};
        r.properties[1] = {"1.2", single_miss(), std::nullopt};
        r.properties[2] = {"1.3", exactly_one_of_pair(), std::nullopt};
        r.properties[3] = {"1.4", private_pairs_common(d_.Y | d_.Yp, "Y|Yp"),
                           private_pairs_common(d_.D | d_.Y, "M1|M2")};
        r.properties[4] = {"1.5", cross_edge_common(d_.D | d_.Y, "M1|M2"),
                           cross_edge_common(d_.Y | d_.Yp, "Y|Yp")};
        r.properties[5] = {"1.6", cross_all_or_nothing(), std::nullopt};
        r.properties[6] = {"1.7", agreement_on_c_pairs(), std::nullopt};
        return r;
    }

private:
    static Verdict fails(std::vector<Vertex> witness, std::string scope = {})
    {
        return {Outcome::Fails, std::move(witness), std::move(scope)};
    }
    static Verdict verdict(bool checked_any, std::string scope = {})
    {
        return {checked_any ? Outcome::Holds : Outcome::Vacuous, {}, std::move(scope)};
    }

    // 1.1: each block induces a complete graph.
    Verdict blocks_complete() const
    {
        for (VertexSet block : {d_.m1(), d_.m2(), d_.m3(), d_.m4()})
            for (Vertex x : block) {
                const VertexSet gap = block.without(x) - g_.neighbors(x);
                if (!gap.empty()) return fails({x, gap.first()});
            }
        return verdict(true);
    }

    // 1.2: every y in M2 misses exactly one vertex of M1.
    Verdict single_miss() const
    {
        for (Vertex y : d_.m2()) {
            const VertexSet missed = d_.m1() - g_.neighbors(y);
            if (missed.size() != 1) {
                std::vector<Vertex> wit{y};
                for (Vertex m : missed) wit.push_back(m);
                return fails(std::move(wit));
            }
        }
        return verdict(!d_.m2().empty());
    }

    // 1.3: for non-adjacent m1 in M1, m2 in M2, every vertex of M3 ∪ M4 is
    // adjacent to exactly one of them.
    Verdict exactly_one_of_pair() const
    {
        bool any = false;
        const VertexSet outer = d_.m3() | d_.m4();
        for (Vertex a : d_.m1())
            for (Vertex b : d_.m2() - g_.neighbors(a))
                for (Vertex m : outer) {
                    any = true;
                    if (g_.adjacent(m, a) == g_.adjacent(m, b)) return fails({a, b, m});
                }
        return verdict(any);
    }

    // 1.4: two vertices of the same private block have at least |M2| - 2
    // common neighbours inside `scope`.
    Verdict private_pairs_common(VertexSet scope, const char* label) const
    {
        bool any = false;
        const int need = d_.m2().size() - 2;
        for (VertexSet block : {d_.m3(), d_.m4()})
            for (Vertex x : block)
                for (Vertex y : block & VertexSet::above(x)) {
                    any = true;
                    if ((g_.neighbors(x) & g_.neighbors(y) & scope).size() < need) return fails({x, y}, label);
                }
        return verdict(any, label);
    }

    // 1.5: adjacent b in M3, c in M4 have at least |M2| - 1 common
    // neighbours inside `scope`.
    Verdict cross_edge_common(VertexSet scope, const char* label) const
    {
        bool any = false;
        const int need = d_.m2().size() - 1;
        for (Vertex b : d_.m3())
            for (Vertex c : d_.m4() & g_.neighbors(b)) {
                any = true;
                if ((g_.neighbors(b) & g_.neighbors(c) & scope).size() < need) return fails({b, c}, label);
            }
        return verdict(any, label);
    }

    // 1.6: when |M1| >= |M2| >= 4, either M3 ∪ M4 is a clique or there is no
    // edge between M3 and M4.
    Verdict cross_all_or_nothing() const
    {
        if (!(d_.m1().size() >= d_.m2().size() && d_.m2().size() >= 4)) return verdict(false);
        if (g_.is_clique(d_.m3() | d_.m4())) return verdict(true);
        std::optional<Edge> edge, gap;
        for (Vertex b : d_.m3())
            for (Vertex c : d_.m4()) {
                if (g_.adjacent(b, c)) {
                    if (!edge) edge = Edge{b, c};
                } else if (!gap) {
                    gap = Edge{b, c};
                }
            }
        if (!edge) return verdict(true);
        if (gap) return fails({edge->first, edge->second, gap->first, gap->second});
        // M3-M4 fully joined but a block is not complete; 1.1 reports that.
        return verdict(true);
    }

    // 1.7: b in M3 adjacent to c, c' in M4. A vertex m of M1 ∪ M2 adjacent to
    // both c and c' is adjacent to b; one adjacent to neither is not.
    Verdict agreement_on_c_pairs() const
    {
        bool any = false;
        const VertexSet inner = d_.m1() | d_.m2();
        for (Vertex b : d_.m3()) {
            const VertexSet cs = d_.m4() & g_.neighbors(b);
            for (Vertex c : cs)
                for (Vertex c2 : cs & VertexSet::above(c))
                    for (Vertex m : inner) {
                        const bool mc = g_.adjacent(m, c), mc2 = g_.adjacent(m, c2);
                        if (mc != mc2) continue;
                        any = true;
                        if (g_.adjacent(b, m) != mc) return fails({b, c, c2, m});
                    }
        }
        return verdict(any);
    }

    const Graph& g_;
    const Decomposition& d_;
};

}  // namespace detail

/// Evaluates the seven structural properties on d. Throws PreconditionError
/// if g is not a class member or d was not produced from g.
inline Lemma1Report check_lemma1(const Graph& g, const Decomposition& d)
{
    if (!(decompose(g, d.v, d.w) == d)) throw PreconditionError("decomposition does not match the graph");
    return detail::Lemma1Checker(g, d).run();
}

/// As check_lemma1, for a decomposition known to come from decompose(g, ...).
inline Lemma1Report check_lemma1_trusted(const Graph& g, const Decomposition& d)
{
    return detail::Lemma1Checker(g, d).run();
}

}  // namespace chibound
