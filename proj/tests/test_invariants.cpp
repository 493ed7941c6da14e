#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "chibound/clique.hpp"
#include "chibound/coloring.hpp"
#include "chibound/constructions.hpp"
#include "chibound/corpus.hpp"
#include "chibound/invariants.hpp"
#include "chibound/matching.hpp"
#include "chibound/operations.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

// Lexicographically smallest maximum clique by subset enumeration (n <= 16).
VertexSet first_max_clique(const Graph& g)
{
    const int n = g.order();
    const int omega = oracle::clique_number(g);
    VertexSet best;
    bool found = false;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != omega) continue;
        const VertexSet c(s);
        if (!g.is_clique(c)) continue;
        if (!found || lex_less(c, best)) best = c;
        found = true;
    }
    return best;
}

bool is_matching(const Graph& g, const std::vector<Edge>& edges)
{
    VertexSet used;
    for (auto [u, v] : edges) {
        if (!g.adjacent(u, v) || used.contains(u) || used.contains(v)) return false;
        used.insert(u);
        used.insert(v);
    }
    return true;
}

}  // namespace

TEST_CASE("max_clique on small named graphs", "[invariants]")
{
    CHECK(max_clique(Graph(0)).size == 0);
    CHECK(max_clique(Graph(4)).size == 1);
    CHECK(max_clique(Graph(4)).clique == VertexSet{0});
    CHECK(max_clique(Graph::complete(7)).size == 7);
    CHECK(max_clique(cycle(5)).size == 2);
    CHECK(max_clique(cycle(5)).clique == VertexSet{0, 1});
    CHECK(max_clique(wheel6()).size == 3);
    CHECK(max_clique(oracle::petersen()).size == 2);
    CHECK(max_clique(Graph::complete(64)).size == 64);
}

TEST_CASE("max_clique matches subset enumeration", "[invariants][property]")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = static_cast<int>(rng() % 15);
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.7 * (trial % 8) / 7.0);
        const CliqueResult r = max_clique(g);
        REQUIRE(r.size == oracle::clique_number(g));
        REQUIRE(g.is_clique(r.clique));
        REQUIRE(r.clique.size() == r.size);
        REQUIRE(r.clique == first_max_clique(g));
    }
}

TEST_CASE("max_clique on joins", "[invariants][property]")
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph a = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.4);
        const Graph b = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.4);
        const Graph g = relabel(join(a, b), oracle::random_permutation(rng, a.order() + b.order()));
        const CliqueResult r = max_clique(g);
        REQUIRE(r.size == oracle::clique_number(a) + oracle::clique_number(b));
        REQUIRE(r.clique == first_max_clique(g));
    }
    CHECK(max_clique(extremal_even(12)).size == 24);
}

TEST_CASE("max_clique_within restricts to the candidate set", "[invariants]")
{
    const Graph w6 = wheel6();
    const CliqueResult r = max_clique_within(w6, VertexSet{1, 2, 3, 4, 5});
    CHECK(r.size == 2);
    CHECK(r.clique == VertexSet{1, 2});
    CHECK(max_clique_within(w6, VertexSet{}).size == 0);
}

TEST_CASE("maximum matching", "[invariants][matching]")
{
    CHECK(max_matching(Graph(5)).size == 0);
    CHECK(max_matching(cycle(5)).size == 2);
    CHECK(max_matching(Graph::complete(7)).size == 3);
    const MatchingResult p = max_matching(oracle::petersen());
    CHECK(p.size == 5);
    CHECK(is_matching(oracle::petersen(), p.edges));

    // Two triangles joined by a path force a blossom contraction.
    const Graph blossom = oracle::from_pairs(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
    CHECK(max_matching(blossom).size == 4);
}

TEST_CASE("maximum matching against recursion and augmenting paths", "[invariants][matching][property]")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = static_cast<int>(rng() % 13);
        const Graph g = oracle::random_graph(rng, n, 0.1 + 0.6 * (trial % 7) / 6.0);
        const MatchingResult m = max_matching(g);
        REQUIRE(is_matching(g, m.edges));
        REQUIRE(static_cast<int>(m.edges.size()) == m.size);
        REQUIRE(std::is_sorted(m.edges.begin(), m.edges.end()));
        REQUIRE(m.size == oracle::matching_number(g));
        if (n <= 10) REQUIRE_FALSE(oracle::has_augmenting_path(g, m.edges));
    }
    // Larger graphs: Berge's criterion only.
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, 30 + static_cast<int>(rng() % 35), 0.08);
        const MatchingResult m = max_matching(g);
        REQUIRE(is_matching(g, m.edges));
    }
}

TEST_CASE("exact chromatic number", "[invariants][coloring]")
{
    CHECK(chromatic_exact(Graph(0)).colors == 0);
    CHECK(chromatic_exact(Graph(3)).colors == 1);
    CHECK(chromatic_exact(cycle(5)).colors == 3);
    CHECK(chromatic_exact(cycle(6)).colors == 2);
    CHECK(chromatic_exact(wheel6()).colors == 4);
    CHECK(chromatic_exact(oracle::petersen()).colors == 3);
    CHECK(chromatic_exact(Graph::complete(9)).colors == 9);
    CHECK_THROWS_AS(chromatic_exact(Graph(21)), ExactLimitError);
    CHECK_NOTHROW(chromatic_exact(Graph(21), 21));
}

TEST_CASE("exact chromatic number matches backtracking", "[invariants][coloring][property]")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = static_cast<int>(rng() % 11);
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.8 * (trial % 6) / 5.0);
        const Coloring c = chromatic_exact(g);
        REQUIRE(is_proper_coloring(g, c.color));
        REQUIRE(c.colors == oracle::chromatic_number(g));
    }
}

TEST_CASE("matching identity equals exact chi on every 3K1-free graph, n <= 6", "[invariants][exhaustive]")
{
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t checked = 0, mismatches = 0;
        for_each_labeled_graph(n, [&](std::uint64_t, const Graph& g) {
            if (find_3K1(g)) return;
            ++checked;
            const Coloring m = chi_via_matching(g);
            if (!is_proper_coloring(g, m.color) || m.colors != chromatic_exact(g).colors) ++mismatches;
        });
        INFO("n = " << n << ", checked " << checked);
        CHECK(checked > 0);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("chi_via_matching refuses graphs with 3K1", "[invariants][coloring]")
{
    CHECK_THROWS_AS(chi_via_matching(cycle(6)), PreconditionError);
    CHECK_THROWS_AS(compute_chi(Graph(3), ChiEngine::Matching), PreconditionError);
    CHECK(compute_chi(Graph(3), ChiEngine::Auto).colors == 1);
}

TEST_CASE("bound_f", "[invariants]")
{
    CHECK(bound_f(1) == 1);
    CHECK(bound_f(2) == 3);
    CHECK(bound_f(3) == 4);
    CHECK(bound_f(4) == 6);
    CHECK(bound_f(5) == 8);
    CHECK(bound_f(6) == 9);
    CHECK(bound_f(7) == 10);
    CHECK(bound_f(10) == 15);
    CHECK_THROWS(bound_f(0));
    static_assert(bound_f(5) == 8);
}

TEST_CASE("invariant report", "[invariants]")
{
    const InvariantReport c5 = compute_invariants(cycle(5));
    CHECK(c5.n == 5);
    CHECK(c5.omega == 2);
    CHECK(c5.chi == 3);
    CHECK(c5.delta == 2);
    CHECK(c5.bound == 3);
    CHECK(c5.tight);
    CHECK(is_proper_coloring(cycle(5), c5.coloring));

    const InvariantReport w6 = compute_invariants(wheel6());
    CHECK(w6.omega == 3);
    CHECK(w6.chi == 4);
    CHECK(w6.tight);

    const InvariantReport k4 = compute_invariants(Graph::complete(4));
    CHECK(k4.bound == 6);
    CHECK_FALSE(k4.tight);

    const InvariantReport empty = compute_invariants(Graph(0));
    CHECK(empty.omega == 0);
    CHECK(empty.bound == 0);
    CHECK_FALSE(empty.tight);
}

TEST_CASE("omega <= chi <= delta + 1 and the engines agree on members", "[invariants][property]")
{
    for (int n = 8; n <= 14; n += 2) {
        for (const Graph& g : sample_class(n, 60, 1000 + n)) {
            const InvariantReport a = compute_invariants(g, ChiEngine::Matching);
            const InvariantReport e = compute_invariants(g, ChiEngine::Exact);
            REQUIRE(a.chi == e.chi);
            REQUIRE(a.omega <= a.chi);
            REQUIRE(a.chi <= a.delta + 1);
            REQUIRE(is_proper_coloring(g, a.coloring));
            REQUIRE(is_proper_coloring(g, e.coloring));
        }
    }
}
