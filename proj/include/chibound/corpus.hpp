#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "clique.hpp"
#include "coloring.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "invariants.hpp"
#include "operations.hpp"
#include "patterns.hpp"
#include "structure.hpp"

namespace chibound {

/// Largest order for exhaustive labelled enumeration (2^21 graphs at n = 7).
inline constexpr int kMaxExhaustiveOrder = 7;
inline constexpr int kMinSampleOrder = 8;
inline constexpr int kMaxSampleOrder = 14;

/// Calls f(mask, graph) for every labelled graph on n vertices in ascending
/// pair-mask order (see graph_from_pair_mask).
template <class F>
void for_each_labeled_graph(int n, F&& f)
{
    if (n < 0 || n > kMaxExhaustiveOrder)
        throw std::invalid_argument("exhaustive enumeration supports 0 <= n <= " +
                                    std::to_string(kMaxExhaustiveOrder));
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) f(mask, graph_from_pair_mask(n, mask));
}

/// Every labelled class member on n vertices, each once, ascending mask order.
inline std::vector<Graph> enumerate_class(int n)
{
    std::vector<Graph> out;
    for_each_labeled_graph(n, [&](std::uint64_t, const Graph& g) {
        if (in_class(g)) out.push_back(g);
    });
    return out;
}

class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Draws class members by building a random maximal triangle-free graph
/// (pairs visited in random order, an edge added unless it closes a
/// triangle), complementing it, and keeping the result if it passes the full
/// membership test. Complements of triangle-free graphs are 3K1-free, so only
/// the five-vertex pattern can reject. Deterministic for a given seed.
class ClassSampler {
public:
    static constexpr std::string_view kDescription =
        "complement of random maximal triangle-free graph (random pair order, greedy insertion), "
        "rejection on 2K1+(K2uK1)";

    ClassSampler(int n, std::uint64_t seed) : n_(n), rng_(seed)
    {
        if (n < kMinSampleOrder || n > kMaxSampleOrder)
            throw std::invalid_argument("sampling supports " + std::to_string(kMinSampleOrder) +
                                        " <= n <= " + std::to_string(kMaxSampleOrder));
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }

    Graph next()
    {
        for (;;) {
            ++attempts_;
            ++window_attempts_;
            Graph g = complement(random_maximal_triangle_free());
            if (in_class(g)) {
                ++accepted_;
                ++window_accepted_;
                return g;
            }
            if (window_attempts_ == kWindow) {
                if (window_accepted_ * 1000 < window_attempts_)
                    throw SamplingError("sampler gave up at n = " + std::to_string(n_) + ": " +
                                        std::to_string(window_accepted_) + " acceptances in the last " +
                                        std::to_string(kWindow) + " attempts (" + std::to_string(accepted_) +
                                        " of " + std::to_string(attempts_) + " overall)");
                window_attempts_ = window_accepted_ = 0;
            }
        }
    }

    std::uint64_t attempts() const { return attempts_; }
    std::uint64_t accepted() const { return accepted_; }

private:
    static constexpr std::uint64_t kWindow = 100000;

    Graph random_maximal_triangle_free()
    {
        // Explicit Fisher-Yates draws keep streams identical across standard libraries.
        for (std::size_t i = pairs_.size(); i > 1; --i) std::swap(pairs_[i - 1], pairs_[rng_() % i]);
        GraphBuilder h(n_);
        std::array<VertexSet, kMaxVertices> nbr{};
        for (auto [u, v] : pairs_) {
            if (nbr[u].intersects(nbr[v])) continue;
            h.add_edge(u, v);
            nbr[u].insert(v);
            nbr[v].insert(u);
        }
        return h.build();
    }

    int n_;
    std::mt19937_64 rng_;
    std::vector<Edge> pairs_;
    std::uint64_t attempts_ = 0, accepted_ = 0;
    std::uint64_t window_attempts_ = 0, window_accepted_ = 0;
};

inline std::vector<Graph> sample_class(int n, std::size_t count, std::uint64_t seed)
{
    ClassSampler s(n, seed);
    std::vector<Graph> out;
    out.reserve(count);
    while (out.size() < count) out.push_back(s.next());
    return out;
}

// ---------------------------------------------------------------------------
// Verification campaigns

struct CheckSet {
    bool bound = false;
    bool lemma1 = false;
    bool lemma2 = false;
    bool oracle = false;

    /// Comma-separated subset of bound, lemma1, lemma2 (or lemma2_scope), oracle.
    static CheckSet parse(std::string_view list)
    {
        CheckSet c;
        std::size_t pos = 0;
        while (pos <= list.size()) {
            std::size_t end = list.find(',', pos);
            if (end == std::string_view::npos) end = list.size();
            const std::string_view item = list.substr(pos, end - pos);
            if (item == "bound") c.bound = true;
            else if (item == "lemma1") c.lemma1 = true;
            else if (item == "lemma2" || item == "lemma2_scope") c.lemma2 = true;
            else if (item == "oracle") c.oracle = true;
            else if (!item.empty()) throw std::invalid_argument("unknown check '" + std::string(item) + "'");
            pos = end + 1;
        }
        return c;
    }

    static CheckSet all() { return {true, true, true, true}; }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        if (bound) out.emplace_back("bound");
        if (lemma1) out.emplace_back("lemma1");
        if (lemma2) out.emplace_back("lemma2");
        if (oracle) out.emplace_back("oracle");
        return out;
    }
};

enum class PopulationMode { Exhaustive, Sample, Explicit };

inline std::string_view to_string(PopulationMode m)
{
    switch (m) {
    case PopulationMode::Exhaustive: return "exhaustive";
    case PopulationMode::Sample: return "sample";
    case PopulationMode::Explicit: return "explicit";
    }
    return "?";
}

struct Population {
    PopulationMode mode = PopulationMode::Explicit;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    std::vector<Graph> graphs;  // Explicit mode only
    std::string label;

    /// All labelled graphs with n_min <= n <= n_max.
    static Population exhaustive(int n_max, int n_min = 1)
    {
        if (n_max > kMaxExhaustiveOrder || n_min < 0 || n_min > n_max)
            throw std::invalid_argument("exhaustive range must satisfy 0 <= n_min <= n_max <= " +
                                        std::to_string(kMaxExhaustiveOrder));
        return {PopulationMode::Exhaustive, n_min, n_max, 0, 0, {}, {}};
    }
    static Population sample(int n, std::uint64_t count, std::uint64_t seed)
    {
        if (n < kMinSampleOrder || n > kMaxSampleOrder)
            throw std::invalid_argument("sampling supports " + std::to_string(kMinSampleOrder) +
                                        " <= n <= " + std::to_string(kMaxSampleOrder));
        return {PopulationMode::Sample, n, n, count, seed, {}, {}};
    }
    static Population of(std::vector<Graph> graphs, std::string label)
    {
        int lo = kMaxVertices, hi = 0;
        for (const Graph& g : graphs) {
            lo = std::min(lo, g.order());
            hi = std::max(hi, g.order());
        }
        if (graphs.empty()) lo = 0;
        const auto count = static_cast<std::uint64_t>(graphs.size());
        return {PopulationMode::Explicit, lo, hi, count, 0, std::move(graphs), std::move(label)};
    }
};

struct RunOptions {
    int jobs = 1;
    int exact_limit = kDefaultExactLimit;
    /// Share of members (in percent) whose matching-based chi is re-derived
    /// by the exact solver.
    unsigned cross_check_percent = 1;
};

/// A re-checkable certificate that some claim failed on a concrete graph.
struct Violation {
    std::string kind;  // bound | lemma1 | partition | lemma2 | oracle | chi_engine
    std::string graph6;
    std::string property;  // lemma1 property id
    std::optional<std::pair<Vertex, Vertex>> pair;
    std::vector<Vertex> witness;
    std::string message;
};

struct OmegaBucket {
    std::uint64_t count = 0;
    int max_chi = 0;
    int bound = 0;
    std::uint64_t tight = 0;
    std::uint64_t violations = 0;
};

struct Tally {
    std::uint64_t holds = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t fails = 0;

    void add(Outcome o)
    {
        switch (o) {
        case Outcome::Holds: ++holds; break;
        case Outcome::Vacuous: ++vacuous; break;
        case Outcome::Fails: ++fails; break;
        }
    }
    void merge(const Tally& t)
    {
        holds += t.holds;
        vacuous += t.vacuous;
        fails += t.fails;
    }
};

struct CorpusReport {
    // population descriptor
    PopulationMode mode = PopulationMode::Explicit;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t seed = 0;
    std::uint64_t requested = 0;
    std::string sampler;
    std::string label;
    std::vector<std::string> checks;

    std::uint64_t graphs_examined = 0;
    std::uint64_t members = 0;
    std::uint64_t excluded = 0;
    std::uint64_t disconnected_members = 0;
    std::uint64_t sample_attempts = 0;

    std::map<int, OmegaBucket> omega_histogram;
    std::uint64_t bound_violations = 0;

    std::uint64_t lemma1_pairs = 0;
    std::array<Tally, 7> lemma1{};
    Tally lemma1_4_literal;   // 1.4 counted over M1 ∪ M2
    Tally lemma1_5_y_yp;      // 1.5 counted over Y ∪ Y'
    std::uint64_t missmap_non_injective = 0;

    std::uint64_t lemma2_checked = 0;
    std::uint64_t lemma2_violations = 0;

    std::uint64_t oracle_checked = 0;
    std::uint64_t oracle_disagreements = 0;

    std::uint64_t chi_cross_checked = 0;
    std::uint64_t chi_cross_disagreements = 0;

    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    /// Folds in a report over a later slice of the same population.
    void merge(const CorpusReport& o)
    {
        graphs_examined += o.graphs_examined;
        members += o.members;
        excluded += o.excluded;
        disconnected_members += o.disconnected_members;
        for (const auto& [omega, b] : o.omega_histogram) {
            OmegaBucket& mine = omega_histogram[omega];
            mine.count += b.count;
            mine.max_chi = std::max(mine.max_chi, b.max_chi);
            mine.bound = b.bound;
            mine.tight += b.tight;
            mine.violations += b.violations;
        }
        bound_violations += o.bound_violations;
        lemma1_pairs += o.lemma1_pairs;
        for (std::size_t i = 0; i < lemma1.size(); ++i) lemma1[i].merge(o.lemma1[i]);
        lemma1_4_literal.merge(o.lemma1_4_literal);
        lemma1_5_y_yp.merge(o.lemma1_5_y_yp);
        missmap_non_injective += o.missmap_non_injective;
        lemma2_checked += o.lemma2_checked;
        lemma2_violations += o.lemma2_violations;
        oracle_checked += o.oracle_checked;
        oracle_disagreements += o.oracle_disagreements;
        chi_cross_checked += o.chi_cross_checked;
        chi_cross_disagreements += o.chi_cross_disagreements;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Verifies one graph and accumulates into `acc`. `key` identifies the graph
/// within its population and selects the chi cross-check subsample.
inline void verify_graph(const Graph& g, std::uint64_t key, const CheckSet& checks, const RunOptions& opt,
                         std::uint64_t seed, CorpusReport& acc)
{
    ++acc.graphs_examined;
    const bool member = in_class(g);
    std::optional<std::string> g6;
    auto graph6 = [&]() -> const std::string& {
        if (!g6) g6 = serialize_graph6(g);
        return *g6;
    };

    if (checks.oracle) {
        ++acc.oracle_checked;
        const bool oracle_member = complement_oracle_check(g) == OracleVerdict::Member;
        if (oracle_member != member) {
            ++acc.oracle_disagreements;
            acc.violations.push_back({"oracle", graph6(), {}, std::nullopt, {},
                                      std::string("direct search says ") + (member ? "member" : "excluded") +
                                          ", complement oracle disagrees"});
        }
    }
    if (!member) {
        ++acc.excluded;
        return;
    }
    ++acc.members;

    const std::vector<VertexSet> comps = connected_components(g);
    if (comps.size() > 1) ++acc.disconnected_members;

    const int omega = max_clique(g).size;
    const int chi = chi_via_matching(g).colors;
    if (g.order() > 0) {
        OmegaBucket& bucket = acc.omega_histogram[omega];
        ++bucket.count;
        bucket.max_chi = std::max(bucket.max_chi, chi);
        bucket.bound = bound_f(omega);
        if (chi == bucket.bound) ++bucket.tight;
    }

    if (opt.cross_check_percent > 0 && g.order() <= opt.exact_limit &&
        splitmix64(seed ^ key) % 100 < opt.cross_check_percent) {
        ++acc.chi_cross_checked;
        const int exact = chromatic_exact(g, opt.exact_limit).colors;
        if (exact != chi) {
            ++acc.chi_cross_disagreements;
            acc.violations.push_back({"chi_engine", graph6(), {}, std::nullopt, {},
                                      "matching gives " + std::to_string(chi) + ", branch and bound gives " +
                                          std::to_string(exact)});
        }
    }

    if (checks.bound || checks.lemma2) {
        for (VertexSet comp : comps) {
            const Graph sub = comps.size() == 1 ? g : induced_subgraph(g, comp);
            const int c_omega = comps.size() == 1 ? omega : max_clique(sub).size;
            const int c_chi = comps.size() == 1 ? chi : chi_via_matching(sub).colors;
            if (checks.bound && c_chi > bound_f(c_omega)) {
                ++acc.bound_violations;
                ++acc.omega_histogram[omega].violations;
                acc.violations.push_back({"bound", graph6(), {}, std::nullopt, comp.to_vector(),
                                          "omega " + std::to_string(c_omega) + ", chi " + std::to_string(c_chi) +
                                              " > " + std::to_string(bound_f(c_omega))});
            }
            if (checks.lemma2 && c_omega == 3) {
                ++acc.lemma2_checked;
                const int c_delta = sub.max_degree();
                if (c_delta > 5 || sub.order() > 8 || c_chi > 4) {
                    ++acc.lemma2_violations;
                    acc.violations.push_back({"lemma2", graph6(), {}, std::nullopt, comp.to_vector(),
                                              "omega 3 component with delta " + std::to_string(c_delta) +
                                                  ", n " + std::to_string(sub.order()) + ", chi " +
                                                  std::to_string(c_chi)});
                }
            }
        }
    }

    if (checks.lemma1) {
        for (auto [v, w] : partitioning_pairs(g)) {
            ++acc.lemma1_pairs;
            Decomposition d;
            try {
                d = decompose(g, v, w, MembershipCheck::Skip);
            } catch (const StructureError& e) {
                acc.violations.push_back({"partition", graph6(), {}, std::pair{v, w}, {}, e.what()});
                continue;
            }
            if (!is_partition(g, d)) {
                acc.violations.push_back({"partition", graph6(), {}, std::pair{v, w}, {}, "parts do not partition V"});
                continue;
            }
            if (!d.missmap_injective) ++acc.missmap_non_injective;
            const Lemma1Report r = check_lemma1_trusted(g, d);
            for (std::size_t i = 0; i < r.properties.size(); ++i) {
                const PropertyCheck& p = r.properties[i];
                acc.lemma1[i].add(p.verdict.outcome);
                if (p.verdict.outcome == Outcome::Fails)
                    acc.violations.push_back({"lemma1", graph6(), p.id, std::pair{v, w}, p.verdict.witness,
                                              "property " + p.id + " fails (" + p.verdict.scope + ")"});
            }
            acc.lemma1_4_literal.add(r.properties[3].alternate->outcome);
            acc.lemma1_5_y_yp.add(r.properties[4].alternate->outcome);
        }
    }
}

/// Runs body(begin, end, slice_report) over [0, total) split into `jobs`
/// contiguous slices and merges the slices in order.
template <class Body>
void parallel_slices(std::uint64_t total, int jobs, CorpusReport& into, Body body)
{
    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 2) {
        body(0, total, into);
        return;
    }
    const auto slices = static_cast<std::uint64_t>(jobs);
    std::vector<CorpusReport> parts(slices);
    {
        std::vector<std::jthread> workers;
        for (std::uint64_t s = 0; s < slices; ++s) {
            const std::uint64_t lo = total * s / slices, hi = total * (s + 1) / slices;
            workers.emplace_back([&, s, lo, hi] { body(lo, hi, parts[s]); });
        }
    }
    for (const CorpusReport& p : parts) into.merge(p);
}

}  // namespace detail

/// Verifies every graph of the population. The report, including the order
/// of violations, does not depend on opt.jobs.
inline CorpusReport run_verification(const Population& pop, const CheckSet& checks, const RunOptions& opt = {})
{
    CorpusReport report;
    report.mode = pop.mode;
    report.n_min = pop.n_min;
    report.n_max = pop.n_max;
    report.seed = pop.seed;
    report.requested = pop.count;
    report.label = pop.label;
    report.checks = checks.names();

    switch (pop.mode) {
    case PopulationMode::Exhaustive:
        for (int n = pop.n_min; n <= pop.n_max; ++n) {
            const std::uint64_t total = std::uint64_t{1} << pair_count(n);
            report.requested += total;
            detail::parallel_slices(total, opt.jobs, report, [&](std::uint64_t lo, std::uint64_t hi, CorpusReport& acc) {
                for (std::uint64_t mask = lo; mask < hi; ++mask) {
                    const Graph g = graph_from_pair_mask(n, mask);
                    // Non-members only matter to the oracle comparison.
                    if (!checks.oracle && !in_class(g)) {
                        ++acc.graphs_examined;
                        ++acc.excluded;
                        continue;
                    }
                    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 56) | mask;
                    detail::verify_graph(g, key, checks, opt, pop.seed, acc);
                }
            });
        }
        break;

    case PopulationMode::Sample: {
        report.sampler = std::string(ClassSampler::kDescription);
        ClassSampler sampler(pop.n_min, pop.seed);
        constexpr std::uint64_t kBatch = 1 << 14;
        std::vector<Graph> batch;
        for (std::uint64_t done = 0; done < pop.count;) {
            const std::uint64_t take = std::min(kBatch, pop.count - done);
            batch.clear();
            for (std::uint64_t i = 0; i < take; ++i) batch.push_back(sampler.next());
            detail::parallel_slices(take, opt.jobs, report, [&](std::uint64_t lo, std::uint64_t hi, CorpusReport& acc) {
                for (std::uint64_t i = lo; i < hi; ++i)
                    detail::verify_graph(batch[i], done + i, checks, opt, pop.seed, acc);
            });
            done += take;
        }
        report.sample_attempts = sampler.attempts();
        break;
    }

    case PopulationMode::Explicit:
        detail::parallel_slices(pop.graphs.size(), opt.jobs, report,
                                [&](std::uint64_t lo, std::uint64_t hi, CorpusReport& acc) {
                                    for (std::uint64_t i = lo; i < hi; ++i)
                                        detail::verify_graph(pop.graphs[i], i, checks, opt, pop.seed, acc);
                                });
        break;
    }
    return report;
}

/// Re-derives a violation certificate from its graph6 string; true when the
/// claimed failure is genuine.
inline bool revalidate(const Violation& v)
{
    const Graph g = parse_graph6(v.graph6);
    VertexSet part;
    for (Vertex x : v.witness) part.insert(x);

    if (v.kind == "oracle")
        return is_class_member(g).member() != (complement_oracle_check(g) == OracleVerdict::Member);
    if (!in_class(g)) return false;
    if (v.kind == "chi_engine") return chi_via_matching(g).colors != chromatic_exact(g, kMaxVertices).colors;
    if (v.kind == "bound" || v.kind == "lemma2") {
        const Graph sub = induced_subgraph(g, part);
        if (sub.order() == 0 || !is_connected(sub)) return false;
        const int omega = max_clique(sub).size, chi = chi_via_matching(sub).colors;
        if (v.kind == "bound") return chi > bound_f(omega);
        return omega == 3 && (sub.max_degree() > 5 || sub.order() > 8 || chi > 4);
    }
    if (!v.pair) return false;
    if (v.kind == "partition") {
        try {
            return !is_partition(g, decompose(g, v.pair->first, v.pair->second));
        } catch (const StructureError&) {
            return true;
        }
    }
    if (v.kind == "lemma1") {
        const Lemma1Report r = check_lemma1(g, decompose(g, v.pair->first, v.pair->second));
        for (const auto& p : r.properties)
            if (p.id == v.property) return p.verdict.outcome == Outcome::Fails && p.verdict.witness == v.witness;
    }
    return false;
}

}  // namespace chibound
