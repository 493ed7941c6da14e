// Acceptance run: one PASS/FAIL line per criterion on stdout, in criterion
// order once all have run; progress and early results on stderr. Exit status
// is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "chibound/chibound.hpp"

using namespace chibound;

namespace {

int failures = 0;
std::map<int, std::string> lines;

void report(int id, bool pass, const std::string& what, const std::string& detail)
{
    lines[id] = std::string(pass ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + " (" + what + "): " + detail;
    std::cerr << lines[id] << std::endl;
    failures += !pass;
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s)
{
    std::ostringstream o;
    o.precision(1);
    o << std::fixed << s << " s";
    return o.str();
}

constexpr std::uint64_t kSamplesPerOrder = 100000;
constexpr std::uint64_t kSeed = 42;

void criterion1()
{
    Stopwatch t;
    std::uint64_t graphs = 0, members = 0, disagreements = 0;
    std::string first_bad;
    for (int n = 0; n <= kMaxExhaustiveOrder; ++n)
        for_each_labeled_graph(n, [&](std::uint64_t, const Graph& g) {
            ++graphs;
            const bool direct = is_class_member(g).member();
            members += direct;
            if (direct != (complement_oracle_check(g) == OracleVerdict::Member)) {
                if (disagreements++ == 0) first_bad = serialize_graph6(g);
            }
        });
    std::ostringstream d;
    d << graphs << " labelled graphs (n <= 7), " << members << " members, " << disagreements << " disagreements";
    if (!first_bad.empty()) d << ", first " << first_bad;
    d << ", " << fmt_seconds(t.seconds());
    report(1, disagreements == 0, "membership oracle equivalence", d.str());
}

void criterion2()
{
    Stopwatch t;
    std::uint64_t checked = 0, disagreements = 0;
    std::string first_bad;
    for (int n = 0; n <= kMaxExhaustiveOrder; ++n)
        for_each_labeled_graph(n, [&](std::uint64_t, const Graph& g) {
            if (find_3K1(g)) return;
            ++checked;
            const Coloring m = chi_via_matching(g);
            if (m.colors != chromatic_exact(g).colors || !is_proper_coloring(g, m.color)) {
                if (disagreements++ == 0) first_bad = serialize_graph6(g);
            }
        });
    std::ostringstream d;
    d << checked << " 3K1-free labelled graphs (n <= 7), " << disagreements << " disagreements";
    if (!first_bad.empty()) d << ", first " << first_bad;
    d << ", " << fmt_seconds(t.seconds());
    report(2, disagreements == 0, "chi engine equivalence", d.str());
}

// Criteria 3, 4 and 6 read the same verification runs.
void criteria_3_4_6()
{
    Stopwatch t;
    const CheckSet checks = CheckSet::parse("bound,lemma1,lemma2");
    RunOptions opt;

    std::cerr << "verifying exhaustive n <= 7 ..." << std::endl;
    const CorpusReport exhaustive = run_verification(Population::exhaustive(kMaxExhaustiveOrder), checks, opt);
    std::vector<CorpusReport> sampled;
    for (int n = kMinSampleOrder; n <= kMaxSampleOrder; ++n) {
        std::cerr << "verifying " << kSamplesPerOrder << " samples at n = " << n << " ..." << std::endl;
        sampled.push_back(run_verification(Population::sample(n, kSamplesPerOrder, kSeed), checks, opt));
    }

    std::uint64_t members = exhaustive.members, bound_violations = exhaustive.bound_violations;
    std::uint64_t lemma2_checked = exhaustive.lemma2_checked, lemma2_violations = exhaustive.lemma2_violations;
    std::uint64_t chi_cross = exhaustive.chi_cross_checked, chi_cross_bad = exhaustive.chi_cross_disagreements;
    std::uint64_t tight = 0;
    for (const CorpusReport& r : sampled) {
        members += r.members;
        bound_violations += r.bound_violations;
        lemma2_checked += r.lemma2_checked;
        lemma2_violations += r.lemma2_violations;
        chi_cross += r.chi_cross_checked;
        chi_cross_bad += r.chi_cross_disagreements;
    }
    for (const auto& [omega, b] : exhaustive.omega_histogram) tight += b.tight;
    for (const CorpusReport& r : sampled)
        for (const auto& [omega, b] : r.omega_histogram) tight += b.tight;

    bool samples_complete = true;
    for (const CorpusReport& r : sampled) samples_complete = samples_complete && r.members == kSamplesPerOrder;

    {
        std::ostringstream d;
        d << members << " members (" << exhaustive.members << " exhaustive n <= 7, " << kSamplesPerOrder
          << " sampled for each n in 8..14, seed " << kSeed << "), " << bound_violations << " violations of chi <= f(omega), "
          << tight << " tight, chi cross-check " << chi_cross_bad << "/" << chi_cross << " disagreements, "
          << fmt_seconds(t.seconds());
        report(3, bound_violations == 0 && chi_cross_bad == 0 && samples_complete, "chi <= f(omega)", d.str());
    }

    {
        std::ostringstream d;
        d << exhaustive.lemma1_pairs << " partitioning pairs (exhaustive n <= 7);";
        std::uint64_t fails = 0;
        for (std::size_t i = 0; i < exhaustive.lemma1.size(); ++i) {
            const Tally& tl = exhaustive.lemma1[i];
            fails += tl.fails;
            d << " 1." << i + 1 << " " << tl.holds << "h/" << tl.vacuous << "v/" << tl.fails << "f";
        }
        // Property failures on the sampled populations are reported too, but
        // the criterion is stated over the exhaustive range.
        std::uint64_t sample_fails = 0, sample_pairs = 0;
        for (const CorpusReport& r : sampled) {
            sample_pairs += r.lemma1_pairs;
            for (const Tally& tl : r.lemma1) sample_fails += tl.fails;
        }
        d << "; sampled n = 8..14: " << sample_pairs << " pairs, " << sample_fails << " fails";
        std::uint64_t partition_errors = 0;
        for (const Violation& v : exhaustive.violations) partition_errors += v.kind == "partition";
        if (partition_errors) d << "; " << partition_errors << " partition errors";
        report(4, fails == 0 && partition_errors == 0, "structural lemma properties", d.str());
    }

    {
        std::ostringstream d;
        d << lemma2_checked << " connected omega = 3 members (components included), " << lemma2_violations
          << " with delta > 5, n > 8 or chi > 4";
        report(6, lemma2_violations == 0 && lemma2_checked > 0, "omega = 3 scope", d.str());
    }
}

void criterion5()
{
    std::ostringstream d;
    bool ok = true;
    auto expect = [&](const std::string& name, const Graph& g, int omega, int chi) {
        const InvariantReport r = compute_invariants(g, ChiEngine::Matching);
        const bool good = r.omega == omega && r.chi == chi;
        ok = ok && good;
        d << name << " (" << r.omega << "," << r.chi << ")" << (good ? "" : " expected (" + std::to_string(omega) + "," + std::to_string(chi) + ")") << "; ";
    };
    try {
        for (int r : {1, 2, 3}) expect("even(" + std::to_string(r) + ")", extremal_even(r), 2 * r, 3 * r);
        for (int m : {1, 3}) expect("odd(" + std::to_string(m) + ")", extremal_odd(m), 2 * m + 1, 3 * m + 1);
        const Graph g = extremal_omega5();
        expect("omega5", g, 5, 8);
        bool regular = g.order() == 16;
        for (Vertex v = 0; v < g.order(); ++v) regular = regular && g.degree(v) == 10;
        ok = ok && regular;
        d << "omega5 " << g.order() << " vertices, " << (regular ? "10-regular" : "NOT 10-regular");
        // The exact solver confirms the omega5 value independently of the matching identity.
        const int exact = chromatic_exact(g).colors;
        ok = ok && exact == 8;
        d << ", exact chi " << exact;
    } catch (const std::exception& e) {
        ok = false;
        d << "exception: " << e.what();
    }
    report(5, ok, "extremal constructions", d.str());
}

void criterion7()
{
    Stopwatch t;
    std::uint64_t checked = 0, bad = 0;
    auto round_trip = [&](const Graph& g) {
        ++checked;
        const std::string s = serialize_graph6(g);
        const Graph back = parse_graph6(s);
        if (!(back == g) || serialize_graph6(back) != s) ++bad;
    };
    for (int n = 0; n <= kMaxExhaustiveOrder; ++n)
        for_each_labeled_graph(n, [&](std::uint64_t, const Graph& g) { round_trip(g); });
    for (int n = kMinSampleOrder; n <= kMaxSampleOrder; ++n)
        for (const Graph& g : sample_class(n, kSamplesPerOrder, kSeed)) round_trip(g);
    for (int r = 1; 5 * r <= kMaxVertices; ++r) round_trip(extremal_even(r));
    for (int m = 1; 5 * m + 1 <= kMaxVertices; ++m) round_trip(extremal_odd(m));
    round_trip(extremal_omega5());
    round_trip(cycle(5));
    round_trip(wheel6());
    std::ostringstream d;
    d << checked << " graphs (all labelled n <= 7, the sampled populations, every generator output), " << bad
      << " mismatches, " << fmt_seconds(t.seconds());
    report(7, bad == 0, "graph6 round trip", d.str());
}

std::string capture(const std::string& cmd, int& status)
{
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    const int raw = pclose(p);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

void criterion8()
{
    const std::string base = std::string(CHIBOUND_CLI) + " corpus sample 10 1000 42 --checks bound";
    int s1 = 0, s8 = 0;
    const std::string one = capture(base + " --jobs 1", s1);
    const std::string eight = capture(base + " --jobs 8", s8);
    std::ostringstream d;
    d << "--jobs 1 exit " << s1 << ", " << one.size() << " bytes; --jobs 8 exit " << s8 << ", " << eight.size()
      << " bytes; " << (one == eight ? "identical" : "DIFFERENT");
    report(8, s1 == 0 && s8 == 0 && !one.empty() && one == eight, "determinism across --jobs", d.str());
}

}  // namespace

int main()
{
    criterion1();
    criterion2();
    criteria_3_4_6();
    criterion5();
    criterion7();
    criterion8();
    for (const auto& [id, line] : lines) std::cout << line << '\n';
    return failures;
}
