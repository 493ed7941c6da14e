// chibound: command-line front end for the {3K1, 2K1+(K2uK1)}-free graph toolkit.
//
//   chibound check <graph6|->
//   chibound invariants <graph6|-> [--exact | --matching] [--limit N]
//   chibound decompose <graph6|-> [--pair V W]
//   chibound gen <even R | odd M | omega5 | c5 | w6> [--verify]
//   chibound corpus <exhaustive N | sample N COUNT SEED> [--checks LIST] [--jobs J]
//
// Verdict data goes to stdout as JSON (one object per input line when reading
// "-"); diagnostics go to stderr. Exit codes: 0 ok / member, 1 usage or input
// error, 2 excluded from the class, 3 corpus violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chibound/chibound.hpp"
#include "chibound/json_io.hpp"

namespace {

using namespace chibound;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitExcluded = 2;
constexpr int kExitViolation = 3;

struct InputOptions {
    std::string source;
    std::string format = "graph6";
};

std::string strip_line_end(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

/// Graphs named by the positional argument: a graph6 string, or "-" for one
/// graph6 per stdin line. With --format dimacs the argument is a file path
/// (or "-" for stdin) holding a single edge list.
std::vector<Graph> read_inputs(const InputOptions& in)
{
    std::vector<Graph> out;
    if (in.format == "dimacs") {
        std::string text;
        if (in.source == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream f(in.source);
            if (!f) throw std::runtime_error("cannot open " + in.source);
            text.assign(std::istreambuf_iterator<char>(f), {});
        }
        out.push_back(parse_dimacs(text));
        return out;
    }
    if (in.source != "-") {
        out.push_back(parse_graph6(in.source));
        return out;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        line = strip_line_end(line);
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void emit(const Json& j, bool pretty)
{
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
}

int run_check(const InputOptions& in)
{
    const auto graphs = read_inputs(in);
    bool all_members = true;
    for (const Graph& g : graphs) {
        const MembershipVerdict v = is_class_member(g);
        Json j;
        j["graph6"] = serialize_graph6(g);
        j["member"] = v.member();
        j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
        j["connected"] = is_connected(g);
        emit(j, graphs.size() == 1);
        all_members = all_members && v.member();
    }
    return all_members ? kExitOk : kExitExcluded;
}

int run_invariants(const InputOptions& in, bool exact, bool matching, int limit)
{
    if (exact && matching) throw CLI::ValidationError("--exact and --matching are mutually exclusive");
    const ChiEngine engine = exact ? ChiEngine::Exact : matching ? ChiEngine::Matching : ChiEngine::Auto;
    const auto graphs = read_inputs(in);
    for (const Graph& g : graphs) emit(to_json(compute_invariants(g, engine, limit)), graphs.size() == 1);
    return kExitOk;
}

int run_decompose(const InputOptions& in, const std::vector<int>& pair)
{
    const auto graphs = read_inputs(in);
    int status = kExitOk;
    for (const Graph& g : graphs) {
        Json j;
        j["graph6"] = serialize_graph6(g);
        const MembershipVerdict m = is_class_member(g);
        if (!m.member()) {
            std::cerr << "decompose: " << j["graph6"].get<std::string>()
                      << " is not {3K1, 2K1+(K2uK1)}-free; refusing\n";
            status = kExitExcluded;
            continue;
        }
        std::optional<std::pair<Vertex, Vertex>> vw;
        if (pair.size() == 2) vw = std::pair{pair[0], pair[1]};
        else vw = choose_partitioning_pair(g);
        if (!vw) {
            j["pair"] = nullptr;
            j["note"] = "no maximum-degree vertex has a non-neighbour";
            emit(j, graphs.size() == 1);
            continue;
        }
        const Decomposition d = decompose(g, vw->first, vw->second);
        const Json parts = to_json(d);
        for (auto& [key, value] : parts.items()) j[key] = value;
        j["properties"] = to_json(check_lemma1(g, d));
        emit(j, graphs.size() == 1);
    }
    return status;
}

int run_gen(const std::vector<std::string>& args, bool verify)
{
    if (args.empty()) throw CLI::ValidationError("gen needs a family: even R | odd M | omega5 | c5 | w6");
    const std::string& family = args[0];
    auto parameter = [&]() {
        if (args.size() != 2) throw CLI::ValidationError("gen " + family + " takes exactly one integer parameter");
        return std::stoi(args[1]);
    };
    Graph g;
    if (family == "even") g = extremal_even(parameter());
    else if (family == "odd") g = extremal_odd(parameter());
    else if (family == "omega5" || family == "c5" || family == "w6") {
        if (args.size() != 1) throw CLI::ValidationError("gen " + family + " takes no parameter");
        g = family == "omega5" ? extremal_omega5() : family == "c5" ? cycle(5) : wheel6();
    } else {
        throw CLI::ValidationError("unknown family '" + family + "'");
    }

    if (!verify) {
        std::cout << serialize_graph6(g) << '\n';
        return kExitOk;
    }
    const MembershipVerdict m = is_class_member(g);
    Json j;
    j["graph6"] = serialize_graph6(g);
    j["member"] = m.member();
    j["witness"] = m.witness ? to_json(*m.witness) : Json(nullptr);
    j["report"] = to_json(compute_invariants(g));
    emit(j, true);
    return kExitOk;
}

int run_corpus(const std::vector<std::string>& args, const std::string& checks, int jobs, unsigned cross_check,
               const std::string& dump_path)
{
    if (args.empty()) throw CLI::ValidationError("corpus needs: exhaustive N | sample N COUNT SEED");
    auto number = [](const std::string& s) { return std::stoull(s); };
    Population pop;
    if (args[0] == "exhaustive" && args.size() == 2) {
        pop = Population::exhaustive(static_cast<int>(number(args[1])));
    } else if (args[0] == "sample" && args.size() == 4) {
        pop = Population::sample(static_cast<int>(number(args[1])), number(args[2]), number(args[3]));
    } else {
        throw CLI::ValidationError("corpus needs: exhaustive N | sample N COUNT SEED");
    }
    RunOptions opt;
    opt.jobs = jobs;
    opt.cross_check_percent = cross_check;
    const CorpusReport report = run_verification(pop, CheckSet::parse(checks), opt);
    emit(to_json(report), true);

    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw std::runtime_error("cannot write " + dump_path);
        for (const Violation& v : report.violations) dump << v.graph6 << '\n';
    }
    return report.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification toolkit for {3K1, 2K1+(K2uK1)}-free graphs"};
    app.require_subcommand(1);

    InputOptions in;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("graph", in.source, "graph6 string, or - to read one graph6 per stdin line")->required();
        sub->add_option("--format", in.format, "input format")->check(CLI::IsMember({"graph6", "dimacs"}));
    };

    auto* check = app.add_subcommand("check", "Decide class membership and print a witness");
    add_input(check);

    bool exact = false, matching = false;
    int limit = kDefaultExactLimit;
    auto* inv = app.add_subcommand("invariants", "Compute omega, chi, delta and the bound");
    add_input(inv);
    inv->add_flag("--exact", exact, "force the branch-and-bound chi solver");
    inv->add_flag("--matching", matching, "force the matching-based chi (3K1-free only)");
    inv->add_option("--limit", limit, "vertex limit for the exact solver");

    std::vector<int> pair;
    auto* dec = app.add_subcommand("decompose", "Structural decomposition and property report");
    add_input(dec);
    dec->add_option("--pair", pair, "non-adjacent pair V W")->expected(2);

    std::vector<std::string> gen_args;
    bool verify = false;
    auto* gen = app.add_subcommand("gen", "Generate an extremal construction");
    gen->add_option("family", gen_args, "even R | odd M | omega5 | c5 | w6")->required();
    gen->add_flag("--verify", verify, "print membership and an invariant report as JSON");

    std::vector<std::string> corpus_args;
    std::string checks = "bound";
    int jobs = 1;
    unsigned cross_check = 1;
    std::string dump_path;
    auto* corpus = app.add_subcommand("corpus", "Run a verification campaign");
    corpus->add_option("population", corpus_args, "exhaustive N | sample N COUNT SEED")->required();
    corpus->add_option("--checks", checks, "comma-separated subset of bound,lemma1,lemma2,oracle");
    corpus->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    corpus->add_option("--cross-check-percent", cross_check, "share of members re-solved exactly")
        ->check(CLI::Range(0u, 100u));
    corpus->add_option("--dump-violations", dump_path, "write graph6 of violating graphs to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*check) return run_check(in);
        if (*inv) return run_invariants(in, exact, matching, limit);
        if (*dec) return run_decompose(in, pair);
        if (*gen) return run_gen(gen_args, verify);
        if (*corpus) return run_corpus(corpus_args, checks, jobs, cross_check, dump_path);
    } catch (const std::exception& e) {
        std::cerr << "chibound: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
