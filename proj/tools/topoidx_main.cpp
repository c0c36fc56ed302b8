// topoidx command line tool: generate family graphs as edge lists, compute
// index reports, verify sun-graph closed forms against the engine and the
// brute-force oracle, evaluate degree-based relations, and benchmark.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 domain error (disconnected graph, 64-bit overflow).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topoidx/topoidx.hpp"

using nlohmann::json;
using namespace topoidx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Refuse to materialize graphs past these sizes; the caps are CLI policy,
// not library limits.
constexpr std::int64_t kDefaultMaxVertices = 100000;
constexpr std::int64_t kMaxEdges = 100000000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family family_from_string(const std::string& name) {
    if (name == "sun") return Family::Sun;
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    throw UsageError("unknown family: " + name);
}

std::int64_t predicted_edges(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Sun: return checked_mul(spec.size, spec.size + 3) / 2;
    case Family::Path: return spec.size - 1;
    case Family::Cycle: return spec.size;
    case Family::Complete: return checked_mul(spec.size, spec.size - 1) / 2;
    }
    return 0;
}

Graph build_family(const FamilySpec& spec, std::int64_t max_vertices) {
    if (spec.size > max_vertices)
        throw UsageError("graph size " + std::to_string(spec.size) + " exceeds the vertex cap " +
                         std::to_string(max_vertices));
    const std::int64_t order = spec.family == Family::Sun ? 2 * spec.size : spec.size;
    if (order > max_vertices)
        throw UsageError("graph order " + std::to_string(order) + " exceeds the vertex cap " +
                         std::to_string(max_vertices));
    if (spec.size >= 3 && predicted_edges(spec) > kMaxEdges)
        throw UsageError("graph would have " + std::to_string(predicted_edges(spec)) +
                         " edges; refusing to materialize");
    return generate(spec);
}

json relation_to_json(const RelationReport& rep) {
    return json{{"name", rep.name}, {"lhs", rep.lhs}, {"rhs", rep.rhs},
                {"status", to_string(rep.status)}};
}

// ---------------------------------------------------------------- gen ----

struct GenOptions {
    std::string family;
    std::int64_t k = 0;
    std::int64_t n = 0;
    bool has_k = false;
    bool has_n = false;
    std::string output;
    std::int64_t max_vertices = kDefaultMaxVertices;
};

FamilySpec resolve_family(const std::string& name, std::int64_t k, bool has_k, std::int64_t n,
                          bool has_n, const std::string& command) {
    const Family family = family_from_string(name);
    if (family == Family::Sun) {
        if (!has_k) throw UsageError(command + " --family sun requires --k");
        return {family, k};
    }
    if (!has_n) throw UsageError(command + " --family " + name + " requires --n");
    return {family, n};
}

int run_gen(const GenOptions& opt) {
    const FamilySpec spec =
        resolve_family(opt.family, opt.k, opt.has_k, opt.n, opt.has_n, "gen");
    const Graph g = build_family(spec, opt.max_vertices);
    if (opt.output.empty()) {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw UsageError("cannot open output file: " + opt.output);
        write_edge_list(out, g);
    }
    return kExitOk;
}

// ------------------------------------------------------------ compute ----

struct ComputeOptions {
    std::string input;
    std::string format = "json";
    unsigned threads = 1;
    std::int64_t max_vertices = kDefaultMaxVertices;
};

Graph read_input_graph(const std::string& input, std::int64_t max_vertices) {
    Graph g = input == "-" ? read_edge_list(std::cin) : read_edge_list_file(input);
    if (g.vertex_count() > max_vertices)
        throw UsageError("input graph has " + std::to_string(g.vertex_count()) +
                         " vertices; cap is " + std::to_string(max_vertices) +
                         " (override with --max-n)");
    return g;
}

void print_compute_csv(const IndexReport& r) {
    std::string header = "n,m,diameter,wiener,wiener_polarity,m1,m2";
    std::string row = std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                      std::to_string(r.diameter) + "," + std::to_string(r.wiener) + "," +
                      std::to_string(r.wiener_polarity) + "," + std::to_string(r.m1) + "," +
                      std::to_string(r.m2);
    for (std::size_t d = 0; d < r.w_d.size(); ++d) {
        header += ",w_" + std::to_string(d + 1);
        row += "," + std::to_string(r.w_d[d]);
    }
    std::cout << header << "\n" << row << "\n";
}

int run_compute(const ComputeOptions& opt) {
    const Graph g = read_input_graph(opt.input, opt.max_vertices);
    const IndexReport report = full_report(g, opt.threads);
    if (opt.format == "csv") {
        print_compute_csv(report);
        return kExitOk;
    }
    const auto relations = relation_reports(report, wiener_pairwise(g));
    json doc;
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["diameter"] = report.diameter;
    doc["wiener"] = report.wiener;
    doc["wiener_polarity"] = report.wiener_polarity;
    doc["w_d"] = report.w_d;
    doc["m1"] = report.m1;
    doc["m2"] = report.m2;
    doc["hosoya"] = report.w_d;  // Hosoya coefficients are the distance counts
    doc["relations"] = json::array();
    for (const auto& rep : relations) doc["relations"].push_back(relation_to_json(rep));
    doc["provenance"] = json{{"input", opt.input}, {"tool", "topoidx"}, {"version", kVersion}};
    std::cout << doc.dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------- relations ----

struct RelationsOptions {
    std::string input;
    std::string format = "json";
    unsigned threads = 1;
    std::int64_t max_vertices = kDefaultMaxVertices;
};

int run_relations(const RelationsOptions& opt) {
    const Graph g = read_input_graph(opt.input, opt.max_vertices);
    const auto relations = relation_reports(full_report(g, opt.threads), wiener_pairwise(g));
    if (opt.format == "csv") {
        std::cout << "name,lhs,rhs,status\n";
        for (const auto& rep : relations)
            std::cout << rep.name << "," << rep.lhs << "," << rep.rhs << ","
                      << to_string(rep.status) << "\n";
        return kExitOk;
    }
    json doc = json::array();
    for (const auto& rep : relations) doc.push_back(relation_to_json(rep));
    std::cout << doc.dump() << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- verify ----

struct VerifyOptions {
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::int64_t oracle_cap = 200;  // max vertex count the O(n^3) oracle runs at
    std::string format = "json";
    unsigned threads = 1;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.k_min < 3) throw UsageError("k-min must be >= 3");
    if (opt.k_max < opt.k_min) throw UsageError("empty range: k-max must be >= k-min");

    std::int64_t sizes = 0;
    std::int64_t mismatches = 0;
    if (opt.format == "csv") std::cout << "k,W,W_p,d1,d2,d3\n";

    for (std::int64_t k = opt.k_min; k <= opt.k_max; ++k) {
        ++sizes;
        const Graph g = sun(k);
        const AllPairsSummary summary = all_pairs_summary(g, opt.threads);
        const auto& counts = summary.distribution.counts;
        const DistancePolynomial engine_poly{counts};

        const std::int64_t w_engine = wiener_from_polynomial(engine_poly);
        const std::int64_t wp_engine = counts.size() >= 3 ? counts[2] : 0;
        std::int64_t independent_total = 0;
        std::int64_t clique_total = 0;
        for (std::int64_t v = 0; v < 2 * k; ++v) {
            const std::int64_t t = summary.transmissions[static_cast<std::size_t>(v)];
            (v < k ? clique_total : independent_total) += t;
        }

        const TransmissionSplit split = transmission_split_sun(k);
        const auto check = [&](bool ok) { mismatches += ok ? 0 : 1; };
        check(w_engine == wiener_sun(k));
        check(wiener_pairwise(g) == wiener_sun(k));
        check(wiener_transmission(g) == wiener_sun(k));
        check(wp_engine == wiener_polarity_sun(k));
        check(engine_poly == hosoya_sun(k));
        check(independent_total == split.independent_total);
        check(clique_total == split.clique_total);
        check(summary.distribution.diameter() == (k == 3 ? 2 : 3));
        if (2 * k <= opt.oracle_cap) {
            const DistanceMatrix dm = floyd_warshall(g);
            check(wiener_naive(dm) == wiener_sun(k));
            check(polarity_naive(dm) == wiener_polarity_sun(k));
        }

        if (opt.format == "csv") {
            std::cout << k << "," << w_engine << "," << wp_engine;
            for (std::size_t d = 0; d < 3; ++d)
                std::cout << "," << (d < counts.size() ? counts[d] : 0);
            std::cout << "\n";
        }
    }

    if (opt.format != "csv") {
        json doc{{"k_min", opt.k_min}, {"k_max", opt.k_max}, {"oracle_cap", opt.oracle_cap},
                 {"sizes", sizes}, {"mismatches", mismatches}};
        std::cout << doc.dump() << "\n";
    }
    std::cerr << sizes << " sizes, " << mismatches << " mismatches\n";
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

// -------------------------------------------------------------- bench ----

struct BenchOptions {
    std::string family;
    std::int64_t k = 0;
    std::int64_t n = 0;
    bool has_k = false;
    bool has_n = false;
    int repeat = 3;
    unsigned threads = 1;
    std::int64_t max_vertices = kDefaultMaxVertices;
};

int run_bench(const BenchOptions& opt) {
    if (opt.repeat < 1) throw UsageError("repeat must be >= 1");
    const FamilySpec spec =
        resolve_family(opt.family, opt.k, opt.has_k, opt.n, opt.has_n, "bench");
    const Graph g = build_family(spec, opt.max_vertices);

    using clock = std::chrono::steady_clock;
    double engine_seconds = 0;
    std::int64_t engine_wiener = 0;
    for (int r = 0; r < opt.repeat; ++r) {
        const auto start = clock::now();
        const AllPairsSummary summary = all_pairs_summary(g, opt.threads);
        const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        engine_wiener = wiener_from_polynomial(DistancePolynomial{summary.distribution.counts});
        engine_seconds = r == 0 ? elapsed : std::min(engine_seconds, elapsed);
    }

    json doc;
    doc["family"] = opt.family;
    doc["n"] = g.vertex_count();
    if (spec.family == Family::Sun) doc["k"] = spec.size;
    doc["repeat"] = opt.repeat;
    doc["engine"] = json{{"wiener", engine_wiener}, {"seconds", engine_seconds}};

    if (spec.family == Family::Sun) {
        // The closed form is too fast for one clock read; time a batch.
        constexpr int kBatch = 1000000;
        volatile std::int64_t sink = 0;
        const auto start = clock::now();
        for (int i = 0; i < kBatch; ++i) sink = sink + wiener_sun(spec.size);
        const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        const std::int64_t closed = wiener_sun(spec.size);
        doc["closed_form"] = json{{"wiener", closed}, {"seconds", elapsed / kBatch}};
        doc["agree"] = closed == engine_wiener;
        std::cout << doc.dump() << "\n";
        if (closed != engine_wiener) {
            std::cerr << "mismatch: engine " << engine_wiener << " vs closed form " << closed
                      << "\n";
            return kExitMismatch;
        }
        return kExitOk;
    }
    std::cout << doc.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact topological indices and Hosoya polynomials for connected graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("topoidx ") + kVersion);
    std::int64_t seed = 0;
    app.add_option("--seed", seed, "reserved for random-corpus commands")->group("");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate a family graph as an edge list");
    gen->add_option("--family", gen_opt.family, "sun|path|cycle|complete")->required();
    auto* gen_k = gen->add_option("--k", gen_opt.k, "sun parameter k (>= 3)");
    auto* gen_n = gen->add_option("--n", gen_opt.n, "vertex count for path/cycle/complete");
    gen->add_option("-o,--output", gen_opt.output, "output file (defaults to stdout)");
    gen->add_option("--max-n", gen_opt.max_vertices, "vertex cap");

    ComputeOptions compute_opt;
    auto* compute = app.add_subcommand("compute", "Compute the index report for an edge list");
    compute->add_option("input", compute_opt.input, "edge-list file, or - for stdin")->required();
    compute->add_option("--format", compute_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--threads", compute_opt.threads, "BFS worker threads (0 = auto)");
    compute->add_option("--max-n", compute_opt.max_vertices, "vertex cap");

    RelationsOptions rel_opt;
    auto* relations = app.add_subcommand("relations", "Evaluate degree-based relations");
    relations->add_option("input", rel_opt.input, "edge-list file, or - for stdin")->required();
    relations->add_option("--format", rel_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    relations->add_option("--threads", rel_opt.threads, "BFS worker threads (0 = auto)");
    relations->add_option("--max-n", rel_opt.max_vertices, "vertex cap");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Sweep sun graphs: engine vs closed forms vs oracle");
    verify->add_option("--k-min", verify_opt.k_min, "first k (>= 3)")->required();
    verify->add_option("--k-max", verify_opt.k_max, "last k")->required();
    verify->add_option("--oracle-cap", verify_opt.oracle_cap,
                       "largest vertex count the cubic oracle runs at");
    verify->add_option("--format", verify_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--threads", verify_opt.threads, "BFS worker threads (0 = auto)");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "Time the APSP engine against the closed form");
    bench->add_option("--family", bench_opt.family, "sun|path|cycle|complete")->required();
    auto* bench_k = bench->add_option("--k", bench_opt.k, "sun parameter k (>= 3)");
    auto* bench_n = bench->add_option("--n", bench_opt.n, "vertex count for path/cycle/complete");
    bench->add_option("--repeat", bench_opt.repeat, "timing repetitions (best of)");
    bench->add_option("--threads", bench_opt.threads, "BFS worker threads (0 = auto)");
    bench->add_option("--max-n", bench_opt.max_vertices, "vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    gen_opt.has_k = gen_k->count() > 0;
    gen_opt.has_n = gen_n->count() > 0;
    bench_opt.has_k = bench_k->count() > 0;
    bench_opt.has_n = bench_n->count() > 0;

    try {
        if (gen->parsed()) return run_gen(gen_opt);
        if (compute->parsed()) return run_compute(compute_opt);
        if (relations->parsed()) return run_relations(rel_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
