// kindep: build graph products and powers, compute alpha_k, check bounds.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kindep/distance.hpp"
#include "kindep/graph6.hpp"
#include "kindep/products.hpp"
#include "kindep/random.hpp"
#include "kindep/run_config.hpp"
#include "kindep/solver.hpp"
#include "kindep/suite.hpp"

using namespace kindep;

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Inline --g6 values come first, then files (first record of each).
std::vector<Graph> load_graphs(const std::vector<std::string>& inline_g6, const std::vector<std::string>& files,
                               std::size_t expected) {
    std::vector<Graph> out;
    try {
        for (const auto& text : inline_g6) out.push_back(graph6_decode(text));
        for (const auto& path : files) {
            auto graphs = graph6_decode_lines(read_file(path));
            if (graphs.empty()) throw UsageError("no graph in '" + path + "'");
            out.push_back(std::move(graphs.front()));
        }
    } catch (const Graph6Error& e) {
        throw UsageError(std::string("graph6 parse error: ") + e.what());
    }
    if (out.size() != expected) {
        throw UsageError("expected " + std::to_string(expected) + " graph(s), got " + std::to_string(out.size()));
    }
    return out;
}

ProductKind kind_from(const std::string& name) {
    auto kind = parse_product_kind(name);
    if (!kind) throw UsageError("unknown product kind '" + name + "'");
    return *kind;
}

void print_matrix(const DistanceMatrix& d) {
    for (Vertex u = 0; u < d.order(); ++u) {
        for (Vertex v = 0; v < d.order(); ++v) std::cout << (v ? " " : "") << d(u, v).to_string();
        std::cout << '\n';
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-independence numbers of graph products"};
    app.require_subcommand(1);

    std::vector<std::string> g6;
    std::vector<std::string> files;
    std::string kind_name;
    std::uint32_t k = 1;

    auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--g6", g6, "inline graph6 graph (repeatable)");
        cmd->add_option("files", files, "graph6 files (first record is used)");
    };

    auto* product_cmd = app.add_subcommand("product", "print the product of two graphs as graph6");
    product_cmd->add_option("--kind", kind_name, "cartesian | tensor | strong | lexicographic")->required();
    add_inputs(product_cmd);

    auto* power_cmd = app.add_subcommand("power", "print the k-th power of a graph as graph6");
    power_cmd->add_option("-k", k, "power")->required()->check(CLI::PositiveNumber);
    add_inputs(power_cmd);

    auto* alphak_cmd = app.add_subcommand("alphak", "print alpha_k and a witness set");
    alphak_cmd->add_option("-k", k, "distance parameter")->required()->check(CLI::PositiveNumber);
    add_inputs(alphak_cmd);

    auto* distance_cmd = app.add_subcommand(
        "distance", "print the distance matrix of a graph, or of a product from the closed forms (--kind)");
    distance_cmd->add_option("--kind", kind_name, "product kind; requires two graphs");
    add_inputs(distance_cmd);

    std::size_t random_n = 0;
    double random_p = 0.5;
    std::uint64_t random_seed = 1;
    auto* random_cmd = app.add_subcommand("random", "print a seeded G(n, p) graph as graph6");
    random_cmd->add_option("-n,--n", random_n, "vertex count")->required();
    random_cmd->add_option("--p", random_p, "edge probability")->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--seed", random_seed, "seed");

    RunConfig config;
    config.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string config_path;
    std::string p_flag;
    std::string k_flag;
    std::string suite_flag;
    auto* verify_cmd = app.add_subcommand("verify", "check bounds and identities on a corpus");
    verify_cmd->add_option("--config", config_path, "flat key=value config file");
    verify_cmd->add_option("--seed", config.seed, "corpus seed");
    verify_cmd->add_option("--trials", config.trials, "random factor pairs");
    verify_cmd->add_option("--n-max", config.n_max, "vertex cap per factor");
    verify_cmd->add_option("--p", p_flag, "comma-separated edge probabilities");
    verify_cmd->add_option("-k", k_flag, "comma-separated k values");
    verify_cmd->add_option("--suite", suite_flag, "paper-fixed, random and/or theorem ids, comma separated");
    verify_cmd->add_option("--jobs", config.jobs, "worker threads");
    verify_cmd->add_option("--json", config.json_out, "JSONL report path ('-' for stdout)");
    verify_cmd->add_option("--csv", config.csv_out, "CSV summary path ('-' for stdout)");
    verify_cmd->add_option("--budget-ms", config.budget_ms, "per-check solver budget");
    verify_cmd->add_flag("--strict", config.strict, "skipped or inconclusive checks fail the run");
    verify_cmd->add_flag("--force-isolated", config.force_isolated, "add isolated vertices to odd instances");
    verify_cmd->add_flag("--timings", config.timings, "include elapsed_ms in the JSONL report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (product_cmd->parsed()) {
            const auto graphs = load_graphs(g6, files, 2);
            std::cout << graph6_encode(product(kind_from(kind_name), graphs[0], graphs[1])) << '\n';
        } else if (power_cmd->parsed()) {
            const auto graphs = load_graphs(g6, files, 1);
            std::cout << graph6_encode(power(graphs[0], k)) << '\n';
        } else if (alphak_cmd->parsed()) {
            const auto graphs = load_graphs(g6, files, 1);
            const auto result = k_independence_number(graphs[0], k);
            std::cout << "alpha " << result.alpha << "\nwitness";
            for (Vertex v : result.witness.members()) std::cout << ' ' << v;
            std::cout << '\n';
        } else if (distance_cmd->parsed()) {
            if (kind_name.empty()) {
                print_matrix(bfs_distances(load_graphs(g6, files, 1)[0]));
            } else {
                const auto graphs = load_graphs(g6, files, 2);
                print_matrix(product_distances(kind_from(kind_name), graphs[0], graphs[1]));
            }
        } else if (random_cmd->parsed()) {
            std::cout << graph6_encode(erdos_renyi(random_n, random_p, random_seed)) << '\n';
        } else if (verify_cmd->parsed()) {
            std::set<std::string> explicit_keys;
            for (const auto* name : {"seed", "trials", "n-max", "jobs", "json", "csv", "budget-ms", "strict",
                                     "force-isolated", "timings"}) {
                if (verify_cmd->count(std::string("--") + name) > 0) explicit_keys.insert(name);
            }
            std::map<std::string, std::string> flags;
            if (!p_flag.empty()) flags["p"] = p_flag;
            if (!k_flag.empty()) flags["k"] = k_flag;
            if (!suite_flag.empty()) flags["suite"] = suite_flag;
            for (const auto& [key, value] : flags) explicit_keys.insert(key);
            try {
                if (!config_path.empty()) apply_key_values(config, parse_key_values(read_file(config_path)), explicit_keys);
                apply_key_values(config, flags, {});
                validate(config);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }

            std::vector<std::string> filter;
            const CorpusSpec corpus = corpus_of(config, filter);
            SuiteOptions options;
            options.jobs = config.jobs;
            options.budget = std::chrono::milliseconds(config.budget_ms);
            SuiteResult result;
            try {
                result = run_suite(corpus, filter, options);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }

            std::ostringstream jsonl;
            write_jsonl(jsonl, result.reports, config.timings);
            std::ostringstream csv;
            write_csv_summary(csv, result.summary);
            if (config.json_out == "-") std::cout << jsonl.str();
            else if (!config.json_out.empty()) write_file(config.json_out, jsonl.str());
            if (config.csv_out == "-") std::cout << csv.str();
            else if (!config.csv_out.empty()) write_file(config.csv_out, csv.str());

            for (const auto& s : result.summary) {
                std::cerr << s.theorem_id << ": " << s.passes << "/" << s.trials << " met";
                if (s.skipped > 0) std::cerr << ", " << s.skipped << " skipped";
                if (s.inconclusive > 0) std::cerr << ", " << s.inconclusive << " inconclusive";
                std::cerr << '\n';
            }
            return result.all_expectations_met(config.strict) ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
