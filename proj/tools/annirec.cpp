// annirec: annihilation-number toolkit.
//
// Subcommands: anni (n, m, a, 2k), recognize (alpha == a with
// certificate), gap (alpha >= a - ell), oracle (brute-force alpha, tau,
// mu on small graphs), gen (seeded Erdos-Renyi instances).
//
// Exit codes: 0 affirmative, 1 negative, 2 input error, 3 internal
// invariant breach, 4 resource limit.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "annirec/fpt_gap.hpp"
#include "annirec/graph.hpp"
#include "annirec/matching.hpp"
#include "annirec/oracle.hpp"
#include "annirec/recognition.hpp"

namespace {

using annirec::Graph;
using json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;
constexpr int kExitResourceLimit = 4;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string graph_digest(const Graph& g) {
    std::ostringstream out;
    out << std::hex << fnv1a(annirec::serialize_edge_list(g));
    return out.str();
}

annirec::GraphFormat detect_format(const std::string& path, const std::string& override_name) {
    if (override_name == "dimacs") return annirec::GraphFormat::dimacs;
    if (override_name == "edgelist") return annirec::GraphFormat::edge_list;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".col")
        return annirec::GraphFormat::dimacs;
    return annirec::GraphFormat::edge_list;
}

Graph load_graph(const std::string& path, const std::string& format_override) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return annirec::parse_graph(in, detect_format(path, format_override));
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Line-oriented key=value report; ms is always the last line so
// scripted consumers can drop it when comparing runs.
class Report {
public:
    explicit Report(const std::string& command) { set("command", command); }

    void set(const std::string& key, const json& value) { fields_.emplace_back(key, value); }

    void print(bool as_json, std::int64_t ms) const {
        if (as_json) {
            json doc;
            for (const auto& [key, value] : fields_) doc[key] = value;
            doc["ms"] = ms;
            std::cout << doc.dump() << "\n";
            return;
        }
        for (const auto& [key, value] : fields_) {
            std::cout << key << "=";
            if (value.is_string()) {
                std::cout << value.get<std::string>();
            } else if (value.is_array()) {
                bool first = true;
                for (const auto& item : value) {
                    if (!first) std::cout << " ";
                    first = false;
                    std::cout << item;
                }
            } else {
                std::cout << value;
            }
            std::cout << "\n";
        }
        std::cout << "ms=" << ms << "\n";
    }

private:
    std::vector<std::pair<std::string, json>> fields_;
};

struct CommonArgs {
    std::string input;
    std::string format;  // "", "dimacs", "edgelist"
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input, "graph file")->required();
    cmd->add_option("--format", args.format, "input format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    cmd->add_flag("--json", args.as_json, "emit a single JSON object");
}

int run_anni(const CommonArgs& args) {
    Stopwatch timer;
    Graph g = load_graph(args.input, args.format);
    auto summary = annirec::annihilation_number(g);
    Report report("anni");
    if (!args.as_json) report.set("digest", graph_digest(g));
    report.set("n", summary.n);
    report.set("m", summary.m);
    report.set("a", summary.a);
    report.set("two_k", summary.two_k);
    report.print(args.as_json, timer.ms());
    return kExitYes;
}

int run_recognize(const CommonArgs& args, bool emit_certificate) {
    Stopwatch timer;
    Graph g = load_graph(args.input, args.format);
    auto summary = annirec::annihilation_number(g);
    auto certificate = annirec::recognize_equal(g);

    Report report("recognize");
    if (!args.as_json) report.set("digest", graph_digest(g));
    report.set("n", summary.n);
    report.set("m", summary.m);
    report.set("a", summary.a);
    report.set("two_k", summary.two_k);
    report.set("verdict", certificate ? "yes" : "no");
    if (certificate && emit_certificate) {
        // Re-verify before anything leaves the process.
        if (!annirec::verify_independent_set(g, certificate->independent_set) ||
            certificate->target_size != summary.a)
            throw annirec::internal_error("certificate failed re-verification");
        report.set("certificate", certificate->independent_set);
    }
    report.print(args.as_json, timer.ms());
    return certificate ? kExitYes : kExitNo;
}

int run_gap(const CommonArgs& args, int ell, std::uint64_t node_limit) {
    Stopwatch timer;
    Graph g = load_graph(args.input, args.format);
    auto summary = annirec::annihilation_number(g);
    annirec::VertexCoverOptions options;
    options.node_limit = node_limit;
    auto decision = annirec::decide_gap(g, ell, options);

    Report report("gap");
    if (!args.as_json) report.set("digest", graph_digest(g));
    report.set("n", summary.n);
    report.set("m", summary.m);
    report.set("a", decision.a);
    report.set("two_k", summary.two_k);
    report.set("verdict", decision.answer ? "yes" : "no");
    report.set("mu", decision.mu);
    report.set("p", decision.p);
    report.set("ell", ell);
    report.set("cutoff", decision.cutoff_applied);
    report.print(args.as_json, timer.ms());
    return decision.answer ? kExitYes : kExitNo;
}

int run_oracle(const CommonArgs& args, const std::string& which) {
    Stopwatch timer;
    Graph g = load_graph(args.input, args.format);
    int value = 0;
    if (which == "alpha") value = annirec::oracle::brute_alpha(g);
    else if (which == "tau") value = annirec::oracle::brute_tau(g);
    else value = annirec::oracle::brute_mu(g);

    Report report("oracle");
    if (!args.as_json) report.set("digest", graph_digest(g));
    report.set("n", g.vertex_count());
    report.set("m", g.edge_count());
    report.set("which", which);
    report.set("value", value);
    report.print(args.as_json, timer.ms());
    return kExitYes;
}

int run_gen(int n, double p, std::uint64_t seed, const std::string& output, bool as_json) {
    Stopwatch timer;
    Graph g = annirec::generate_random_graph(n, p, seed);
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    out << annirec::serialize_edge_list(g);
    if (!out) throw std::invalid_argument("write failed: " + output);

    Report report("gen");
    if (!as_json) report.set("digest", graph_digest(g));
    report.set("n", g.vertex_count());
    report.set("m", g.edge_count());
    report.set("seed", seed);
    report.set("path", output);
    report.print(as_json, timer.ms());
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence vs annihilation number toolkit"};
    app.require_subcommand(1);

    CommonArgs anni_args;
    auto* anni = app.add_subcommand("anni", "print n, m, a(G) and 2k");
    add_common(anni, anni_args);

    CommonArgs rec_args;
    bool emit_certificate = false;
    auto* recognize = app.add_subcommand("recognize", "decide alpha(G) == a(G)");
    add_common(recognize, rec_args);
    recognize->add_flag("--emit-certificate", emit_certificate,
                        "print the verified independent set on yes");

    CommonArgs gap_args;
    int ell = 0;
    std::uint64_t node_limit = 0;
    auto* gap = app.add_subcommand("gap", "decide alpha(G) >= a(G) - ell");
    add_common(gap, gap_args);
    gap->add_option("--ell", ell, "allowed gap")->required()->check(CLI::NonNegativeNumber);
    gap->add_option("--limit-nodes", node_limit, "cap on cover-search branch expansions");

    CommonArgs oracle_args;
    std::string which;
    auto* oracle = app.add_subcommand("oracle", "brute-force alpha, tau or mu (small graphs)");
    add_common(oracle, oracle_args);
    oracle->add_option("--which", which, "invariant to compute")
        ->required()
        ->check(CLI::IsMember({"alpha", "tau", "mu"}));

    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    bool gen_json = false;
    auto* gen = app.add_subcommand("gen", "write a seeded Erdos-Renyi graph as an edge list");
    gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--p", gen_p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("output", gen_output, "output file")->required();
    gen->add_flag("--json", gen_json, "emit a single JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*anni) return run_anni(anni_args);
        if (*recognize) return run_recognize(rec_args, emit_certificate);
        if (*gap) return run_gap(gap_args, ell, node_limit);
        if (*oracle) return run_oracle(oracle_args, which);
        if (*gen) return run_gen(gen_n, gen_p, gen_seed, gen_output, gen_json);
    } catch (const annirec::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const annirec::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
