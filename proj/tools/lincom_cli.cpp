// Command-line driver: instances in, aggregate table and per-run records out.
// Talks to the solver strictly through the public C interface.
#include "CLI11.hpp"
#include "lincom.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// "a..b" or a single "n"
bool parse_seed_range(const std::string& text, int64_t& lo, int64_t& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

int die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

int run_verify(const std::string& instance, const std::string& cover_path) {
    lincom_graph* graph = nullptr;
    if (lincom_graph_from_dimacs_file(instance.c_str(), &graph) != LINCOM_OK)
        return die(lincom_last_error());
    int32_t* vertices = nullptr;
    int64_t count = 0;
    if (lincom_read_solution_file(cover_path.c_str(), &vertices, &count) != LINCOM_OK) {
        lincom_graph_destroy(graph);
        return die(lincom_last_error());
    }
    int valid = 0;
    int32_t u = -1, v = -1;
    lincom_status status = lincom_verify_cover(graph, vertices, count, &valid, &u, &v);
    lincom_free_vertices(vertices);
    lincom_graph_destroy(graph);
    if (status != LINCOM_OK) return die(lincom_last_error());
    if (valid) {
        std::cout << "valid cover (" << count << " vertices)\n";
        return 0;
    }
    std::cout << "invalid: edge (" << (u + 1) << "," << (v + 1) << ") uncovered\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum vertex cover solver"};

    std::vector<std::string> instances;
    std::string variant = "lincom";
    std::string seeds = "1";
    double cutoff = 1000.0;
    int64_t max_steps = -1;
    std::string tie_break = "random";
    std::string baseline;
    std::string out_path;
    std::string format = "csv";
    int jobs = 1;
    std::string solutions_dir;
    std::string verify_path;

    app.add_option("-i,--instance", instances, "DIMACS instance file (repeatable)")
        ->required();
    app.add_option("--variant", variant, "solver variant")
        ->check(CLI::IsMember({"lincom", "initvc-only", "min-gain", "max-gain"}))
        ->capture_default_str();
    app.add_option("--seeds", seeds, "seed or inclusive range a..b")
        ->capture_default_str();
    app.add_option("--cutoff", cutoff, "wall-clock budget per run, seconds")
        ->capture_default_str();
    app.add_option("--max-steps", max_steps, "exchange-step budget, -1 = unlimited")
        ->capture_default_str();
    app.add_option("--tie-break", tie_break, "tie resolution in picks")
        ->check(CLI::IsMember({"random", "deterministic"}))
        ->capture_default_str();
    app.add_option("--baseline", baseline, "baseline CSV; adds a delta column");
    app.add_option("--out", out_path, "write per-run records to this file");
    app.add_option("--format", format, "record format for --out")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
    app.add_option("--solutions", solutions_dir, "write best cover per instance here");
    app.add_option("--verify", verify_path,
                   "verify this solution file against the single instance and exit");

    CLI11_PARSE(app, argc, argv);

    if (!verify_path.empty()) {
        if (instances.size() != 1) return die("--verify needs exactly one --instance");
        return run_verify(instances[0], verify_path);
    }

    int64_t seed_lo = 0, seed_hi = 0;
    if (!parse_seed_range(seeds, seed_lo, seed_hi)) return die("bad --seeds value: " + seeds);

    std::vector<const char*> paths;
    paths.reserve(instances.size());
    for (const std::string& path : instances) paths.push_back(path.c_str());

    lincom_suite_options opt;
    lincom_suite_options_init(&opt);
    opt.instance_paths = paths.data();
    opt.instance_count = paths.size();
    opt.variant = variant.c_str();
    opt.seed_lo = seed_lo;
    opt.seed_hi = seed_hi;
    opt.cutoff_seconds = cutoff;
    opt.max_steps = max_steps;
    opt.deterministic_ties = tie_break == "deterministic" ? 1 : 0;
    opt.jobs = jobs;
    if (!baseline.empty()) opt.baseline_csv = baseline.c_str();
    if (!solutions_dir.empty()) opt.solutions_dir = solutions_dir.c_str();
    opt.emit_jsonl = format == "jsonl" ? 1 : 0;

    char* records = nullptr;
    char* table = nullptr;
    int any_failed = 0;
    char** want_records = out_path.empty() ? nullptr : &records;
    if (lincom_run_suite(&opt, want_records, &table, &any_failed) != LINCOM_OK)
        return die(lincom_last_error());

    std::cout << table;
    lincom_free_string(table);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            lincom_free_string(records);
            return die("cannot write " + out_path);
        }
        out << records;
        lincom_free_string(records);
    }
    return any_failed ? 1 : 0;
}
