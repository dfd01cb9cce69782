#ifndef LINCOM_BENCH_HPP
#define LINCOM_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "records.hpp"

namespace lincom {

struct SuiteConfig {
    std::vector<std::string> instance_paths;
    Variant variant = Variant::lincom;
    std::int64_t seed_lo = 1;
    std::int64_t seed_hi = 1;
    double cutoff_seconds = 1000.0;
    std::optional<std::int64_t> max_steps;
    bool deterministic_ties = false;
    int jobs = 1;
    std::string baseline_csv_path; // optional: adds the delta column
    std::string solutions_dir;     // optional: best cover per instance
};

struct AggregateRow {
    std::string instance;
    Variant variant = Variant::lincom;
    std::int64_t seed_count = 0;
    std::int64_t cmin = 0;
    double cavg = 0.0;
    bool optimal_all = false; // every seed certified optimal
    bool failed = false;      // instance unreadable; error holds the reason
    std::string error;
    std::optional<std::int64_t> delta; // baseline cmin - our cmin (positive = we win)
};

struct SuiteResult {
    std::vector<RunRecord> records; // per (instance, seed), in config order
    std::vector<AggregateRow> aggregates;
};

// One record per (instance, seed). Unreadable instances mark their aggregate
// row failed and the suite continues. Runs are dispatched to `jobs` workers;
// results are merged by (instance, seed) so the output order is fixed.
SuiteResult run_suite(const SuiteConfig& config);

std::string format_aggregate_table(const std::vector<AggregateRow>& rows);

struct VerifyResult {
    bool valid = false;
    EdgeId first_violated = -1; // lowest uncovered edge id when invalid
};

// Independent O(|E|) check. Ids out of [0, |V|) raise std::invalid_argument.
VerifyResult verify_cover(const Graph& g, const std::vector<VertexId>& cover);

// Solution files: `s vc <size> <optimal|unknown>` then one 1-based `v <id>`
// per vertex. parse returns 0-based ids.
std::string format_solution(const std::vector<VertexId>& cover, bool optimal);
std::vector<VertexId> parse_solution_file(const std::string& path);

} // namespace lincom

#endif
