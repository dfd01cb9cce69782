#include "lincom.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bench.hpp"
#include "construct.hpp"
#include "dimacs.hpp"
#include "graph.hpp"
#include "local_search.hpp"
#include "records.hpp"

using namespace lincom;

struct lincom_graph {
    Graph g;
};

struct lincom_result {
    std::vector<std::int32_t> cover;
    bool optimal = false;
    std::int64_t steps = 0;
    double elapsed_seconds = 0.0;
    std::vector<std::pair<std::string, std::int64_t>> counters; // sorted by name
};

namespace {

thread_local std::string g_last_error;

lincom_status fail(lincom_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

lincom_status from_exception() {
    try {
        throw;
    } catch (const DimacsParseError& e) {
        return fail(LINCOM_ERR_PARSE, e.what());
    } catch (const GraphBuildError& e) {
        return fail(LINCOM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LINCOM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return fail(LINCOM_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LINCOM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LINCOM_ERR_IO, e.what());
    } catch (...) {
        return fail(LINCOM_ERR_INTERNAL, "unknown error");
    }
}

char* copy_to_heap(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

Variant parse_variant(const char* name) {
    return variant_from_name(name ? name : "lincom");
}

lincom_result* make_result(std::vector<VertexId> cover, bool optimal, std::int64_t steps,
                           double elapsed, const Counters& counters) {
    auto* r = new lincom_result;
    r->cover.assign(cover.begin(), cover.end());
    r->optimal = optimal;
    r->steps = steps;
    r->elapsed_seconds = elapsed;
    for (auto& [name, value] : counters.as_map()) r->counters.emplace_back(name, value);
    return r;
}

} // namespace

extern "C" {

const char* lincom_status_name(lincom_status status) {
    switch (status) {
        case LINCOM_OK: return "ok";
        case LINCOM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LINCOM_ERR_PARSE: return "parse error";
        case LINCOM_ERR_IO: return "io error";
        case LINCOM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lincom_last_error(void) { return g_last_error.c_str(); }

lincom_status lincom_graph_from_edges(const int32_t* endpoints, int64_t edge_count,
                                      int32_t vertex_count, lincom_graph** out) {
    if (!out || (edge_count > 0 && !endpoints))
        return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(static_cast<std::size_t>(edge_count));
        for (int64_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new lincom_graph{Graph::from_edges(edges, vertex_count)};
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

lincom_status lincom_graph_from_dimacs_file(const char* path, lincom_graph** out) {
    if (!out || !path) return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        *out = new lincom_graph{parse_dimacs_file(path).graph};
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

lincom_status lincom_graph_from_dimacs_string(const char* text, lincom_graph** out) {
    if (!out || !text) return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        *out = new lincom_graph{parse_dimacs_string(text).graph};
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

lincom_status lincom_graph_random(int32_t vertex_count, double edge_prob, uint64_t seed,
                                  lincom_graph** out) {
    if (!out) return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        *out = new lincom_graph{Graph::random(vertex_count, edge_prob, seed)};
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

void lincom_graph_destroy(lincom_graph* graph) { delete graph; }

int32_t lincom_graph_vertex_count(const lincom_graph* graph) {
    return graph ? graph->g.vertex_count() : 0;
}
int64_t lincom_graph_edge_count(const lincom_graph* graph) {
    return graph ? graph->g.edge_count() : 0;
}
int32_t lincom_graph_max_degree(const lincom_graph* graph) {
    return graph ? graph->g.max_degree() : 0;
}
double lincom_graph_avg_degree(const lincom_graph* graph) {
    return graph ? graph->g.avg_degree() : 0.0;
}

void lincom_options_init(lincom_options* options) {
    if (!options) return;
    options->variant = "lincom";
    options->seed = 1;
    options->cutoff_seconds = 1000.0;
    options->max_steps = -1;
    options->deterministic_ties = 0;
}

lincom_status lincom_solve(const lincom_graph* graph, const lincom_options* options,
                           lincom_result** out) {
    if (!graph || !out) return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    lincom_options defaults;
    lincom_options_init(&defaults);
    const lincom_options& opt = options ? *options : defaults;
    try {
        Variant variant = parse_variant(opt.variant);
        bool det = opt.deterministic_ties != 0;
        if (variant == Variant::lincom) {
            SolveConfig cfg;
            cfg.seed = opt.seed;
            cfg.cutoff_seconds = opt.cutoff_seconds > 0 ? opt.cutoff_seconds : 1000.0;
            if (opt.max_steps >= 0) cfg.max_steps = opt.max_steps;
            cfg.deterministic_ties = det;
            SolveOutcome so = solve(graph->g, cfg);
            *out = make_result(std::move(so.best_cover), so.optimal_guaranteed, so.steps,
                               so.elapsed_seconds, so.counters);
        } else {
            auto t0 = std::chrono::steady_clock::now();
            CoverResult cr;
            switch (variant) {
                case Variant::initvc_only: cr = init_vc(graph->g, opt.seed, det); break;
                case Variant::min_gain: cr = min_gain_construct_vc(graph->g, opt.seed, det); break;
                default: cr = max_gain_construct_vc(graph->g, opt.seed, det); break;
            }
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0).count();
            *out = make_result(std::move(cr.cover), cr.optimal_guaranteed, 0, elapsed,
                               cr.counters);
        }
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

void lincom_result_destroy(lincom_result* result) { delete result; }

int64_t lincom_result_cover_size(const lincom_result* result) {
    return result ? static_cast<int64_t>(result->cover.size()) : 0;
}
const int32_t* lincom_result_cover(const lincom_result* result) {
    return result ? result->cover.data() : nullptr;
}
int lincom_result_optimal(const lincom_result* result) {
    return result && result->optimal ? 1 : 0;
}
int64_t lincom_result_steps(const lincom_result* result) { return result ? result->steps : 0; }
double lincom_result_elapsed_seconds(const lincom_result* result) {
    return result ? result->elapsed_seconds : 0.0;
}

size_t lincom_result_counter_count(const lincom_result* result) {
    return result ? result->counters.size() : 0;
}

lincom_status lincom_result_counter_at(const lincom_result* result, size_t index,
                                       const char** name_out, int64_t* value_out) {
    if (!result || index >= result->counters.size())
        return fail(LINCOM_ERR_INVALID_ARGUMENT, "counter index out of range");
    if (name_out) *name_out = result->counters[index].first.c_str();
    if (value_out) *value_out = result->counters[index].second;
    return LINCOM_OK;
}

int64_t lincom_result_counter(const lincom_result* result, const char* name) {
    if (!result || !name) return -1;
    for (const auto& [counter_name, value] : result->counters)
        if (counter_name == name) return value;
    return -1;
}

lincom_status lincom_verify_cover(const lincom_graph* graph, const int32_t* vertices,
                                  int64_t count, int* valid_out, int32_t* fail_u,
                                  int32_t* fail_v) {
    if (!graph || !valid_out || (count > 0 && !vertices))
        return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        std::vector<VertexId> cover(vertices, vertices + count);
        VerifyResult v = verify_cover(graph->g, cover);
        *valid_out = v.valid ? 1 : 0;
        if (!v.valid) {
            auto [eu, ev] = graph->g.edge(v.first_violated);
            if (fail_u) *fail_u = eu;
            if (fail_v) *fail_v = ev;
        }
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

lincom_status lincom_write_solution_file(const char* path, const int32_t* vertices,
                                         int64_t count, int optimal) {
    if (!path || (count > 0 && !vertices))
        return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        std::vector<VertexId> cover(vertices, vertices + count);
        std::ofstream out(path);
        if (!out) return fail(LINCOM_ERR_IO, std::string("cannot write ") + path);
        out << format_solution(cover, optimal != 0);
        return out ? LINCOM_OK : fail(LINCOM_ERR_IO, std::string("short write to ") + path);
    } catch (...) {
        return from_exception();
    }
}

lincom_status lincom_read_solution_file(const char* path, int32_t** vertices_out,
                                        int64_t* count_out) {
    if (!path || !vertices_out || !count_out)
        return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        std::vector<VertexId> cover = parse_solution_file(path);
        auto* raw = static_cast<int32_t*>(std::malloc(sizeof(int32_t) * std::max<std::size_t>(cover.size(), 1)));
        if (!raw) throw std::bad_alloc();
        std::memcpy(raw, cover.data(), sizeof(int32_t) * cover.size());
        *vertices_out = raw;
        *count_out = static_cast<int64_t>(cover.size());
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

void lincom_free_vertices(int32_t* vertices) { std::free(vertices); }

void lincom_suite_options_init(lincom_suite_options* options) {
    if (!options) return;
    options->instance_paths = nullptr;
    options->instance_count = 0;
    options->variant = "lincom";
    options->seed_lo = 1;
    options->seed_hi = 1;
    options->cutoff_seconds = 1000.0;
    options->max_steps = -1;
    options->deterministic_ties = 0;
    options->jobs = 1;
    options->baseline_csv = nullptr;
    options->solutions_dir = nullptr;
    options->emit_jsonl = 0;
}

lincom_status lincom_run_suite(const lincom_suite_options* options, char** records_out,
                               char** table_out, int* any_failed_out) {
    if (!options || (options->instance_count > 0 && !options->instance_paths))
        return fail(LINCOM_ERR_INVALID_ARGUMENT, "null pointer argument");
    try {
        SuiteConfig cfg;
        for (size_t i = 0; i < options->instance_count; ++i) {
            if (!options->instance_paths[i])
                return fail(LINCOM_ERR_INVALID_ARGUMENT, "null instance path");
            cfg.instance_paths.emplace_back(options->instance_paths[i]);
        }
        cfg.variant = parse_variant(options->variant);
        cfg.seed_lo = options->seed_lo;
        cfg.seed_hi = options->seed_hi;
        cfg.cutoff_seconds = options->cutoff_seconds > 0 ? options->cutoff_seconds : 1000.0;
        if (options->max_steps >= 0) cfg.max_steps = options->max_steps;
        cfg.deterministic_ties = options->deterministic_ties != 0;
        cfg.jobs = options->jobs;
        if (options->baseline_csv) cfg.baseline_csv_path = options->baseline_csv;
        if (options->solutions_dir) cfg.solutions_dir = options->solutions_dir;

        SuiteResult res = run_suite(cfg);
        if (records_out)
            *records_out = copy_to_heap(emit_records(
                res.records, options->emit_jsonl ? RecordFormat::json_lines : RecordFormat::csv));
        if (table_out) *table_out = copy_to_heap(format_aggregate_table(res.aggregates));
        if (any_failed_out) {
            *any_failed_out = 0;
            for (const AggregateRow& row : res.aggregates)
                if (row.failed) *any_failed_out = 1;
        }
        return LINCOM_OK;
    } catch (...) {
        return from_exception();
    }
}

void lincom_free_string(char* text) { std::free(text); }

} // extern "C"
