#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "construct.hpp"
#include "dimacs.hpp"
#include "local_search.hpp"

namespace lincom {
namespace {

std::string path_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

struct RunOutput {
    RunRecord record;
    std::vector<VertexId> cover;
    bool optimal = false;
    std::string error; // non-empty when the run itself blew up
};

RunOutput run_one(const Graph& g, const std::string& name, const SuiteConfig& cfg,
                  std::int64_t seed) {
    RunOutput out;
    RunRecord& r = out.record;
    r.instance_name = name;
    r.variant = cfg.variant;
    r.seed = seed;
    r.cutoff_seconds = cfg.cutoff_seconds;
    if (cfg.variant == Variant::lincom) {
        SolveConfig sc;
        sc.seed = static_cast<std::uint64_t>(seed);
        sc.cutoff_seconds = cfg.cutoff_seconds;
        sc.max_steps = cfg.max_steps;
        sc.deterministic_ties = cfg.deterministic_ties;
        SolveOutcome so = solve(g, sc);
        r.cover_size_min = so.best_size;
        r.cover_size_avg = static_cast<double>(so.best_size);
        r.optimal_guaranteed = so.optimal_guaranteed;
        r.steps = so.steps;
        r.elapsed_seconds = so.elapsed_seconds;
        r.op_counters = so.counters.as_map();
        out.cover = std::move(so.best_cover);
        out.optimal = so.optimal_guaranteed;
    } else {
        auto t0 = std::chrono::steady_clock::now();
        CoverResult cr;
        auto s = static_cast<std::uint64_t>(seed);
        switch (cfg.variant) {
            case Variant::initvc_only: cr = init_vc(g, s, cfg.deterministic_ties); break;
            case Variant::min_gain: cr = min_gain_construct_vc(g, s, cfg.deterministic_ties); break;
            default: cr = max_gain_construct_vc(g, s, cfg.deterministic_ties); break;
        }
        r.elapsed_seconds = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0).count();
        r.cover_size_min = static_cast<std::int64_t>(cr.cover.size());
        r.cover_size_avg = static_cast<double>(cr.cover.size());
        r.optimal_guaranteed = cr.optimal_guaranteed;
        r.steps = 0;
        r.op_counters = cr.counters.as_map();
        out.cover = std::move(cr.cover);
        out.optimal = cr.optimal_guaranteed;
    }
    return out;
}

// baseline CSV: needs an `instance` and a `cmin` column; keeps the per-name
// minimum so aggregate baselines and raw per-seed records both work.
std::map<std::string, std::int64_t> parse_baseline(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open baseline csv: " + path);
    std::map<std::string, std::int64_t> best;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty baseline csv: " + path);
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t pos = 0;
        while (true) {
            std::size_t c = s.find(',', pos);
            out.push_back(s.substr(pos, c == std::string::npos ? c : c - pos));
            if (c == std::string::npos) break;
            pos = c + 1;
        }
        return out;
    };
    std::vector<std::string> header = split(line);
    std::size_t name_col = header.size(), cmin_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "instance") name_col = i;
        if (header[i] == "cmin") cmin_col = i;
    }
    if (name_col == header.size() || cmin_col == header.size())
        throw std::runtime_error("baseline csv needs instance and cmin columns: " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells = split(line);
        if (cells.size() <= std::max(name_col, cmin_col))
            throw std::runtime_error("short baseline row: " + line);
        std::int64_t v = 0;
        const std::string& cell = cells[cmin_col];
        auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc() || p != cell.data() + cell.size())
            throw std::runtime_error("bad cmin value in baseline row: " + line);
        auto it = best.find(cells[name_col]);
        if (it == best.end() || v < it->second) best[cells[name_col]] = v;
    }
    return best;
}

struct BestCover {
    std::int64_t size = -1;
    std::int64_t seed = 0;
    bool optimal = false;
    std::vector<VertexId> cover;
};

} // namespace

SuiteResult run_suite(const SuiteConfig& config) {
    if (config.seed_hi < config.seed_lo)
        throw std::invalid_argument("empty seed range");
    SuiteResult result;
    std::int64_t n_seeds = config.seed_hi - config.seed_lo + 1;

    struct InstanceSlot {
        std::string name;
        Graph graph;
        bool failed = false;
        std::string error;
    };
    std::vector<InstanceSlot> instances(config.instance_paths.size());
    for (std::size_t i = 0; i < config.instance_paths.size(); ++i) {
        InstanceSlot& slot = instances[i];
        slot.name = path_stem(config.instance_paths[i]);
        try {
            slot.graph = parse_dimacs_file(config.instance_paths[i]).graph;
        } catch (const std::exception& e) {
            slot.failed = true;
            slot.error = e.what();
        }
    }

    struct Task {
        std::size_t instance = 0;
        std::int64_t seed = 0;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (instances[i].failed) continue;
        for (std::int64_t s = config.seed_lo; s <= config.seed_hi; ++s)
            tasks.push_back({i, s});
    }

    std::vector<RunOutput> outputs(tasks.size());
    std::vector<BestCover> best(instances.size());
    std::mutex best_mutex;
    bool keep_covers = !config.solutions_dir.empty();
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            const Task& task = tasks[t];
            try {
                outputs[t] = run_one(instances[task.instance].graph,
                                     instances[task.instance].name, config, task.seed);
            } catch (const std::exception& e) {
                outputs[t].error = e.what();
                continue;
            }
            if (keep_covers) {
                std::lock_guard<std::mutex> lock(best_mutex);
                BestCover& b = best[task.instance];
                std::int64_t size = outputs[t].record.cover_size_min;
                // lowest seed breaks ties so the file does not depend on
                // worker scheduling
                if (b.size < 0 || size < b.size ||
                    (size == b.size && task.seed < b.seed)) {
                    b.size = size;
                    b.seed = task.seed;
                    b.optimal = outputs[t].optimal;
                    b.cover = outputs[t].cover;
                }
            }
            if (!keep_covers) outputs[t].cover.clear();
        }
    };

    int jobs = std::max(1, config.jobs);
    std::size_t n_threads = std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    std::map<std::string, std::int64_t> baseline;
    if (!config.baseline_csv_path.empty()) baseline = parse_baseline(config.baseline_csv_path);

    // merge in config order: records first, then one aggregate row per instance
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        AggregateRow row;
        row.instance = instances[i].name;
        row.variant = config.variant;
        row.seed_count = n_seeds;
        if (instances[i].failed) {
            row.failed = true;
            row.error = instances[i].error;
            result.aggregates.push_back(std::move(row));
            continue;
        }
        std::int64_t cmin = 0;
        double sum = 0.0;
        bool all_opt = true;
        bool first = true;
        for (std::int64_t s = config.seed_lo; s <= config.seed_hi; ++s, ++cursor) {
            RunOutput& out = outputs[cursor];
            if (!out.error.empty()) {
                row.failed = true;
                if (row.error.empty()) row.error = out.error;
                continue;
            }
            result.records.push_back(std::move(out.record));
            const RunRecord& r = result.records.back();
            if (first || r.cover_size_min < cmin) cmin = r.cover_size_min;
            sum += static_cast<double>(r.cover_size_min);
            all_opt = all_opt && r.optimal_guaranteed;
            first = false;
        }
        if (!row.failed) {
            row.cmin = cmin;
            row.cavg = sum / static_cast<double>(n_seeds);
            row.optimal_all = all_opt;
            auto it = baseline.find(row.instance);
            if (it != baseline.end()) row.delta = it->second - cmin;
        }
        result.aggregates.push_back(std::move(row));
    }

    if (keep_covers) {
        std::filesystem::create_directories(config.solutions_dir);
        for (std::size_t i = 0; i < instances.size(); ++i) {
            if (instances[i].failed || best[i].size < 0) continue;
            std::filesystem::path out_path =
                std::filesystem::path(config.solutions_dir) / (instances[i].name + ".sol");
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path.string());
            out << format_solution(best[i].cover, best[i].optimal);
        }
    }
    return result;
}

std::string format_aggregate_table(const std::vector<AggregateRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"instance", "variant", "seeds", "cmin", "cavg", "optimal", "delta"});
    char buf[64];
    for (const AggregateRow& row : rows) {
        std::vector<std::string> line;
        line.push_back(row.instance);
        line.push_back(variant_name(row.variant));
        line.push_back(std::to_string(row.seed_count));
        if (row.failed) {
            line.push_back("-");
            line.push_back("-");
            line.push_back("FAILED");
            line.push_back("-");
        } else {
            line.push_back(std::to_string(row.cmin));
            std::snprintf(buf, sizeof buf, "%.2f", row.cavg);
            line.push_back(buf);
            line.push_back(row.optimal_all ? "yes" : "no");
            if (row.delta) {
                std::snprintf(buf, sizeof buf, "%+lld",
                              static_cast<long long>(*row.delta));
                line.push_back(buf);
            } else {
                line.push_back("-");
            }
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    std::string out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            if (c) out += "  ";
            const std::string& cell = cells[r][c];
            if (c == 0) { // left-justify names, right-justify numbers
                out += cell;
                out.append(width[c] - cell.size(), ' ');
            } else {
                out.append(width[c] - cell.size(), ' ');
                out += cell;
            }
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].failed && !rows[i].error.empty())
            out += "# " + rows[i].instance + ": " + rows[i].error + "\n";
    }
    return out;
}

VerifyResult verify_cover(const Graph& g, const std::vector<VertexId>& cover) {
    std::vector<char> in_cover(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : cover) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("cover vertex out of range");
        in_cover[static_cast<std::size_t>(v)] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!in_cover[static_cast<std::size_t>(u)] && !in_cover[static_cast<std::size_t>(v)])
            return {false, e};
    }
    return {true, -1};
}

std::string format_solution(const std::vector<VertexId>& cover, bool optimal) {
    std::string out = "s vc " + std::to_string(cover.size()) + " " +
                      (optimal ? "optimal" : "unknown") + "\n";
    for (VertexId v : cover) out += "v " + std::to_string(v + 1) + "\n";
    return out;
}

std::vector<VertexId> parse_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solution file: " + path);
    std::vector<VertexId> cover;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) continue;
        if (head == "c" || head == "s") continue;
        if (head != "v")
            throw std::runtime_error("solution line " + std::to_string(line_no) +
                                     ": expected c, s or v line");
        long long id = 0;
        while (ss >> id) {
            if (id < 1)
                throw std::runtime_error("solution line " + std::to_string(line_no) +
                                         ": vertex ids are 1-based");
            cover.push_back(static_cast<VertexId>(id - 1));
        }
        if (ss.fail() && !ss.eof())
            throw std::runtime_error("solution line " + std::to_string(line_no) +
                                     ": bad vertex id");
    }
    return cover;
}

} // namespace lincom
