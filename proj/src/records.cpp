#include "records.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace lincom {
namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

} // namespace

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::lincom: return "lincom";
    case Variant::initvc_only: return "initvc-only";
    case Variant::min_gain: return "min-gain";
    case Variant::max_gain: return "max-gain";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "lincom") return Variant::lincom;
    if (name == "initvc-only") return Variant::initvc_only;
    if (name == "min-gain") return Variant::min_gain;
    if (name == "max-gain") return Variant::max_gain;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

std::string emit_records(const std::vector<RunRecord>& records, RecordFormat format) {
    if (format == RecordFormat::json_lines) {
        std::string out;
        for (const auto& r : records) {
            nlohmann::json j{{"instance", r.instance_name},
                             {"variant", variant_name(r.variant)},
                             {"seed", r.seed},
                             {"cutoff", r.cutoff_seconds},
                             {"cmin", r.cover_size_min},
                             {"cavg", r.cover_size_avg},
                             {"optimal", r.optimal_guaranteed},
                             {"steps", r.steps},
                             {"elapsed", r.elapsed_seconds}};
            nlohmann::json counters(nlohmann::json::value_t::object);
            for (const auto& [k, v] : r.op_counters) counters[k] = v;
            j["counters"] = std::move(counters);
            out += j.dump();
            out += '\n';
        }
        return out;
    }

    std::set<std::string> counter_names;
    for (const auto& r : records)
        for (const auto& [k, v] : r.op_counters) counter_names.insert(k);

    std::string out = "instance,variant,seed,cutoff,cmin,cavg,optimal,steps,elapsed";
    for (const auto& name : counter_names) out += ",counter:" + name;
    out += '\n';
    for (const auto& r : records) {
        out += r.instance_name;
        out += ',';
        out += variant_name(r.variant);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += fmt_double(r.cutoff_seconds);
        out += ',';
        out += std::to_string(r.cover_size_min);
        out += ',';
        out += fmt_double(r.cover_size_avg);
        out += ',';
        out += r.optimal_guaranteed ? "true" : "false";
        out += ',';
        out += std::to_string(r.steps);
        out += ',';
        out += fmt_double(r.elapsed_seconds);
        for (const auto& name : counter_names) {
            auto it = r.op_counters.find(name);
            out += ',';
            out += std::to_string(it == r.op_counters.end() ? 0 : it->second);
        }
        out += '\n';
    }
    return out;
}

} // namespace lincom
