#ifndef LINCOM_RECORDS_HPP
#define LINCOM_RECORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lincom {

enum class Variant { lincom, initvc_only, min_gain, max_gain };

const char* variant_name(Variant v);
// Throws std::invalid_argument on unknown names.
Variant variant_from_name(const std::string& name);

// One solver run (or one aggregate row, where seed is the seed count).
struct RunRecord {
    std::string instance_name;
    Variant variant = Variant::lincom;
    std::int64_t seed = 0;
    double cutoff_seconds = 0.0;
    std::int64_t cover_size_min = 0;
    double cover_size_avg = 0.0;
    bool optimal_guaranteed = false;
    std::int64_t steps = 0;
    double elapsed_seconds = 0.0;
    std::map<std::string, std::int64_t> op_counters; // ordered => stable columns
};

enum class RecordFormat { csv, json_lines };

// CSV: fixed columns instance,variant,seed,cutoff,cmin,cavg,optimal,steps,
// elapsed then counter:<name> columns (sorted union over all records).
// JSONL: one object per record with the same field names.
std::string emit_records(const std::vector<RunRecord>& records, RecordFormat format);

} // namespace lincom

#endif
