#ifndef LINCOM_COUNTERS_HPP
#define LINCOM_COUNTERS_HPP

#include <cstdint>
#include <map>
#include <string>

namespace lincom {

// Operation counters: the measurable proxies for the cost bounds. Structure
// work (moves/tests/writes) is counted inside AltPartitions; the rest by the
// solver layers.
struct Counters {
    std::int64_t partition_moves = 0;  // place / score+-1 relocations
    std::int64_t boundary_tests = 0;   // region-emptiness tests during scans
    std::int64_t cell_writes = 0;      // slot + boundary-pointer writes
    std::int64_t neighbor_visits = 0;  // adjacency entries examined
    std::int64_t rule_degree1 = 0;
    std::int64_t rule_triangle = 0;
    std::int64_t rule_quadrilateral = 0;
    std::int64_t max_gain_picks = 0;
    std::int64_t redundant_removed = 0;
    std::int64_t steps = 0;

    // Total structure work: the quantity bounded by the linear-time and
    // per-step cost guarantees.
    std::int64_t structure_ops() const {
        return partition_moves + boundary_tests + neighbor_visits;
    }

    std::map<std::string, std::int64_t> as_map() const {
        return {{"partition_moves", partition_moves},
                {"boundary_tests", boundary_tests},
                {"cell_writes", cell_writes},
                {"neighbor_visits", neighbor_visits},
                {"rule_degree1", rule_degree1},
                {"rule_triangle", rule_triangle},
                {"rule_quadrilateral", rule_quadrilateral},
                {"max_gain_picks", max_gain_picks},
                {"redundant_removed", redundant_removed},
                {"steps", steps}};
    }
};

} // namespace lincom

#endif
