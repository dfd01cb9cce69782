#ifndef LINCOM_REDUCTIONS_HPP
#define LINCOM_REDUCTIONS_HPP

#include <vector>

#include "solver_state.hpp"

namespace lincom {

// One-shot memo per construction run. A gain-2 vertex whose rule check failed
// can never become applicable again while the cover only grows: its gain can
// only drop (leaving gain-2 for good), and while it stays at 2 its pair of
// uncovered neighbors is frozen. So failed checks are cached and skipped.
struct RuleMemo {
    std::vector<char> triangle_checked;
    std::vector<char> quadrilateral_checked;
    explicit RuleMemo(int n) : triangle_checked(n, 0), quadrilateral_checked(n, 0) {}
};

// Each routine runs its rule to fixpoint and returns how many vertices it
// added to the cover. With mark_fixed set, every added vertex is flagged as
// permanently fixed (a max-gain pick has not happened yet, so the addition is
// justified by a reduction alone).

// gain(v) = 2, uncovered-neighbor pair {n1,n2} adjacent -> add n1 and n2.
int apply_triangle_rule_to_fixpoint(SolverState& st, RuleMemo& memo, bool mark_fixed);

// u != v, gain 2 each, same uncovered pair {n1,n2}, pair non-adjacent
// -> add n1 and n2.
int apply_quadrilateral_rule_to_fixpoint(SolverState& st, RuleMemo& memo, bool mark_fixed);

// gain(v) = 1 -> add the other endpoint of v's single uncovered edge.
int apply_degree1_rule_to_fixpoint(SolverState& st, bool mark_fixed);

} // namespace lincom

#endif
