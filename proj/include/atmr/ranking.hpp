#pragma once

#include "atmr/core.hpp"

#include <functional>
#include <vector>

namespace atmr {

// Three-way comparison outcome used by constraint-aware comparators.
enum class Ordering { FirstBetter, SecondBetter, Tie };

// Strict Pareto dominance for minimization: a <= b in every coordinate and
// a < b in at least one. Comparisons are exact; no epsilon is applied.
// Throws std::invalid_argument when the lengths differ.
bool dominates(const Vector& a, const Vector& b);

// Constrained comparison: two infeasible solutions compare by violation, a
// feasible solution beats an infeasible one, and two feasible solutions
// compare by Pareto dominance on the objectives (Tie when incomparable).
Ordering cdp_compare(const Solution& a, const Solution& b);

// Strict partial order induced by cdp_compare (FirstBetter only).
bool cdp_dominates(const Solution& a, const Solution& b);

// Index sets of successive nondominated fronts. Every input index appears in
// exactly one front; indices within a front are in ascending input order.
struct FrontPartition {
    std::vector<std::vector<int>> fronts;
};

// Fast nondominated sort over an arbitrary strict dominance predicate.
// dom(i, j) must be irreflexive and asymmetric over the n items.
FrontPartition sort_by_dominance(int n, const std::function<bool(int, int)>& dom);

// Nondominated sort of points under Pareto dominance. All points must share
// one dimension; the input must be non-empty.
FrontPartition nondominated_sort(const std::vector<Vector>& points);

// Crowding distance of each member of a set (normally one front). Boundary
// points per objective get +infinity; interior points accumulate the
// normalized gap between their neighbours. An objective with zero range
// contributes nothing.
std::vector<double> crowding_distance(const std::vector<Vector>& members);

}  // namespace atmr
