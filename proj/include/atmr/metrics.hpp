#pragma once

#include "atmr/core.hpp"
#include "atmr/rng.hpp"

#include <optional>
#include <vector>

namespace atmr {

// Indicator values for one final population. igd and hv are absent exactly
// when the population holds no feasible solution.
struct MetricReport {
    std::optional<double> igd;
    std::optional<double> hv;
    std::optional<Vector> hv_reference;  // recorded for auditability
    double feasible_ratio = 0.0;
    int n_points = 0;  // feasible points scored
};

// Mean over the reference set of the Euclidean distance to the nearest
// approximation point. Both sets must be nonempty.
double igd(const std::vector<Vector>& approx, const std::vector<Vector>& reference);

// Exact Lebesgue measure of the union of boxes [p, ref_point] over the
// points that weakly dominate ref_point (others are ignored), for two or
// three objectives. Throws std::runtime_error for more than three.
double hypervolume(const std::vector<Vector>& points, const Vector& ref_point);

// Monte Carlo estimate over the box [componentwise min of points, ref_point]
// used as the oracle for the exact sweeps.
double hv_monte_carlo(const std::vector<Vector>& points, const Vector& ref_point,
                      std::int64_t samples, Rng& rng);

// Scores the feasible members of a final population against a reference
// front: IGD in raw objective space and HV against the front's componentwise
// nadir scaled by 1.1.
MetricReport evaluate_final_population(const Population& population,
                                       const std::vector<Vector>& reference_front);

}  // namespace atmr
