#pragma once

#include "atmr/core.hpp"
#include "atmr/rng.hpp"

#include <vector>

namespace atmr {

enum class WeightOrigin { Regular, Adaptive };

// A set of weight vectors used as reference directions. For adaptive sets,
// source_index[k] names the feasible solution whose normalized objectives
// generated weight k; it is empty for regular sets.
struct WeightVectorSet {
    std::vector<Vector> weights;
    WeightOrigin origin = WeightOrigin::Regular;
    std::vector<int> source_index;
};

// Estimated ideal and nadir points of a normalization window.
struct NormalizationContext {
    Vector ideal;
    Vector nadir;
};

// Simplex lattice with the given number of divisions per objective: all
// vectors (k_1/H, ..., k_m/H) with non-negative integers summing to H, in
// lexicographic order of (k_1, ..., k_m). Size is C(H + m - 1, m - 1).
WeightVectorSet das_dennis(int num_objectives, int divisions);

// Smallest H whose lattice has at least min_count vectors.
int smallest_lattice(int num_objectives, int min_count);

// Componentwise min and max over a non-empty point set.
NormalizationContext make_context(const std::vector<Vector>& points);

// Componentwise (f - ideal) / (nadir - ideal). A coordinate whose window is
// degenerate (nadir == ideal) maps to 0.5.
Vector normalize(const Vector& f, const NormalizationContext& ctx);

// Index of the weight vector with the smallest angle to normalized_f, using
// the absolute value of the dot product. Exact angle ties are broken
// uniformly at random, and a zero-norm input is assigned uniformly at random.
int assign_to_weights(const Vector& normalized_f, const WeightVectorSet& weights, Rng& rng);

// One weight per normalized point: the point scaled to unit coordinate sum.
// A point summing to zero maps to the uniform weight (1/m, ..., 1/m).
WeightVectorSet adaptive_weights(const std::vector<Vector>& normalized_points);

}  // namespace atmr
