#pragma once

#include "atmr/core.hpp"
#include "atmr/rng.hpp"

#include <utility>
#include <vector>

namespace atmr {

// Feasibility composition of a population.
enum class Phase { Infeasible, SemiFeasible, Feasible };

namespace detail {

// Core simulated-binary-crossover recombination of one variable, exposed for
// testing. Requires y1 <= y2 with a strictly positive gap; u is the uniform
// draw in [0, 1). Returns the (low, high) children before any boundary clamp.
std::pair<double, double> sbx_variable(double y1, double y2, double lower, double upper,
                                       double u, double eta);

}  // namespace detail

// Simulated binary crossover with bounded repair. Consumes one draw for the
// crossover gate, then per recombined variable one gate draw, one contour
// draw and one swap draw. Children equal their parents when the gate fails
// or a variable's gate fails.
std::pair<Vector, Vector> sbx(const Vector& parent1, const Vector& parent2, const Vector& lower,
                              const Vector& upper, double crossover_prob, double eta, Rng& rng);

// Polynomial mutation with bounded repair; each variable mutates
// independently with probability mutation_prob.
Vector polynomial_mutation(const Vector& x, const Vector& lower, const Vector& upper,
                           double mutation_prob, double eta, Rng& rng);

// Phase-adaptive binary tournaments. Draws `count` pairs of distinct parents
// uniformly at random and resolves each by the rule of the current phase:
//   Infeasible   - fair coin chooses between the lower-violation winner and
//                  the higher-diversity winner.
//   Feasible     - Pareto dominance on the objectives, diversity on ties.
//   SemiFeasible - tournaments with index < count / 2 use the infeasible
//                  rule, the rest use the feasible rule.
// All remaining ties are resolved by coin flip. diversity must align with
// population by index.
Population mating_selection(const Population& population, int count, Phase phase,
                            const std::vector<double>& diversity, Rng& rng);

}  // namespace atmr
