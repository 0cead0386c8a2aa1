#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace atmr {

using Vector = Eigen::VectorXd;

// Raw output of one evaluation of a problem's defining functions.
struct EvalOutput {
    Vector objectives;    // length m
    Vector inequalities;  // length num_inequalities, feasible when <= 0
    Vector equalities;    // length num_equalities, feasible when == 0 (relaxed by delta)
};

using Evaluator = std::function<EvalOutput(const Vector&)>;

// A box-bounded constrained multiobjective minimization problem.
// The evaluator must be a pure function of x and safe to call concurrently.
struct ProblemDefinition {
    std::string name;
    int num_objectives = 0;
    int dimension = 0;
    int num_inequalities = 0;
    int num_equalities = 0;
    Vector lower;
    Vector upper;
    Evaluator evaluator;
};

// An evaluated point. Instances are treated as immutable once built:
// selection and variation always construct new solutions.
struct Solution {
    Vector x;
    Vector objectives;
    Vector inequalities;
    Vector equalities;
    double violation = 0.0;  // aggregate constraint violation, 0 iff feasible

    bool feasible() const { return violation == 0.0; }
};

using Population = std::vector<Solution>;

struct AlgorithmConfig {
    int population_size = 100;     // even, >= 4
    std::int64_t max_evaluations = 20000;
    double delta = 1e-4;           // equality-constraint relaxation, > 0
    double crossover_prob = 1.0;
    double mutation_prob = 0.1;    // per-variable
    double eta_crossover = 20.0;
    double eta_mutation = 20.0;
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument when the config violates its invariants
// (population size even and >= 4, budget >= population size, delta > 0,
// probabilities in [0, 1], distribution indices >= 0).
void validate(const AlgorithmConfig& config);

// Default settings for a problem: mutation probability 1 / dimension.
AlgorithmConfig make_default_config(const ProblemDefinition& problem, std::uint64_t seed);

// Aggregate violation: sum over max(0, g_j) for inequalities and
// max(0, |h_j| - delta) for equalities. Zero iff the point is feasible.
// Throws std::invalid_argument for delta <= 0 and std::runtime_error when a
// constraint value is non-finite (the message names the offending index).
double constraint_violation(const Vector& inequalities, const Vector& equalities, double delta);

// Evaluates the problem at x, increments eval_count by one, and returns a
// fully populated Solution. Throws std::invalid_argument when x is outside
// the box bounds or has the wrong length, and std::runtime_error when the
// evaluator output does not match the declared sizes.
Solution evaluate(const ProblemDefinition& problem, const Vector& x, double delta,
                  std::int64_t& eval_count);

// The (m+1)-dimensional vector (f_1, ..., f_m, violation) used wherever
// search happens in the violation-augmented objective space.
Vector transformed_objectives(const Solution& s);

}  // namespace atmr
