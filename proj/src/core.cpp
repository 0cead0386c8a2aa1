#include "atmr/core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace atmr {

void validate(const AlgorithmConfig& config) {
    if (config.population_size < 4 || config.population_size % 2 != 0) {
        throw std::invalid_argument("population_size must be even and at least 4, got " +
                                    std::to_string(config.population_size));
    }
    if (config.max_evaluations < config.population_size) {
        throw std::invalid_argument("max_evaluations must be at least population_size");
    }
    if (!(config.delta > 0.0)) {
        throw std::invalid_argument("delta must be positive");
    }
    if (!(config.crossover_prob >= 0.0 && config.crossover_prob <= 1.0)) {
        throw std::invalid_argument("crossover_prob must lie in [0, 1]");
    }
    if (!(config.mutation_prob >= 0.0 && config.mutation_prob <= 1.0)) {
        throw std::invalid_argument("mutation_prob must lie in [0, 1]");
    }
    if (!(config.eta_crossover >= 0.0) || !(config.eta_mutation >= 0.0)) {
        throw std::invalid_argument("distribution indices must be non-negative");
    }
}

AlgorithmConfig make_default_config(const ProblemDefinition& problem, std::uint64_t seed) {
    AlgorithmConfig config;
    config.mutation_prob = 1.0 / static_cast<double>(problem.dimension);
    config.seed = seed;
    return config;
}

double constraint_violation(const Vector& inequalities, const Vector& equalities, double delta) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("delta must be positive");
    }
    double total = 0.0;
    for (Eigen::Index j = 0; j < inequalities.size(); ++j) {
        const double v = inequalities[j];
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "inequality constraint " << j << " evaluated to a non-finite value";
            throw std::runtime_error(msg.str());
        }
        total += std::max(0.0, v);
    }
    for (Eigen::Index j = 0; j < equalities.size(); ++j) {
        const double v = equalities[j];
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "equality constraint " << j << " evaluated to a non-finite value";
            throw std::runtime_error(msg.str());
        }
        total += std::max(0.0, std::abs(v) - delta);
    }
    return total;
}

Solution evaluate(const ProblemDefinition& problem, const Vector& x, double delta,
                  std::int64_t& eval_count) {
    if (x.size() != problem.dimension) {
        std::ostringstream msg;
        msg << "decision vector has length " << x.size() << ", expected " << problem.dimension;
        throw std::invalid_argument(msg.str());
    }
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        if (!(x[j] >= problem.lower[j] && x[j] <= problem.upper[j])) {
            std::ostringstream msg;
            msg << "decision variable " << j << " = " << x[j] << " is outside ["
                << problem.lower[j] << ", " << problem.upper[j] << "]";
            throw std::invalid_argument(msg.str());
        }
    }

    EvalOutput out = problem.evaluator(x);
    if (out.objectives.size() != problem.num_objectives) {
        std::ostringstream msg;
        msg << "evaluator returned " << out.objectives.size() << " objectives, expected "
            << problem.num_objectives;
        throw std::runtime_error(msg.str());
    }
    if (out.inequalities.size() != problem.num_inequalities) {
        std::ostringstream msg;
        msg << "evaluator returned " << out.inequalities.size()
            << " inequality values, expected " << problem.num_inequalities;
        throw std::runtime_error(msg.str());
    }
    if (out.equalities.size() != problem.num_equalities) {
        std::ostringstream msg;
        msg << "evaluator returned " << out.equalities.size() << " equality values, expected "
            << problem.num_equalities;
        throw std::runtime_error(msg.str());
    }

    Solution s;
    s.x = x;
    s.objectives = std::move(out.objectives);
    s.inequalities = std::move(out.inequalities);
    s.equalities = std::move(out.equalities);
    s.violation = constraint_violation(s.inequalities, s.equalities, delta);
    ++eval_count;
    return s;
}

Vector transformed_objectives(const Solution& s) {
    Vector t(s.objectives.size() + 1);
    t.head(s.objectives.size()) = s.objectives;
    t[s.objectives.size()] = s.violation;
    return t;
}

}  // namespace atmr
