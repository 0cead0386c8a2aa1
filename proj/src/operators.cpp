#include "atmr/operators.hpp"

#include "atmr/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atmr {

namespace detail {

std::pair<double, double> sbx_variable(double y1, double y2, double lower, double upper,
                                       double u, double eta) {
    const double dy = y2 - y1;
    const double exponent = 1.0 / (eta + 1.0);

    double beta = 1.0 + 2.0 * (y1 - lower) / dy;
    double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    double betaq;
    if (u <= 1.0 / alpha) {
        betaq = std::pow(u * alpha, exponent);
    } else {
        betaq = std::pow(1.0 / (2.0 - u * alpha), exponent);
    }
    const double c1 = 0.5 * (y1 + y2 - betaq * dy);

    beta = 1.0 + 2.0 * (upper - y2) / dy;
    alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    if (u <= 1.0 / alpha) {
        betaq = std::pow(u * alpha, exponent);
    } else {
        betaq = std::pow(1.0 / (2.0 - u * alpha), exponent);
    }
    const double c2 = 0.5 * (y1 + y2 + betaq * dy);

    return {c1, c2};
}

}  // namespace detail

std::pair<Vector, Vector> sbx(const Vector& parent1, const Vector& parent2, const Vector& lower,
                              const Vector& upper, double crossover_prob, double eta, Rng& rng) {
    if (parent1.size() != parent2.size() || parent1.size() != lower.size() ||
        parent1.size() != upper.size()) {
        throw std::invalid_argument("sbx: dimension mismatch");
    }
    Vector child1 = parent1;
    Vector child2 = parent2;
    if (rng.uniform() > crossover_prob) {
        return {child1, child2};
    }
    constexpr double kMinGap = 1e-14;
    for (Eigen::Index j = 0; j < parent1.size(); ++j) {
        if (rng.uniform() > 0.5) {
            continue;
        }
        const double a = parent1[j];
        const double b = parent2[j];
        if (std::abs(a - b) <= kMinGap) {
            continue;
        }
        const double y1 = std::min(a, b);
        const double y2 = std::max(a, b);
        const double u = rng.uniform();
        auto [c1, c2] = detail::sbx_variable(y1, y2, lower[j], upper[j], u, eta);
        c1 = std::clamp(c1, lower[j], upper[j]);
        c2 = std::clamp(c2, lower[j], upper[j]);
        if (rng.coin()) {
            std::swap(c1, c2);
        }
        child1[j] = c1;
        child2[j] = c2;
    }
    return {child1, child2};
}

Vector polynomial_mutation(const Vector& x, const Vector& lower, const Vector& upper,
                           double mutation_prob, double eta, Rng& rng) {
    if (x.size() != lower.size() || x.size() != upper.size()) {
        throw std::invalid_argument("polynomial_mutation: dimension mismatch");
    }
    Vector y = x;
    const double exponent = 1.0 / (eta + 1.0);
    for (Eigen::Index j = 0; j < y.size(); ++j) {
        if (rng.uniform() > mutation_prob) {
            continue;
        }
        const double lo = lower[j];
        const double hi = upper[j];
        const double range = hi - lo;
        if (!(range > 0.0)) {
            continue;
        }
        const double v = y[j];
        const double d1 = (v - lo) / range;
        const double d2 = (hi - v) / range;
        const double u = rng.uniform();
        double dq;
        if (u <= 0.5) {
            const double base = 1.0 - d1;
            const double value = 2.0 * u + (1.0 - 2.0 * u) * std::pow(base, eta + 1.0);
            dq = std::pow(value, exponent) - 1.0;
        } else {
            const double base = 1.0 - d2;
            const double value = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(base, eta + 1.0);
            dq = 1.0 - std::pow(value, exponent);
        }
        y[j] = std::clamp(v + dq * range, lo, hi);
    }
    return y;
}

namespace {

// Index of the winner between a and b under the lower-violation rule.
int by_violation(const Population& pop, int a, int b, Rng& rng) {
    if (pop[a].violation < pop[b].violation) return a;
    if (pop[b].violation < pop[a].violation) return b;
    return rng.coin() ? a : b;
}

int by_diversity(const std::vector<double>& diversity, int a, int b, Rng& rng) {
    if (diversity[a] > diversity[b]) return a;
    if (diversity[b] > diversity[a]) return b;
    return rng.coin() ? a : b;
}

int infeasible_rule(const Population& pop, const std::vector<double>& diversity, int a, int b,
                    Rng& rng) {
    if (rng.coin()) {
        return by_violation(pop, a, b, rng);
    }
    return by_diversity(diversity, a, b, rng);
}

int feasible_rule(const Population& pop, const std::vector<double>& diversity, int a, int b,
                  Rng& rng) {
    if (dominates(pop[a].objectives, pop[b].objectives)) return a;
    if (dominates(pop[b].objectives, pop[a].objectives)) return b;
    return by_diversity(diversity, a, b, rng);
}

}  // namespace

Population mating_selection(const Population& population, int count, Phase phase,
                            const std::vector<double>& diversity, Rng& rng) {
    const int n = static_cast<int>(population.size());
    if (n < 2) {
        throw std::invalid_argument("mating_selection: need at least two candidates");
    }
    if (diversity.size() != population.size()) {
        throw std::invalid_argument("mating_selection: diversity size mismatch");
    }
    if (count < 1) {
        throw std::invalid_argument("mating_selection: count must be positive");
    }

    Population parents;
    parents.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int a = static_cast<int>(rng.index(n));
        int b = static_cast<int>(rng.index(n - 1));
        if (b >= a) {
            ++b;
        }
        int winner;
        switch (phase) {
            case Phase::Infeasible:
                winner = infeasible_rule(population, diversity, a, b, rng);
                break;
            case Phase::Feasible:
                winner = feasible_rule(population, diversity, a, b, rng);
                break;
            case Phase::SemiFeasible:
                winner = i < count / 2 ? infeasible_rule(population, diversity, a, b, rng)
                                       : feasible_rule(population, diversity, a, b, rng);
                break;
            default:
                throw std::invalid_argument("mating_selection: unknown phase");
        }
        parents.push_back(population[winner]);
    }
    return parents;
}

}  // namespace atmr
