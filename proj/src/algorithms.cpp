#include "atmr/algorithms.hpp"

#include "atmr/ranking.hpp"
#include "atmr/refpoints.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace atmr {

namespace {

std::vector<Vector> objective_vectors(const Population& pop) {
    std::vector<Vector> out;
    out.reserve(pop.size());
    for (const Solution& s : pop) {
        out.push_back(s.objectives);
    }
    return out;
}

std::vector<Vector> transformed_vectors(const Population& pop) {
    std::vector<Vector> out;
    out.reserve(pop.size());
    for (const Solution& s : pop) {
        out.push_back(transformed_objectives(s));
    }
    return out;
}

// Index of the most crowded bucket, ties uniform at random.
int most_loaded(const std::vector<std::vector<int>>& buckets, Rng& rng) {
    std::size_t best = 0;
    std::vector<int> ties;
    for (int k = 0; k < static_cast<int>(buckets.size()); ++k) {
        if (buckets[k].size() > best) {
            best = buckets[k].size();
            ties.assign(1, k);
        } else if (buckets[k].size() == best && best > 0) {
            ties.push_back(k);
        }
    }
    return ties.size() == 1 ? ties.front() : ties[rng.index(ties.size())];
}

// Position within `bucket` maximizing score, ties uniform at random.
std::size_t argmax_in_bucket(const std::vector<int>& bucket,
                             const std::vector<double>& score, Rng& rng) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> ties;
    for (std::size_t pos = 0; pos < bucket.size(); ++pos) {
        const double v = score[bucket[pos]];
        if (v > best) {
            best = v;
            ties.assign(1, pos);
        } else if (v == best) {
            ties.push_back(pos);
        }
    }
    return ties.size() == 1 ? ties.front() : ties[rng.index(ties.size())];
}

// NSGA-II environmental selection on the given objective vectors; returns
// the chosen indices in admission order.
std::vector<int> nsga2_select(const std::vector<Vector>& objectives, int target, Rng& rng) {
    FrontPartition partition = nondominated_sort(objectives);
    std::vector<int> chosen;
    chosen.reserve(target);
    for (const std::vector<int>& front : partition.fronts) {
        if (static_cast<int>(chosen.size() + front.size()) <= target) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            if (static_cast<int>(chosen.size()) == target) {
                break;
            }
            continue;
        }
        std::vector<Vector> members;
        members.reserve(front.size());
        for (int i : front) {
            members.push_back(objectives[i]);
        }
        const std::vector<double> crowding = crowding_distance(members);
        std::vector<std::pair<double, int>> order;
        order.reserve(front.size());
        for (std::size_t k = 0; k < front.size(); ++k) {
            order.emplace_back(crowding[k], front[k]);
        }
        rng.shuffle(order);
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        const int need = target - static_cast<int>(chosen.size());
        for (int k = 0; k < need; ++k) {
            chosen.push_back(order[k].second);
        }
        break;
    }
    return chosen;
}

Population gather(const Population& pop, const std::vector<int>& indices) {
    Population out;
    out.reserve(indices.size());
    for (int i : indices) {
        out.push_back(pop[i]);
    }
    return out;
}

GenerationRecord record_generation(const Population& pop, std::int64_t evaluations) {
    GenerationRecord rec;
    rec.evaluations = evaluations;
    rec.phase = classify_phase(pop);
    rec.population_size = static_cast<int>(pop.size());
    rec.best_violation = std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (const Solution& s : pop) {
        rec.feasible_count += s.feasible() ? 1 : 0;
        rec.best_violation = std::min(rec.best_violation, s.violation);
        total += s.violation;
    }
    rec.mean_violation = total / static_cast<double>(pop.size());
    return rec;
}

Population initialize(const ProblemDefinition& problem, const AlgorithmConfig& config,
                      std::int64_t& evaluations, Rng& rng) {
    Population pop;
    pop.reserve(config.population_size);
    Vector x(problem.dimension);
    for (int i = 0; i < config.population_size; ++i) {
        for (int j = 0; j < problem.dimension; ++j) {
            x[j] = rng.uniform(problem.lower[j], problem.upper[j]);
        }
        pop.push_back(evaluate(problem, x, config.delta, evaluations));
    }
    return pop;
}

Population make_offspring(const ProblemDefinition& problem, const AlgorithmConfig& config,
                          const Population& parents, std::int64_t& evaluations, Rng& rng) {
    Population offspring;
    offspring.reserve(parents.size());
    for (std::size_t i = 0; i + 1 < parents.size(); i += 2) {
        auto [c1, c2] = sbx(parents[i].x, parents[i + 1].x, problem.lower, problem.upper,
                            config.crossover_prob, config.eta_crossover, rng);
        c1 = polynomial_mutation(c1, problem.lower, problem.upper, config.mutation_prob,
                                 config.eta_mutation, rng);
        c2 = polynomial_mutation(c2, problem.lower, problem.upper, config.mutation_prob,
                                 config.eta_mutation, rng);
        offspring.push_back(evaluate(problem, c1, config.delta, evaluations));
        offspring.push_back(evaluate(problem, c2, config.delta, evaluations));
    }
    return offspring;
}

std::vector<double> mating_diversity(const Population& pop, Phase phase) {
    return phase == Phase::Infeasible ? crowding_distance(transformed_vectors(pop))
                                      : crowding_distance(objective_vectors(pop));
}

}  // namespace

Phase classify_phase(const Population& population) {
    if (population.empty()) {
        throw std::invalid_argument("classify_phase: empty population");
    }
    int feasible = 0;
    for (const Solution& s : population) {
        feasible += s.feasible() ? 1 : 0;
    }
    if (feasible == 0) {
        return Phase::Infeasible;
    }
    if (feasible == static_cast<int>(population.size())) {
        return Phase::Feasible;
    }
    return Phase::SemiFeasible;
}

Population truncate_transformed(const Population& candidates, int target, Rng& rng) {
    if (static_cast<int>(candidates.size()) < target) {
        throw std::invalid_argument("truncate_transformed: fewer candidates than target");
    }
    if (target <= 0) {
        throw std::invalid_argument("truncate_transformed: target must be positive");
    }
    FrontPartition partition = nondominated_sort(transformed_vectors(candidates));

    std::vector<int> admitted;
    admitted.reserve(target);
    std::size_t level = 0;
    while (static_cast<int>(admitted.size() + partition.fronts[level].size()) <= target) {
        const std::vector<int>& front = partition.fronts[level];
        admitted.insert(admitted.end(), front.begin(), front.end());
        if (static_cast<int>(admitted.size()) == target) {
            return gather(candidates, admitted);
        }
        ++level;
    }

    const std::vector<int>& last = partition.fronts[level];
    const int quota = target - static_cast<int>(admitted.size());

    const int m = static_cast<int>(candidates.front().objectives.size());
    const WeightVectorSet weights = das_dennis(m, smallest_lattice(m, quota));

    std::vector<Vector> last_objectives;
    last_objectives.reserve(last.size());
    for (int i : last) {
        last_objectives.push_back(candidates[i].objectives);
    }
    const NormalizationContext ctx = make_context(last_objectives);

    std::vector<std::vector<int>> buckets(weights.weights.size());
    std::vector<double> violation(candidates.size(), 0.0);
    for (int i : last) {
        violation[i] = candidates[i].violation;
        const int w = assign_to_weights(normalize(candidates[i].objectives, ctx), weights, rng);
        buckets[w].push_back(i);
    }

    int remaining = static_cast<int>(last.size());
    std::vector<char> alive(candidates.size(), 1);
    while (remaining > quota) {
        const int w = most_loaded(buckets, rng);
        const std::size_t pos = argmax_in_bucket(buckets[w], violation, rng);
        alive[buckets[w][pos]] = 0;
        buckets[w].erase(buckets[w].begin() + static_cast<std::ptrdiff_t>(pos));
        --remaining;
    }
    for (int i : last) {
        if (alive[i]) {
            admitted.push_back(i);
        }
    }
    return gather(candidates, admitted);
}

Population select_infeasible_phase(const Population& parents, const Population& offspring, int n,
                                   Rng& rng) {
    Population q = parents;
    q.insert(q.end(), offspring.begin(), offspring.end());
    if (static_cast<int>(q.size()) < n) {
        throw std::invalid_argument("select_infeasible_phase: fewer candidates than N");
    }
    for (const Solution& s : q) {
        if (s.feasible()) {
            throw std::invalid_argument(
                "select_infeasible_phase: population contains a feasible solution");
        }
    }
    return truncate_transformed(q, n, rng);
}

Population select_semifeasible_phase(const Population& parents, const Population& offspring,
                                     int n, std::int64_t evaluations, std::int64_t max_evaluations,
                                     Rng& rng) {
    Population q = parents;
    q.insert(q.end(), offspring.begin(), offspring.end());

    Population feasible;
    Population infeasible;
    for (const Solution& s : q) {
        (s.feasible() ? feasible : infeasible).push_back(s);
    }
    if (feasible.empty() || infeasible.empty()) {
        throw std::invalid_argument(
            "select_semifeasible_phase: needs both feasible and infeasible members");
    }

    Population kept_feasible = std::move(feasible);
    if (static_cast<int>(kept_feasible.size()) > n) {
        kept_feasible =
            gather(kept_feasible, nsga2_select(objective_vectors(kept_feasible), n, rng));
    }

    Population kept_infeasible = std::move(infeasible);
    if (static_cast<int>(kept_infeasible.size()) > n) {
        const bool early_stage =
            static_cast<double>(evaluations) / static_cast<double>(max_evaluations) < 0.5 ||
            static_cast<int>(kept_feasible.size()) < n;
        if (early_stage) {
            kept_infeasible = truncate_transformed(kept_infeasible, n, rng);
        } else {
            // Restrict to the infeasible members of the union's first front
            // in transformed space.
            FrontPartition partition = nondominated_sort(transformed_vectors(q));
            Population candidates;
            for (int i : partition.fronts.front()) {
                if (!q[i].feasible()) {
                    candidates.push_back(q[i]);
                }
            }
            if (static_cast<int>(candidates.size()) <= n) {
                kept_infeasible = std::move(candidates);
            } else {
                std::vector<Vector> window = objective_vectors(kept_feasible);
                {
                    std::vector<Vector> cand_objs = objective_vectors(candidates);
                    window.insert(window.end(), cand_objs.begin(), cand_objs.end());
                }
                const NormalizationContext ctx = make_context(window);

                std::vector<Vector> anchors;
                anchors.reserve(kept_feasible.size());
                for (const Solution& s : kept_feasible) {
                    anchors.push_back(normalize(s.objectives, ctx));
                }
                const WeightVectorSet weights = adaptive_weights(anchors);

                std::vector<Vector> normalized;
                normalized.reserve(candidates.size());
                for (const Solution& s : candidates) {
                    normalized.push_back(normalize(s.objectives, ctx));
                }
                std::vector<std::vector<int>> buckets(weights.weights.size());
                for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
                    buckets[assign_to_weights(normalized[i], weights, rng)].push_back(i);
                }

                int remaining = static_cast<int>(candidates.size());
                std::vector<char> alive(candidates.size(), 1);
                while (remaining > n) {
                    const int w = most_loaded(buckets, rng);
                    const Vector& anchor = anchors[weights.source_index[w]];
                    std::vector<double> distance(candidates.size(), 0.0);
                    for (int i : buckets[w]) {
                        distance[i] = (normalized[i] - anchor).norm();
                    }
                    const std::size_t pos = argmax_in_bucket(buckets[w], distance, rng);
                    alive[buckets[w][pos]] = 0;
                    buckets[w].erase(buckets[w].begin() + static_cast<std::ptrdiff_t>(pos));
                    --remaining;
                }
                kept_infeasible.clear();
                for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
                    if (alive[i]) {
                        kept_infeasible.push_back(candidates[i]);
                    }
                }
            }
        }
    }

    Population result = std::move(kept_feasible);
    result.insert(result.end(), kept_infeasible.begin(), kept_infeasible.end());
    return result;
}

Population select_feasible_phase(const Population& population, int n, Rng& rng) {
    if (static_cast<int>(population.size()) < n) {
        throw std::invalid_argument("select_feasible_phase: fewer candidates than N");
    }
    for (const Solution& s : population) {
        if (!s.feasible()) {
            throw std::invalid_argument(
                "select_feasible_phase: population contains an infeasible solution");
        }
    }
    return gather(population, nsga2_select(objective_vectors(population), n, rng));
}

RunResult run_atmr(const ProblemDefinition& problem, const AlgorithmConfig& config) {
    validate(config);
    Rng rng(config.seed);
    std::int64_t evaluations = 0;

    RunResult result;
    result.problem = problem.name;
    result.config = config;
    result.seed = config.seed;

    Population pop = initialize(problem, config, evaluations, rng);
    result.trace.push_back(record_generation(pop, evaluations));

    const int n = config.population_size;
    while (evaluations < config.max_evaluations) {
        const Phase phase = classify_phase(pop);
        const Population parents = mating_selection(pop, n, phase, mating_diversity(pop, phase), rng);
        const Population offspring = make_offspring(problem, config, parents, evaluations, rng);

        Population q = pop;
        q.insert(q.end(), offspring.begin(), offspring.end());
        switch (classify_phase(q)) {
            case Phase::Infeasible:
                pop = select_infeasible_phase(pop, offspring, n, rng);
                break;
            case Phase::SemiFeasible:
                pop = select_semifeasible_phase(pop, offspring, n, evaluations,
                                                config.max_evaluations, rng);
                break;
            case Phase::Feasible:
                pop = select_feasible_phase(q, n, rng);
                break;
        }
        result.trace.push_back(record_generation(pop, evaluations));
    }

    result.raw_final_population = pop;
    if (static_cast<int>(pop.size()) > n) {
        result.final_population = classify_phase(pop) == Phase::Feasible
                                      ? select_feasible_phase(pop, n, rng)
                                      : truncate_transformed(pop, n, rng);
    } else {
        result.final_population = pop;
    }
    return result;
}

RunResult run_nsga2_cdp(const ProblemDefinition& problem, const AlgorithmConfig& config) {
    validate(config);
    Rng rng(config.seed);
    std::int64_t evaluations = 0;

    RunResult result;
    result.problem = problem.name;
    result.config = config;
    result.seed = config.seed;

    Population pop = initialize(problem, config, evaluations, rng);
    result.trace.push_back(record_generation(pop, evaluations));

    const int n = config.population_size;
    while (evaluations < config.max_evaluations) {
        const std::vector<double> diversity = crowding_distance(objective_vectors(pop));
        Population parents;
        parents.reserve(n);
        for (int i = 0; i < n; ++i) {
            const int a = static_cast<int>(rng.index(pop.size()));
            int b = static_cast<int>(rng.index(pop.size() - 1));
            if (b >= a) {
                ++b;
            }
            int winner;
            switch (cdp_compare(pop[a], pop[b])) {
                case Ordering::FirstBetter:
                    winner = a;
                    break;
                case Ordering::SecondBetter:
                    winner = b;
                    break;
                default:
                    if (diversity[a] > diversity[b]) {
                        winner = a;
                    } else if (diversity[b] > diversity[a]) {
                        winner = b;
                    } else {
                        winner = rng.coin() ? a : b;
                    }
            }
            parents.push_back(pop[winner]);
        }
        const Population offspring = make_offspring(problem, config, parents, evaluations, rng);

        Population q = pop;
        q.insert(q.end(), offspring.begin(), offspring.end());
        FrontPartition partition = sort_by_dominance(
            static_cast<int>(q.size()), [&](int i, int j) { return cdp_dominates(q[i], q[j]); });

        std::vector<int> chosen;
        chosen.reserve(n);
        for (const std::vector<int>& front : partition.fronts) {
            if (static_cast<int>(chosen.size() + front.size()) <= n) {
                chosen.insert(chosen.end(), front.begin(), front.end());
                if (static_cast<int>(chosen.size()) == n) {
                    break;
                }
                continue;
            }
            std::vector<Vector> members;
            members.reserve(front.size());
            for (int i : front) {
                members.push_back(q[i].objectives);
            }
            const std::vector<double> crowding = crowding_distance(members);
            std::vector<std::pair<double, int>> order;
            order.reserve(front.size());
            for (std::size_t k = 0; k < front.size(); ++k) {
                order.emplace_back(crowding[k], front[k]);
            }
            rng.shuffle(order);
            std::stable_sort(order.begin(), order.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });
            const int need = n - static_cast<int>(chosen.size());
            for (int k = 0; k < need; ++k) {
                chosen.push_back(order[k].second);
            }
            break;
        }
        pop = gather(q, chosen);
        result.trace.push_back(record_generation(pop, evaluations));
    }

    result.raw_final_population = pop;
    result.final_population = pop;
    return result;
}

}  // namespace atmr
