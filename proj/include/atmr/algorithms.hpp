#pragma once

#include "atmr/core.hpp"
#include "atmr/operators.hpp"
#include "atmr/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace atmr {

// Feasibility census of a nonempty population: Infeasible when no member has
// zero violation, Feasible when all do, SemiFeasible otherwise.
Phase classify_phase(const Population& population);

// Reference-point-guided reduction in transformed (m+1)-space, the update
// mechanism of the infeasible phase. Whole fronts are admitted while they
// fit; the overflow front is trimmed by assigning members to the smallest
// regular weight lattice covering the remaining quota (normalization built
// from that front) and repeatedly deleting, from the most crowded weight,
// the member with the largest violation. Requires |candidates| >= target.
Population truncate_transformed(const Population& candidates, int target, Rng& rng);

// Environmental selection when P and O are entirely infeasible; returns
// exactly N solutions drawn from their union.
Population select_infeasible_phase(const Population& parents, const Population& offspring, int n,
                                   Rng& rng);

// Environmental selection when the union holds both feasible and infeasible
// members. The feasible side is truncated to N by NSGA-II environmental
// selection only when it exceeds N. The infeasible side, when it exceeds N,
// is reduced either by the infeasible-phase mechanism (early stage:
// evaluations/budget < 0.5 or fewer than N feasible) or, later, restricted
// to the infeasible members of the union's first transformed front and then
// trimmed against adaptive weights built from the kept feasible solutions,
// dropping from the most crowded weight the candidate furthest from that
// weight's generating solution in normalized objective space. Output is
// kept-feasible followed by kept-infeasible, between min(|Q|, N) and 2N
// members.
Population select_semifeasible_phase(const Population& parents, const Population& offspring,
                                     int n, std::int64_t evaluations, std::int64_t max_evaluations,
                                     Rng& rng);

// NSGA-II environmental selection over an entirely feasible population:
// nondominated sort on the objectives, whole fronts admitted, the split
// front ordered by descending crowding distance with random tie order.
Population select_feasible_phase(const Population& population, int n, Rng& rng);

struct GenerationRecord {
    std::int64_t evaluations = 0;  // cumulative, strictly increasing by N
    Phase phase = Phase::Infeasible;
    int feasible_count = 0;
    double best_violation = 0.0;
    double mean_violation = 0.0;
    int population_size = 0;
};

struct RunResult {
    std::string problem;
    AlgorithmConfig config;
    std::uint64_t seed = 0;
    // Population as the last selection left it; may exceed N after a
    // semi-feasible generation.
    Population raw_final_population;
    // Reporting population truncated to exactly N.
    Population final_population;
    std::vector<GenerationRecord> trace;
};

// The main loop: uniform-random initialization, then per generation
// phase-aware mating, SBX + polynomial mutation, and dispatch on the union's
// phase to the matching environmental selection. Deterministic given
// (problem, config): all randomness flows from one generator seeded with
// config.seed, consumed in a fixed order (initialization, then per
// generation mating, variation, selection).
RunResult run_atmr(const ProblemDefinition& problem, const AlgorithmConfig& config);

// Generational NSGA-II baseline with constrained-dominance sorting and
// cdp_compare tournaments (crowding tie-break). Same determinism contract.
RunResult run_nsga2_cdp(const ProblemDefinition& problem, const AlgorithmConfig& config);

}  // namespace atmr
