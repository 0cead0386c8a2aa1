#pragma once

#include "atmr/algorithms.hpp"
#include "atmr/metrics.hpp"
#include "atmr/problems.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atmr {

// Raised for problems detectable before any run starts (bad config file,
// unknown problem or algorithm, invalid parameter values).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ProblemSpec {
    std::string name;
    ProblemParams params;

    // File-system-safe identifier: the name, plus _<key><value> per param.
    std::string label() const;
};

struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    std::vector<std::string> algorithms;  // "atmr" and/or "nsga2_cdp"
    int population_size = 100;
    std::int64_t max_evaluations = 20000;
    int runs = 30;
    std::uint64_t base_seed = 1;  // run k uses seed base_seed + k
    double delta = 1e-4;
    double crossover_prob = 1.0;
    std::optional<double> mutation_prob;  // absent: 1 / problem dimension
    double eta_crossover = 20.0;
    double eta_mutation = 20.0;
    int reference_front_size = 500;
    std::string output_dir = "out";
};

// JSON config file round-trip. The same serialization is embedded in every
// run record, so any record replays without the original file.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const std::string& text);
std::string experiment_config_to_json(const ExperimentConfig& config);

// One completed run: identification, the exact algorithm config used
// (mutation probability resolved, seed filled in), metric values when a
// reference front exists, and the run output.
struct RunRecord {
    std::string problem_label;
    std::string problem_name;
    ProblemParams problem_params;
    std::string algorithm;
    std::uint64_t seed = 0;
    AlgorithmConfig config;
    std::optional<MetricReport> metrics;
    RunResult result;
};

// Serialized form written to runs/<problem>/<algorithm>/<seed>.json. The
// payload carries no timestamps, so identical configs produce byte-identical
// files.
std::string run_record_to_json(const RunRecord& record);
RunRecord run_record_from_json(const std::string& text);
RunRecord load_run_record(const std::string& path);

struct RunFailure {
    std::string problem;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::string error;
};

struct ExperimentReport {
    int total = 0;
    int completed = 0;
    std::vector<RunFailure> failures;
};

// Executes runs x problems x algorithms on a worker pool of `jobs` threads
// (values < 1 request the hardware default). Writes per-run JSON records,
// per-problem metric tables, reference and final front CSVs, a summary with
// average ranks, and a failure manifest when any run throws. Completed runs
// are always persisted.
ExperimentReport run_experiment(const ExperimentConfig& config, int jobs = 0);

struct AlgorithmSummary {
    std::string algorithm;
    int runs = 0;
    int igd_runs = 0;  // runs contributing an IGD value
    int hv_runs = 0;
    double igd_mean = 0.0, igd_std = 0.0;
    double hv_mean = 0.0, hv_std = 0.0;
    double feasible_ratio_mean = 0.0;
};

struct ProblemSummary {
    std::string problem;
    std::vector<AlgorithmSummary> rows;
};

struct RankEntry {
    std::string algorithm;
    double average_rank = 0.0;
    int problems_ranked = 0;
};

struct SummaryTable {
    std::vector<ProblemSummary> problems;
    std::vector<RankEntry> igd_ranks;
    std::vector<RankEntry> hv_ranks;
};

// Aggregates records into per-problem mean/std rows (sample standard
// deviation) and cross-problem average ranks (rank 1 = best mean; ties share
// the mean rank; a missing mean ranks worst). Records are ordered internally
// by (problem, algorithm, seed), so the same set of records always produces
// identical output. Throws std::invalid_argument when empty.
SummaryTable summarize(std::vector<RunRecord> records);

// Loads every run record under <dir>/runs.
std::vector<RunRecord> load_run_records(const std::string& dir);

// Writes tables/<problem>.csv and summary.csv under output_dir.
void write_summary_files(const std::string& output_dir, const SummaryTable& table);

}  // namespace atmr
