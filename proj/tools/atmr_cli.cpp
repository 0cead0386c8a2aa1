#include "atmr/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

void print_summary(const atmr::SummaryTable& table) {
    for (const atmr::ProblemSummary& problem : table.problems) {
        std::cout << problem.problem << "\n";
        for (const atmr::AlgorithmSummary& row : problem.rows) {
            std::printf("  %-10s runs=%d igd=%.6g (%.3g, n=%d) hv=%.6g (%.3g, n=%d) feas=%.3f\n",
                        row.algorithm.c_str(), row.runs, row.igd_mean, row.igd_std, row.igd_runs,
                        row.hv_mean, row.hv_std, row.hv_runs, row.feasible_ratio_mean);
        }
    }
    if (!table.igd_ranks.empty()) {
        std::cout << "average ranks (IGD / HV):\n";
        for (const atmr::RankEntry& e : table.igd_ranks) {
            double hv_rank = 0.0;
            for (const atmr::RankEntry& h : table.hv_ranks) {
                if (h.algorithm == e.algorithm) {
                    hv_rank = h.average_rank;
                }
            }
            std::printf("  %-10s %.3f / %.3f over %d problem(s)\n", e.algorithm.c_str(),
                        e.average_rank, hv_rank, e.problems_ranked);
        }
    }
}

int cmd_run(const std::string& config_path, int jobs, long long seed_override, bool has_seed) {
    atmr::ExperimentConfig config = atmr::load_experiment_config(config_path);
    if (has_seed) {
        config.base_seed = static_cast<std::uint64_t>(seed_override);
    }
    const atmr::ExperimentReport report = atmr::run_experiment(config, jobs);
    std::cout << "completed " << report.completed << "/" << report.total << " runs -> "
              << config.output_dir << "\n";
    if (!report.failures.empty()) {
        std::cerr << report.failures.size() << " run(s) failed; see "
                  << config.output_dir << "/manifest.json\n";
        for (const atmr::RunFailure& f : report.failures) {
            std::cerr << "  " << f.problem << "/" << f.algorithm << "/seed " << f.seed << ": "
                      << f.error << "\n";
        }
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_summarize(const std::string& dir) {
    std::vector<atmr::RunRecord> records = atmr::load_run_records(dir);
    if (records.empty()) {
        std::cerr << "no run records under " << dir << "/runs\n";
        return kExitConfig;
    }
    const atmr::SummaryTable table = atmr::summarize(std::move(records));
    atmr::write_summary_files(dir, table);
    print_summary(table);
    return kExitOk;
}

int cmd_front(const std::string& problem, int count) {
    atmr::get_problem(problem);  // reject unknown names with the full problem list
    const std::vector<atmr::Vector> front = atmr::reference_front(problem, count);
    std::printf("f1");
    for (Eigen::Index j = 1; j < front.front().size(); ++j) {
        std::printf(",f%d", static_cast<int>(j + 1));
    }
    std::printf("\n");
    for (const atmr::Vector& row : front) {
        for (Eigen::Index j = 0; j < row.size(); ++j) {
            std::printf(j ? ",%.17g" : "%.17g", row[j]);
        }
        std::printf("\n");
    }
    return kExitOk;
}

int cmd_list_problems() {
    const atmr::ProblemRegistry& registry = atmr::builtin_registry();
    for (const std::string& name : registry.names()) {
        const atmr::ProblemDefinition p = atmr::get_problem(name);
        std::printf("%-10s m=%d D=%d constraints=%d%s\n", name.c_str(), p.num_objectives,
                    p.dimension, p.num_inequalities + p.num_equalities,
                    registry.has_front(name) ? " [reference front]" : "");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ATM-R constrained multiobjective optimization benchmark harness"};
    app.require_subcommand(1);

    std::string config_path;
    int jobs = 0;
    long long seed_override = 0;
    CLI::App* run = app.add_subcommand("run", "execute an experiment from a config file");
    run->add_option("--config", config_path, "experiment config JSON")->required();
    run->add_option("--jobs", jobs, "worker threads (default: hardware)");
    CLI::Option* seed_opt = run->add_option("--seed", seed_override, "override base_seed");

    std::string dir;
    CLI::App* summarize = app.add_subcommand("summarize", "rebuild tables from run records");
    summarize->add_option("--dir", dir, "experiment output directory")->required();

    std::string problem;
    int count = 500;
    CLI::App* front = app.add_subcommand("front", "print a reference front as CSV");
    front->add_option("--problem", problem, "problem name")->required();
    front->add_option("--count", count, "number of points");

    app.add_subcommand("list-problems", "list built-in problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config_path, jobs, seed_override, seed_opt->count() > 0);
        }
        if (summarize->parsed()) {
            return cmd_summarize(dir);
        }
        if (front->parsed()) {
            return cmd_front(problem, count);
        }
        return cmd_list_problems();
    } catch (const atmr::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
