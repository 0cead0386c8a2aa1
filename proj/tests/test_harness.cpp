#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "atmr/harness.hpp"
#include "atmr/problems.hpp"

namespace fs = std::filesystem;
using atmr::Vector;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

// Small, fast experiment over two CORRIDOR variants.
atmr::ExperimentConfig tiny_config(const std::string& out_dir) {
  atmr::ExperimentConfig config;
  config.problems = {{"CORRIDOR", {{"D", 3.0}}}, {"CORRIDOR", {{"D", 4.0}}}};
  config.algorithms = {"atmr", "nsga2_cdp"};
  config.population_size = 8;
  config.max_evaluations = 64;
  config.runs = 3;
  config.base_seed = 5;
  config.reference_front_size = 10;
  config.output_dir = out_dir;
  return config;
}

// A problem whose evaluator always throws, for exercising failure capture.
void ensure_thrower_registered() {
  static bool done = [] {
    atmr::builtin_registry().add("THROWER", [](const atmr::ProblemParams&) {
      atmr::ProblemDefinition def;
      def.name = "THROWER";
      def.num_objectives = 2;
      def.dimension = 2;
      def.num_inequalities = 0;
      def.num_equalities = 0;
      def.lower = Vector::Zero(2);
      def.upper = Vector::Ones(2);
      def.evaluator = [](const Vector&) -> atmr::EvalOutput {
        throw std::runtime_error("intentional evaluator failure");
      };
      return def;
    });
    return true;
  }();
  (void)done;
}

// Hand-built record carrying only what summarize() reads.
atmr::RunRecord stub_record(const std::string& problem, const std::string& algorithm,
                            std::uint64_t seed, double igd_value, double hv_value) {
  atmr::RunRecord record;
  record.problem_label = problem;
  record.problem_name = problem;
  record.algorithm = algorithm;
  record.seed = seed;
  atmr::MetricReport metrics;
  metrics.igd = igd_value;
  metrics.hv = hv_value;
  metrics.feasible_ratio = 1.0;
  metrics.n_points = 1;
  record.metrics = metrics;
  return record;
}

}  // namespace

TEST_CASE("ProblemSpec::label formats parameters compactly") {
  atmr::ProblemSpec plain{"BNH", {}};
  CHECK(plain.label() == "BNH");
  atmr::ProblemSpec with_param{"CORRIDOR", {{"D", 3.0}}};
  CHECK(with_param.label() == "CORRIDOR_D3");
  atmr::ProblemSpec two{"CORRIDOR", {{"b", 0.5}, {"a", 12.0}}};
  CHECK(two.label() == "CORRIDOR_a12_b0.5");
}

TEST_CASE("parse_experiment_config: full round trip") {
  const std::string text = R"({
    "problems": ["BNH", {"name": "CORRIDOR", "params": {"D": 5}}],
    "algorithms": ["atmr", "nsga2_cdp"],
    "population_size": 52,
    "max_evaluations": 1040,
    "runs": 4,
    "base_seed": 9,
    "delta": 0.001,
    "crossover_prob": 0.9,
    "mutation_prob": 0.2,
    "eta_crossover": 15,
    "eta_mutation": 25,
    "reference_front_size": 100,
    "output_dir": "results"
  })";
  auto config = atmr::parse_experiment_config(text);
  REQUIRE(config.problems.size() == 2);
  CHECK(config.problems[0].name == "BNH");
  CHECK(config.problems[0].params.empty());
  CHECK(config.problems[1].name == "CORRIDOR");
  CHECK(config.problems[1].params.at("D") == 5.0);
  CHECK(config.algorithms == std::vector<std::string>{"atmr", "nsga2_cdp"});
  CHECK(config.population_size == 52);
  CHECK(config.max_evaluations == 1040);
  CHECK(config.runs == 4);
  CHECK(config.base_seed == 9);
  CHECK(config.delta == 0.001);
  CHECK(config.crossover_prob == 0.9);
  REQUIRE(config.mutation_prob.has_value());
  CHECK(*config.mutation_prob == 0.2);
  CHECK(config.eta_crossover == 15.0);
  CHECK(config.eta_mutation == 25.0);
  CHECK(config.reference_front_size == 100);
  CHECK(config.output_dir == "results");

  // serialize and parse back
  auto again = atmr::parse_experiment_config(atmr::experiment_config_to_json(config));
  CHECK(again.problems.size() == config.problems.size());
  CHECK(again.problems[1].params.at("D") == 5.0);
  CHECK(again.population_size == config.population_size);
  CHECK(again.mutation_prob == config.mutation_prob);
  CHECK(again.base_seed == config.base_seed);
}

TEST_CASE("parse_experiment_config: defaults and absent mutation_prob") {
  auto config = atmr::parse_experiment_config(R"({"problems": ["BNH"], "algorithms": ["atmr"]})");
  CHECK(config.population_size == 100);
  CHECK(config.max_evaluations == 20000);
  CHECK(config.runs == 30);
  CHECK_FALSE(config.mutation_prob.has_value());
  auto again = atmr::parse_experiment_config(atmr::experiment_config_to_json(config));
  CHECK_FALSE(again.mutation_prob.has_value());
}

TEST_CASE("parse_experiment_config: rejects malformed input") {
  CHECK_THROWS_AS(atmr::parse_experiment_config("{nope"), atmr::ConfigError);
  CHECK_THROWS_AS(atmr::parse_experiment_config("[1, 2]"), atmr::ConfigError);
  CHECK_THROWS_AS(
      atmr::parse_experiment_config(
          R"({"problems": ["BNH"], "algorithms": ["atmr"], "typo_key": 1})"),
      atmr::ConfigError);
  CHECK_THROWS_AS(
      atmr::parse_experiment_config(R"({"problems": [42], "algorithms": ["atmr"]})"),
      atmr::ConfigError);
}

TEST_CASE("run_experiment: rejects configs that cannot run") {
  auto dir = fresh_dir("atmr_harness_reject");
  auto config = tiny_config(dir.string());
  config.algorithms = {"simplex"};
  CHECK_THROWS_AS(atmr::run_experiment(config, 1), atmr::ConfigError);

  config = tiny_config(dir.string());
  config.problems[0].name = "UNKNOWN";
  CHECK_THROWS_AS(atmr::run_experiment(config, 1), atmr::ConfigError);

  config = tiny_config(dir.string());
  config.problems = {{"CORRIDOR", {{"D", 3.0}}}, {"CORRIDOR", {{"D", 3.0}}}};
  CHECK_THROWS_AS(atmr::run_experiment(config, 1), atmr::ConfigError);  // duplicate label

  config = tiny_config(dir.string());
  config.runs = 0;
  CHECK_THROWS_AS(atmr::run_experiment(config, 1), atmr::ConfigError);

  config = tiny_config(dir.string());
  config.population_size = 7;  // odd
  CHECK_THROWS_AS(atmr::run_experiment(config, 1), atmr::ConfigError);

  config = tiny_config(dir.string());
  config.algorithms.clear();
  CHECK_THROWS_AS(atmr::run_experiment(config, 1), atmr::ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("run_record json round trip is lossless and stable") {
  auto problem = atmr::get_problem("CORRIDOR", {{"D", 3.0}});
  auto config = atmr::make_default_config(problem, 31);
  config.population_size = 8;
  config.max_evaluations = 32;

  atmr::RunRecord record;
  record.problem_label = "CORRIDOR_D3";
  record.problem_name = "CORRIDOR";
  record.problem_params = {{"D", 3.0}};
  record.algorithm = "atmr";
  record.seed = 31;
  record.config = config;
  record.result = atmr::run_atmr(problem, config);
  record.metrics =
      atmr::evaluate_final_population(record.result.final_population,
                                      atmr::reference_front("CORRIDOR", 10));

  const std::string text = atmr::run_record_to_json(record);
  auto parsed = atmr::run_record_from_json(text);
  CHECK(parsed.problem_label == record.problem_label);
  CHECK(parsed.problem_name == record.problem_name);
  CHECK(parsed.problem_params == record.problem_params);
  CHECK(parsed.algorithm == record.algorithm);
  CHECK(parsed.seed == record.seed);
  CHECK(parsed.config.population_size == config.population_size);
  CHECK(parsed.config.mutation_prob == config.mutation_prob);
  CHECK(parsed.config.seed == config.seed);
  REQUIRE(parsed.metrics.has_value());
  CHECK(parsed.metrics->igd == record.metrics->igd);
  CHECK(parsed.metrics->hv == record.metrics->hv);
  REQUIRE(parsed.result.final_population.size() == record.result.final_population.size());
  for (std::size_t i = 0; i < parsed.result.final_population.size(); ++i) {
    CHECK(parsed.result.final_population[i].x == record.result.final_population[i].x);
    CHECK(parsed.result.final_population[i].objectives ==
          record.result.final_population[i].objectives);
    CHECK(parsed.result.final_population[i].violation ==
          record.result.final_population[i].violation);
  }
  REQUIRE(parsed.result.trace.size() == record.result.trace.size());
  CHECK(parsed.result.trace.back().evaluations == record.result.trace.back().evaluations);
  CHECK(parsed.result.trace.back().phase == record.result.trace.back().phase);

  // second serialization is byte-identical
  CHECK(atmr::run_record_to_json(parsed) == text);
}

TEST_CASE("run_experiment: produces the full file layout") {
  auto dir = fresh_dir("atmr_harness_layout");
  auto config = tiny_config(dir.string());
  auto report = atmr::run_experiment(config, 2);
  CHECK(report.total == 12);
  CHECK(report.completed == 12);
  CHECK(report.failures.empty());

  CHECK(fs::exists(dir / "config.json"));
  CHECK_FALSE(fs::exists(dir / "manifest.json"));
  for (const char* label : {"CORRIDOR_D3", "CORRIDOR_D4"}) {
    CAPTURE(label);
    CHECK(fs::exists(dir / "fronts" / (std::string(label) + "_reference.csv")));
    CHECK(fs::exists(dir / "tables" / (std::string(label) + ".csv")));
    for (const char* algo : {"atmr", "nsga2_cdp"}) {
      for (int seed = 5; seed <= 7; ++seed) {
        CHECK(fs::exists(dir / "runs" / label / algo / (std::to_string(seed) + ".json")));
        CHECK(fs::exists(dir / "fronts" /
                         (std::string(label) + "_" + algo + "_s" + std::to_string(seed) +
                          ".csv")));
      }
    }
  }
  CHECK(fs::exists(dir / "summary.csv"));
  CHECK(fs::exists(dir / "fronts" / "plot.gp"));

  // the reloaded records regroup into the same summary
  auto records = atmr::load_run_records(dir.string());
  CHECK(records.size() == 12);
  auto table = atmr::summarize(records);
  CHECK(table.problems.size() == 2);
  for (const auto& problem : table.problems) {
    REQUIRE(problem.rows.size() == 2);
    for (const auto& row : problem.rows) {
      CHECK(row.runs == 3);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("run_experiment: byte-identical across repeats and thread counts") {
  auto dir_a = fresh_dir("atmr_harness_rep_a");
  auto dir_b = fresh_dir("atmr_harness_rep_b");
  auto config_a = tiny_config(dir_a.string());
  auto config_b = tiny_config(dir_b.string());
  atmr::run_experiment(config_a, 1);
  atmr::run_experiment(config_b, 3);

  int compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(dir_a / "runs")) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), dir_a);
    CHECK(slurp(entry.path()) == slurp(dir_b / rel));
    ++compared;
  }
  CHECK(compared == 12);
  CHECK(slurp(dir_a / "summary.csv") == slurp(dir_b / "summary.csv"));
  for (const char* label : {"CORRIDOR_D3", "CORRIDOR_D4"}) {
    CHECK(slurp(dir_a / "tables" / (std::string(label) + ".csv")) ==
          slurp(dir_b / "tables" / (std::string(label) + ".csv")));
  }
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("run_experiment: failures are captured in the manifest") {
  ensure_thrower_registered();
  auto dir = fresh_dir("atmr_harness_fail");
  atmr::ExperimentConfig config;
  config.problems = {{"THROWER", {}}};
  config.algorithms = {"atmr"};
  config.population_size = 4;
  config.max_evaluations = 8;
  config.runs = 2;
  config.base_seed = 1;
  config.output_dir = dir.string();

  auto report = atmr::run_experiment(config, 1);
  CHECK(report.total == 2);
  CHECK(report.completed == 0);
  REQUIRE(report.failures.size() == 2);
  for (const auto& failure : report.failures) {
    CHECK(failure.problem == "THROWER");
    CHECK(failure.algorithm == "atmr");
    CHECK(failure.error == "intentional evaluator failure");
  }
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK_FALSE(fs::exists(dir / "summary.csv"));
  const std::string manifest = slurp(dir / "manifest.json");
  CHECK(manifest.find("intentional evaluator failure") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("run_experiment: partial failure still persists the good runs") {
  ensure_thrower_registered();
  auto dir = fresh_dir("atmr_harness_partial");
  atmr::ExperimentConfig config;
  config.problems = {{"THROWER", {}}, {"CORRIDOR", {{"D", 3.0}}}};
  config.algorithms = {"atmr"};
  config.population_size = 8;
  config.max_evaluations = 32;
  config.runs = 2;
  config.base_seed = 1;
  config.reference_front_size = 10;
  config.output_dir = dir.string();

  auto report = atmr::run_experiment(config, 1);
  CHECK(report.total == 4);
  CHECK(report.completed == 2);
  CHECK(report.failures.size() == 2);
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(fs::exists(dir / "summary.csv"));
  CHECK(fs::exists(dir / "runs" / "CORRIDOR_D3" / "atmr" / "1.json"));
  CHECK(fs::exists(dir / "runs" / "CORRIDOR_D3" / "atmr" / "2.json"));
  fs::remove_all(dir);
}

TEST_CASE("summarize: worked means, deviations, and ranks") {
  std::vector<atmr::RunRecord> records;
  // problem P: algorithm a has igd {1,2,3}, hv {4,5,6}; b has igd {2,3,4}
  records.push_back(stub_record("P", "a", 1, 1.0, 4.0));
  records.push_back(stub_record("P", "a", 2, 2.0, 5.0));
  records.push_back(stub_record("P", "a", 3, 3.0, 6.0));
  records.push_back(stub_record("P", "b", 1, 2.0, 3.0));
  records.push_back(stub_record("P", "b", 2, 3.0, 4.0));
  records.push_back(stub_record("P", "b", 3, 4.0, 5.0));
  // problem Q: identical igd means force a shared rank
  records.push_back(stub_record("Q", "a", 1, 1.0, 9.0));
  records.push_back(stub_record("Q", "b", 1, 1.0, 2.0));

  auto table = atmr::summarize(records);
  REQUIRE(table.problems.size() == 2);
  const auto& p = table.problems[0];
  CHECK(p.problem == "P");
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[0].algorithm == "a");
  CHECK(p.rows[0].runs == 3);
  CHECK(p.rows[0].igd_mean == 2.0);
  CHECK(p.rows[0].igd_std == 1.0);
  CHECK(p.rows[0].hv_mean == 5.0);
  CHECK(p.rows[1].igd_mean == 3.0);

  // igd ranks: P gives a=1, b=2; Q ties at 1.5 each
  REQUIRE(table.igd_ranks.size() == 2);
  const auto& ra = table.igd_ranks[0].algorithm == "a" ? table.igd_ranks[0]
                                                       : table.igd_ranks[1];
  const auto& rb = table.igd_ranks[0].algorithm == "b" ? table.igd_ranks[0]
                                                       : table.igd_ranks[1];
  CHECK(ra.average_rank == doctest::Approx((1.0 + 1.5) / 2.0));
  CHECK(rb.average_rank == doctest::Approx((2.0 + 1.5) / 2.0));
  CHECK(ra.problems_ranked == 2);

  // hv ranks: larger is better, so a wins both problems
  const auto& ha = table.hv_ranks[0].algorithm == "a" ? table.hv_ranks[0]
                                                      : table.hv_ranks[1];
  CHECK(ha.average_rank == 1.0);
}

TEST_CASE("summarize: records without metrics rank worst") {
  std::vector<atmr::RunRecord> records;
  records.push_back(stub_record("P", "a", 1, 5.0, 1.0));
  atmr::RunRecord blank;
  blank.problem_label = "P";
  blank.problem_name = "P";
  blank.algorithm = "b";
  blank.seed = 1;
  records.push_back(blank);  // no metrics at all

  auto table = atmr::summarize(records);
  REQUIRE(table.problems.size() == 1);
  const auto& rows = table.problems[0].rows;
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].igd_runs == 0);
  CHECK(std::isnan(rows[1].igd_mean));

  const auto& ra = table.igd_ranks[0].algorithm == "a" ? table.igd_ranks[0]
                                                       : table.igd_ranks[1];
  const auto& rb = table.igd_ranks[0].algorithm == "b" ? table.igd_ranks[0]
                                                       : table.igd_ranks[1];
  CHECK(ra.average_rank == 1.0);
  CHECK(rb.average_rank == 2.0);
}

TEST_CASE("summarize: empty input throws") {
  CHECK_THROWS_AS(atmr::summarize({}), std::invalid_argument);
}

TEST_CASE("load_run_records: missing directory is a config error") {
  CHECK_THROWS_AS(atmr::load_run_records("/nonexistent/atmr"), atmr::ConfigError);
}
