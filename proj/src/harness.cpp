#include "atmr/harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace atmr {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string format_param_value(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

json vector_to_json(const Vector& v) {
    json a = json::array();
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        a.push_back(v[j]);
    }
    return a;
}

Vector vector_from_json(const json& a) {
    Vector v(a.size());
    Eigen::Index j = 0;
    for (const json& item : a) {
        v[j++] = item.get<double>();
    }
    return v;
}

json population_to_json(const Population& pop) {
    json rows = json::array();
    for (const Solution& s : pop) {
        rows.push_back(json{{"x", vector_to_json(s.x)},
                            {"objectives", vector_to_json(s.objectives)},
                            {"inequalities", vector_to_json(s.inequalities)},
                            {"equalities", vector_to_json(s.equalities)},
                            {"violation", s.violation}});
    }
    return rows;
}

Population population_from_json(const json& rows) {
    Population pop;
    pop.reserve(rows.size());
    for (const json& row : rows) {
        Solution s;
        s.x = vector_from_json(row.at("x"));
        s.objectives = vector_from_json(row.at("objectives"));
        s.inequalities = vector_from_json(row.at("inequalities"));
        s.equalities = vector_from_json(row.at("equalities"));
        s.violation = row.at("violation").get<double>();
        pop.push_back(std::move(s));
    }
    return pop;
}

json algorithm_config_to_json(const AlgorithmConfig& c) {
    return json{{"population_size", c.population_size},
                {"max_evaluations", c.max_evaluations},
                {"delta", c.delta},
                {"crossover_prob", c.crossover_prob},
                {"mutation_prob", c.mutation_prob},
                {"eta_crossover", c.eta_crossover},
                {"eta_mutation", c.eta_mutation},
                {"seed", c.seed}};
}

AlgorithmConfig algorithm_config_from_json(const json& j) {
    AlgorithmConfig c;
    c.population_size = j.at("population_size").get<int>();
    c.max_evaluations = j.at("max_evaluations").get<std::int64_t>();
    c.delta = j.at("delta").get<double>();
    c.crossover_prob = j.at("crossover_prob").get<double>();
    c.mutation_prob = j.at("mutation_prob").get<double>();
    c.eta_crossover = j.at("eta_crossover").get<double>();
    c.eta_mutation = j.at("eta_mutation").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

std::string phase_to_string(Phase p) {
    switch (p) {
        case Phase::Infeasible:
            return "infeasible";
        case Phase::SemiFeasible:
            return "semi_feasible";
        default:
            return "feasible";
    }
}

Phase phase_from_string(const std::string& s) {
    if (s == "infeasible") return Phase::Infeasible;
    if (s == "semi_feasible") return Phase::SemiFeasible;
    if (s == "feasible") return Phase::Feasible;
    throw std::invalid_argument("unknown phase " + s);
}

json trace_to_json(const std::vector<GenerationRecord>& trace) {
    json a = json::array();
    for (const GenerationRecord& r : trace) {
        a.push_back(json{{"evaluations", r.evaluations},
                         {"phase", phase_to_string(r.phase)},
                         {"feasible_count", r.feasible_count},
                         {"best_violation", r.best_violation},
                         {"mean_violation", r.mean_violation},
                         {"population_size", r.population_size}});
    }
    return a;
}

std::vector<GenerationRecord> trace_from_json(const json& a) {
    std::vector<GenerationRecord> trace;
    trace.reserve(a.size());
    for (const json& item : a) {
        GenerationRecord r;
        r.evaluations = item.at("evaluations").get<std::int64_t>();
        r.phase = phase_from_string(item.at("phase").get<std::string>());
        r.feasible_count = item.at("feasible_count").get<int>();
        r.best_violation = item.at("best_violation").get<double>();
        r.mean_violation = item.at("mean_violation").get<double>();
        r.population_size = item.at("population_size").get<int>();
        trace.push_back(r);
    }
    return trace;
}

json metrics_to_json(const std::optional<MetricReport>& metrics) {
    if (!metrics) {
        return nullptr;
    }
    json j{{"feasible_ratio", metrics->feasible_ratio}, {"n_points", metrics->n_points}};
    j["igd"] = metrics->igd ? json(*metrics->igd) : json(nullptr);
    j["hv"] = metrics->hv ? json(*metrics->hv) : json(nullptr);
    j["hv_reference"] =
        metrics->hv_reference ? vector_to_json(*metrics->hv_reference) : json(nullptr);
    return j;
}

std::optional<MetricReport> metrics_from_json(const json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    MetricReport m;
    m.feasible_ratio = j.at("feasible_ratio").get<double>();
    m.n_points = j.at("n_points").get<int>();
    if (!j.at("igd").is_null()) m.igd = j.at("igd").get<double>();
    if (!j.at("hv").is_null()) m.hv = j.at("hv").get<double>();
    if (!j.at("hv_reference").is_null()) m.hv_reference = vector_from_json(j.at("hv_reference"));
    return m;
}

json params_to_json(const ProblemParams& params) {
    json j = json::object();
    for (const auto& [key, value] : params) {
        j[key] = value;
    }
    return j;
}

ProblemParams params_from_json(const json& j) {
    ProblemParams params;
    for (auto it = j.begin(); it != j.end(); ++it) {
        params[it.key()] = it.value().get<double>();
    }
    return params;
}

const std::set<std::string> kKnownAlgorithms{"atmr", "nsga2_cdp"};

void validate_experiment(const ExperimentConfig& config) {
    if (config.problems.empty()) {
        throw ConfigError("config: problems list is empty");
    }
    if (config.algorithms.empty()) {
        throw ConfigError("config: algorithms list is empty");
    }
    for (const std::string& algo : config.algorithms) {
        if (kKnownAlgorithms.find(algo) == kKnownAlgorithms.end()) {
            throw ConfigError("config: unknown algorithm " + algo + " (known: atmr, nsga2_cdp)");
        }
    }
    if (config.runs < 1) {
        throw ConfigError("config: runs must be >= 1");
    }
    if (config.reference_front_size < 2) {
        throw ConfigError("config: reference_front_size must be >= 2");
    }
    std::set<std::string> labels;
    for (const ProblemSpec& spec : config.problems) {
        try {
            get_problem(spec.name, spec.params);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
        if (!labels.insert(spec.label()).second) {
            throw ConfigError("config: duplicate problem entry " + spec.label());
        }
    }
    AlgorithmConfig probe;
    probe.population_size = config.population_size;
    probe.max_evaluations = config.max_evaluations;
    probe.delta = config.delta;
    probe.crossover_prob = config.crossover_prob;
    probe.mutation_prob = config.mutation_prob.value_or(0.5);
    probe.eta_crossover = config.eta_crossover;
    probe.eta_mutation = config.eta_mutation;
    try {
        validate(probe);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunRecord execute_run(const ExperimentConfig& config, const ProblemSpec& spec,
                      const std::string& algorithm, std::uint64_t seed,
                      const std::map<std::string, std::vector<Vector>>& fronts) {
    const ProblemDefinition problem = get_problem(spec.name, spec.params);
    AlgorithmConfig ac;
    ac.population_size = config.population_size;
    ac.max_evaluations = config.max_evaluations;
    ac.delta = config.delta;
    ac.crossover_prob = config.crossover_prob;
    ac.mutation_prob = config.mutation_prob ? *config.mutation_prob
                                            : 1.0 / static_cast<double>(problem.dimension);
    ac.eta_crossover = config.eta_crossover;
    ac.eta_mutation = config.eta_mutation;
    ac.seed = seed;

    RunRecord record;
    record.problem_label = spec.label();
    record.problem_name = spec.name;
    record.problem_params = spec.params;
    record.algorithm = algorithm;
    record.seed = seed;
    record.config = ac;
    record.result = algorithm == "atmr" ? run_atmr(problem, ac) : run_nsga2_cdp(problem, ac);

    auto it = fronts.find(record.problem_label);
    if (it != fronts.end()) {
        record.metrics = evaluate_final_population(record.result.final_population, it->second);
    }
    return record;
}

double mean_of(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values, double mean) {
    if (values.size() < 2) {
        return 0.0;
    }
    double total = 0.0;
    for (double v : values) {
        total += (v - mean) * (v - mean);
    }
    return std::sqrt(total / static_cast<double>(values.size() - 1));
}

// Shared ranks (1 = best) for the given keys; ties get the mean of the
// positions they span. Missing keys (NaN) were mapped to +infinity upstream.
std::vector<double> shared_ranks(const std::vector<double>& keys) {
    const std::size_t n = keys.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && keys[order[j + 1]] == keys[order[i]]) {
            ++j;
        }
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

void accumulate_ranks(const std::vector<ProblemSummary>& problems, bool use_igd,
                      std::vector<RankEntry>& out) {
    std::map<std::string, std::pair<double, int>> totals;
    for (const ProblemSummary& p : problems) {
        bool any = false;
        std::vector<double> keys;
        keys.reserve(p.rows.size());
        for (const AlgorithmSummary& row : p.rows) {
            const bool has = use_igd ? row.igd_runs > 0 : row.hv_runs > 0;
            any = any || has;
            if (!has) {
                keys.push_back(std::numeric_limits<double>::infinity());
            } else {
                keys.push_back(use_igd ? row.igd_mean : -row.hv_mean);
            }
        }
        if (!any) {
            continue;
        }
        const std::vector<double> ranks = shared_ranks(keys);
        for (std::size_t k = 0; k < p.rows.size(); ++k) {
            auto& [total, count] = totals[p.rows[k].algorithm];
            total += ranks[k];
            count += 1;
        }
    }
    for (const auto& [algorithm, acc] : totals) {
        out.push_back({algorithm, acc.first / acc.second, acc.second});
    }
}

}  // namespace

std::string ProblemSpec::label() const {
    std::string result = name;
    for (const auto& [key, value] : params) {
        result += "_" + key + format_param_value(value);
    }
    return result;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    static const std::set<std::string> known{
        "problems",      "algorithms",    "population_size", "max_evaluations",
        "runs",          "base_seed",     "delta",           "crossover_prob",
        "mutation_prob", "eta_crossover", "eta_mutation",    "reference_front_size",
        "output_dir"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (known.find(it.key()) == known.end()) {
            throw ConfigError("config: unknown key " + it.key());
        }
    }
    ExperimentConfig config;
    try {
        if (j.contains("problems")) {
            config.problems.clear();
            for (const json& p : j.at("problems")) {
                ProblemSpec spec;
                if (p.is_string()) {
                    spec.name = p.get<std::string>();
                } else {
                    spec.name = p.at("name").get<std::string>();
                    if (p.contains("params")) {
                        spec.params = params_from_json(p.at("params"));
                    }
                }
                config.problems.push_back(std::move(spec));
            }
        }
        if (j.contains("algorithms")) {
            config.algorithms = j.at("algorithms").get<std::vector<std::string>>();
        }
        config.population_size = j.value("population_size", config.population_size);
        config.max_evaluations = j.value("max_evaluations", config.max_evaluations);
        config.runs = j.value("runs", config.runs);
        config.base_seed = j.value("base_seed", config.base_seed);
        config.delta = j.value("delta", config.delta);
        config.crossover_prob = j.value("crossover_prob", config.crossover_prob);
        if (j.contains("mutation_prob") && !j.at("mutation_prob").is_null()) {
            config.mutation_prob = j.at("mutation_prob").get<double>();
        }
        config.eta_crossover = j.value("eta_crossover", config.eta_crossover);
        config.eta_mutation = j.value("eta_mutation", config.eta_mutation);
        config.reference_front_size = j.value("reference_front_size", config.reference_front_size);
        config.output_dir = j.value("output_dir", config.output_dir);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config(buffer.str());
}

std::string experiment_config_to_json(const ExperimentConfig& config) {
    json problems = json::array();
    for (const ProblemSpec& spec : config.problems) {
        problems.push_back(json{{"name", spec.name}, {"params", params_to_json(spec.params)}});
    }
    json j{{"problems", problems},
           {"algorithms", config.algorithms},
           {"population_size", config.population_size},
           {"max_evaluations", config.max_evaluations},
           {"runs", config.runs},
           {"base_seed", config.base_seed},
           {"delta", config.delta},
           {"crossover_prob", config.crossover_prob},
           {"mutation_prob",
            config.mutation_prob ? json(*config.mutation_prob) : json(nullptr)},
           {"eta_crossover", config.eta_crossover},
           {"eta_mutation", config.eta_mutation},
           {"reference_front_size", config.reference_front_size},
           {"output_dir", config.output_dir}};
    return j.dump(2);
}

std::string run_record_to_json(const RunRecord& record) {
    json j{{"problem", json{{"label", record.problem_label},
                            {"name", record.problem_name},
                            {"params", params_to_json(record.problem_params)}}},
           {"algorithm", record.algorithm},
           {"seed", record.seed},
           {"config", algorithm_config_to_json(record.config)},
           {"metrics", metrics_to_json(record.metrics)},
           {"final_population", population_to_json(record.result.final_population)},
           {"raw_final_population", population_to_json(record.result.raw_final_population)},
           {"trace", trace_to_json(record.result.trace)}};
    return j.dump(2);
}

RunRecord run_record_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("run record: invalid JSON: ") + e.what());
    }
    RunRecord record;
    record.problem_label = j.at("problem").at("label").get<std::string>();
    record.problem_name = j.at("problem").at("name").get<std::string>();
    record.problem_params = params_from_json(j.at("problem").at("params"));
    record.algorithm = j.at("algorithm").get<std::string>();
    record.seed = j.at("seed").get<std::uint64_t>();
    record.config = algorithm_config_from_json(j.at("config"));
    record.metrics = metrics_from_json(j.at("metrics"));
    record.result.problem = record.problem_name;
    record.result.config = record.config;
    record.result.seed = record.seed;
    record.result.final_population = population_from_json(j.at("final_population"));
    record.result.raw_final_population = population_from_json(j.at("raw_final_population"));
    record.result.trace = trace_from_json(j.at("trace"));
    return record;
}

RunRecord load_run_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return run_record_from_json(buffer.str());
}

ExperimentReport run_experiment(const ExperimentConfig& config, int jobs) {
    validate_experiment(config);
    const fs::path out(config.output_dir);
    fs::create_directories(out / "runs");
    fs::create_directories(out / "tables");
    fs::create_directories(out / "fronts");
    fs::create_directories(out / "cache");
    {
        std::ofstream f(out / "config.json");
        f << experiment_config_to_json(config) << "\n";
        if (!f) {
            throw std::runtime_error("cannot write " + (out / "config.json").string());
        }
    }

    std::map<std::string, std::vector<Vector>> fronts;
    for (const ProblemSpec& spec : config.problems) {
        if (builtin_registry().has_front(spec.name)) {
            fronts[spec.label()] = reference_front_cached(
                spec.name, config.reference_front_size, (out / "cache").string());
            write_objective_csv(
                (out / "fronts" / (spec.label() + "_reference.csv")).string(),
                fronts.at(spec.label()));
        }
        for (const std::string& algo : config.algorithms) {
            fs::create_directories(out / "runs" / spec.label() / algo);
        }
    }

    struct Task {
        const ProblemSpec* spec;
        const std::string* algorithm;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    tasks.reserve(config.problems.size() * config.algorithms.size() * config.runs);
    for (const ProblemSpec& spec : config.problems) {
        for (const std::string& algo : config.algorithms) {
            for (int r = 0; r < config.runs; ++r) {
                tasks.push_back({&spec, &algo, config.base_seed + static_cast<std::uint64_t>(r)});
            }
        }
    }

    std::vector<std::optional<RunRecord>> records(tasks.size());
    std::vector<std::optional<RunFailure>> failures(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            const Task& task = tasks[i];
            try {
                RunRecord record =
                    execute_run(config, *task.spec, *task.algorithm, task.seed, fronts);
                const fs::path file = out / "runs" / task.spec->label() / *task.algorithm /
                                      (std::to_string(task.seed) + ".json");
                std::ofstream f(file);
                f << run_record_to_json(record) << "\n";
                if (!f) {
                    throw std::runtime_error("failed writing " + file.string());
                }
                records[i] = std::move(record);
            } catch (const std::exception& e) {
                failures[i] =
                    RunFailure{task.spec->label(), *task.algorithm, task.seed, e.what()};
            }
        }
    };

    int pool_size = jobs >= 1 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    pool_size = std::max(1, std::min<int>(pool_size, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (int k = 0; k < pool_size; ++k) {
        pool.emplace_back(work);
    }
    for (std::thread& t : pool) {
        t.join();
    }

    ExperimentReport report;
    report.total = static_cast<int>(tasks.size());
    std::vector<RunRecord> completed;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (records[i]) {
            completed.push_back(std::move(*records[i]));
        } else if (failures[i]) {
            report.failures.push_back(*failures[i]);
        }
    }
    report.completed = static_cast<int>(completed.size());

    if (!completed.empty()) {
        for (const RunRecord& record : completed) {
            std::vector<Vector> feasible;
            int dim = 0;
            for (const Solution& s : record.result.final_population) {
                dim = static_cast<int>(s.objectives.size());
                if (s.feasible()) {
                    feasible.push_back(s.objectives);
                }
            }
            const fs::path file = out / "fronts" /
                                  (record.problem_label + "_" + record.algorithm + "_s" +
                                   std::to_string(record.seed) + ".csv");
            write_objective_csv(file.string(), feasible, dim);
        }
        write_summary_files(config.output_dir, summarize(std::move(completed)));
        std::ofstream plot(out / "fronts" / "plot.gp");
        plot << "# Compare a reference front with a run's final front.\n"
             << "# usage: gnuplot -e \"ref='BNH_reference.csv'; run='BNH_atmr_s1.csv'\" plot.gp\n"
             << "set datafile separator comma\n"
             << "set key outside\n"
             << "plot ref skip 1 using 1:2 with lines title 'reference', \\\n"
             << "     run skip 1 using 1:2 with points pt 7 title 'final'\n"
             << "pause -1\n";
    }

    if (!report.failures.empty()) {
        json manifest{{"total", report.total},
                      {"completed", report.completed},
                      {"failures", json::array()}};
        for (const RunFailure& f : report.failures) {
            manifest["failures"].push_back(json{{"problem", f.problem},
                                                {"algorithm", f.algorithm},
                                                {"seed", f.seed},
                                                {"error", f.error}});
        }
        std::ofstream m(out / "manifest.json");
        m << manifest.dump(2) << "\n";
    }
    return report;
}

SummaryTable summarize(std::vector<RunRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: no records");
    }
    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.problem_label, a.algorithm, a.seed) <
               std::tie(b.problem_label, b.algorithm, b.seed);
    });

    SummaryTable table;
    std::size_t i = 0;
    while (i < records.size()) {
        std::size_t end = i;
        while (end < records.size() && records[end].problem_label == records[i].problem_label) {
            ++end;
        }
        ProblemSummary problem;
        problem.problem = records[i].problem_label;
        std::size_t a = i;
        while (a < end) {
            std::size_t b = a;
            while (b < end && records[b].algorithm == records[a].algorithm) {
                ++b;
            }
            AlgorithmSummary row;
            row.algorithm = records[a].algorithm;
            row.runs = static_cast<int>(b - a);
            std::vector<double> igd_values;
            std::vector<double> hv_values;
            std::vector<double> feasible_ratios;
            for (std::size_t k = a; k < b; ++k) {
                const RunRecord& r = records[k];
                if (r.metrics && r.metrics->igd) {
                    igd_values.push_back(*r.metrics->igd);
                }
                if (r.metrics && r.metrics->hv) {
                    hv_values.push_back(*r.metrics->hv);
                }
                const Population& pop = r.result.final_population;
                int feasible = 0;
                for (const Solution& s : pop) {
                    feasible += s.feasible() ? 1 : 0;
                }
                feasible_ratios.push_back(
                    pop.empty() ? 0.0
                                : static_cast<double>(feasible) / static_cast<double>(pop.size()));
            }
            row.igd_runs = static_cast<int>(igd_values.size());
            row.hv_runs = static_cast<int>(hv_values.size());
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.igd_mean = igd_values.empty() ? nan : mean_of(igd_values);
            row.igd_std = igd_values.empty() ? nan : sample_std(igd_values, row.igd_mean);
            row.hv_mean = hv_values.empty() ? nan : mean_of(hv_values);
            row.hv_std = hv_values.empty() ? nan : sample_std(hv_values, row.hv_mean);
            row.feasible_ratio_mean = mean_of(feasible_ratios);
            problem.rows.push_back(std::move(row));
            a = b;
        }
        table.problems.push_back(std::move(problem));
        i = end;
    }

    accumulate_ranks(table.problems, true, table.igd_ranks);
    accumulate_ranks(table.problems, false, table.hv_ranks);
    return table;
}

std::vector<RunRecord> load_run_records(const std::string& dir) {
    const fs::path root = fs::path(dir) / "runs";
    if (!fs::exists(root)) {
        throw ConfigError("no runs directory under " + dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> records;
    records.reserve(files.size());
    for (const fs::path& file : files) {
        records.push_back(load_run_record(file.string()));
    }
    return records;
}

void write_summary_files(const std::string& output_dir, const SummaryTable& table) {
    const fs::path out(output_dir);
    fs::create_directories(out / "tables");
    for (const ProblemSummary& problem : table.problems) {
        std::ofstream f(out / "tables" / (problem.problem + ".csv"));
        if (!f) {
            throw std::runtime_error("cannot write table for " + problem.problem);
        }
        f << "algorithm,runs,igd_runs,igd_mean,igd_std,hv_runs,hv_mean,hv_std,"
             "feasible_ratio_mean\n";
        for (const AlgorithmSummary& row : problem.rows) {
            f << row.algorithm << "," << row.runs << "," << row.igd_runs << ","
              << format_double(row.igd_mean) << "," << format_double(row.igd_std) << ","
              << row.hv_runs << "," << format_double(row.hv_mean) << ","
              << format_double(row.hv_std) << "," << format_double(row.feasible_ratio_mean)
              << "\n";
        }
    }
    std::ofstream f(out / "summary.csv");
    if (!f) {
        throw std::runtime_error("cannot write summary.csv");
    }
    f << "algorithm,igd_avg_rank,igd_problems,hv_avg_rank,hv_problems\n";
    std::map<std::string, std::pair<const RankEntry*, const RankEntry*>> by_algo;
    for (const RankEntry& e : table.igd_ranks) {
        by_algo[e.algorithm].first = &e;
    }
    for (const RankEntry& e : table.hv_ranks) {
        by_algo[e.algorithm].second = &e;
    }
    for (const auto& [algorithm, entries] : by_algo) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        f << algorithm << ","
          << format_double(entries.first ? entries.first->average_rank : nan) << ","
          << (entries.first ? entries.first->problems_ranked : 0) << ","
          << format_double(entries.second ? entries.second->average_rank : nan) << ","
          << (entries.second ? entries.second->problems_ranked : 0) << "\n";
    }
}

}  // namespace atmr
