#include "atmr/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace atmr {

namespace {

// 4001 keeps the TNK skyline above 500 points; its wavy constraint boundary
// leaves far fewer nondominated grid columns than the monotone BNH/SRN fronts.
constexpr int kGridResolution = 4001;
constexpr double kDefaultDelta = 1e-4;

void require_no_params(const std::string& name, const ProblemParams& params) {
    if (!params.empty()) {
        throw std::invalid_argument("problem " + name + " takes no parameters");
    }
}

ProblemDefinition make_bnh(const ProblemParams& params) {
    require_no_params("BNH", params);
    ProblemDefinition p;
    p.name = "BNH";
    p.num_objectives = 2;
    p.dimension = 2;
    p.num_inequalities = 2;
    p.num_equalities = 0;
    p.lower = Vector{{0.0, 0.0}};
    p.upper = Vector{{5.0, 3.0}};
    p.evaluator = [](const Vector& x) {
        const double x1 = x[0];
        const double x2 = x[1];
        EvalOutput out;
        out.objectives = Vector{{4.0 * x1 * x1 + 4.0 * x2 * x2,
                                 (x1 - 5.0) * (x1 - 5.0) + (x2 - 5.0) * (x2 - 5.0)}};
        out.inequalities = Vector{{(x1 - 5.0) * (x1 - 5.0) + x2 * x2 - 25.0,
                                   7.7 - (x1 - 8.0) * (x1 - 8.0) - (x2 + 3.0) * (x2 + 3.0)}};
        out.equalities = Vector(0);
        return out;
    };
    return p;
}

ProblemDefinition make_srn(const ProblemParams& params) {
    require_no_params("SRN", params);
    ProblemDefinition p;
    p.name = "SRN";
    p.num_objectives = 2;
    p.dimension = 2;
    p.num_inequalities = 2;
    p.num_equalities = 0;
    p.lower = Vector{{-20.0, -20.0}};
    p.upper = Vector{{20.0, 20.0}};
    p.evaluator = [](const Vector& x) {
        const double x1 = x[0];
        const double x2 = x[1];
        EvalOutput out;
        out.objectives = Vector{{2.0 + (x1 - 2.0) * (x1 - 2.0) + (x2 - 1.0) * (x2 - 1.0),
                                 9.0 * x1 - (x2 - 1.0) * (x2 - 1.0)}};
        out.inequalities = Vector{{x1 * x1 + x2 * x2 - 225.0, x1 - 3.0 * x2 + 10.0}};
        out.equalities = Vector(0);
        return out;
    };
    return p;
}

ProblemDefinition make_tnk(const ProblemParams& params) {
    require_no_params("TNK", params);
    ProblemDefinition p;
    p.name = "TNK";
    p.num_objectives = 2;
    p.dimension = 2;
    p.num_inequalities = 2;
    p.num_equalities = 0;
    // Lower bound nudged off zero so atan2 never sees (0, 0).
    p.lower = Vector{{1e-12, 1e-12}};
    p.upper = Vector{{M_PI, M_PI}};
    p.evaluator = [](const Vector& x) {
        const double x1 = x[0];
        const double x2 = x[1];
        EvalOutput out;
        out.objectives = Vector{{x1, x2}};
        out.inequalities =
            Vector{{-(x1 * x1 + x2 * x2 - 1.0 - 0.1 * std::cos(16.0 * std::atan2(x1, x2))),
                    (x1 - 0.5) * (x1 - 0.5) + (x2 - 0.5) * (x2 - 0.5) - 0.5}};
        out.equalities = Vector(0);
        return out;
    };
    return p;
}

ProblemDefinition make_osy(const ProblemParams& params) {
    require_no_params("OSY", params);
    ProblemDefinition p;
    p.name = "OSY";
    p.num_objectives = 2;
    p.dimension = 6;
    p.num_inequalities = 6;
    p.num_equalities = 0;
    p.lower = Vector{{0.0, 0.0, 1.0, 0.0, 1.0, 0.0}};
    p.upper = Vector{{10.0, 10.0, 5.0, 6.0, 5.0, 10.0}};
    p.evaluator = [](const Vector& x) {
        const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5];
        EvalOutput out;
        out.objectives =
            Vector{{-(25.0 * (x1 - 2.0) * (x1 - 2.0) + (x2 - 2.0) * (x2 - 2.0) +
                      (x3 - 1.0) * (x3 - 1.0) + (x4 - 4.0) * (x4 - 4.0) + (x5 - 1.0) * (x5 - 1.0)),
                    x.squaredNorm()}};
        out.inequalities = Vector{{2.0 - x1 - x2,
                                   x1 + x2 - 6.0,
                                   x2 - x1 - 2.0,
                                   x1 - 3.0 * x2 - 2.0,
                                   (x3 - 3.0) * (x3 - 3.0) + x4 - 4.0,
                                   4.0 - (x5 - 3.0) * (x5 - 3.0) - x6}};
        out.equalities = Vector(0);
        return out;
    };
    return p;
}

ProblemDefinition make_corridor(const ProblemParams& params) {
    int dim = 10;
    for (const auto& [key, value] : params) {
        if (key != "D") {
            throw std::invalid_argument("problem CORRIDOR accepts only parameter D, got " + key);
        }
        dim = static_cast<int>(value);
        if (dim < 2 || static_cast<double>(dim) != value) {
            throw std::invalid_argument("CORRIDOR parameter D must be an integer >= 2");
        }
    }
    ProblemDefinition p;
    p.name = "CORRIDOR";
    p.num_objectives = 2;
    p.dimension = dim;
    p.num_inequalities = 1;
    p.num_equalities = 0;
    p.lower = Vector::Zero(dim);
    p.upper = Vector::Ones(dim);
    const double budget = 0.01 * (dim - 1);
    p.evaluator = [dim, budget](const Vector& x) {
        const double s = x.tail(dim - 1).sum();
        EvalOutput out;
        out.objectives = Vector{{x[0], 1.0 - x[0] + s}};
        out.inequalities = Vector{{s - budget}};
        out.equalities = Vector(0);
        return out;
    };
    return p;
}

// Dense 2-D decision-space sweep: evaluate the grid, keep feasible points,
// then keep the nondominated ones via a single skyline pass and thin evenly
// to the requested count.
std::vector<Vector> grid_front(const ProblemDefinition& problem, int count) {
    std::vector<std::pair<double, double>> feasible;
    const double lo1 = problem.lower[0], hi1 = problem.upper[0];
    const double lo2 = problem.lower[1], hi2 = problem.upper[1];
    std::int64_t evals = 0;
    Vector x(2);
    for (int i = 0; i < kGridResolution; ++i) {
        x[0] = lo1 + (hi1 - lo1) * i / (kGridResolution - 1);
        for (int j = 0; j < kGridResolution; ++j) {
            x[1] = lo2 + (hi2 - lo2) * j / (kGridResolution - 1);
            Solution s = evaluate(problem, x, kDefaultDelta, evals);
            if (s.feasible()) {
                feasible.emplace_back(s.objectives[0], s.objectives[1]);
            }
        }
    }
    std::sort(feasible.begin(), feasible.end());
    std::vector<std::pair<double, double>> skyline;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& [f1, f2] : feasible) {
        if (f2 < best_f2) {
            skyline.emplace_back(f1, f2);
            best_f2 = f2;
        }
    }
    if (static_cast<int>(skyline.size()) < count) {
        throw std::runtime_error("reference front for " + problem.name + " has only " +
                                 std::to_string(skyline.size()) +
                                 " nondominated grid points, need " + std::to_string(count));
    }
    std::vector<Vector> front;
    front.reserve(count);
    const std::size_t last = skyline.size() - 1;
    for (int i = 0; i < count; ++i) {
        const std::size_t k =
            count == 1 ? 0
                       : static_cast<std::size_t>(std::llround(static_cast<double>(i) *
                                                               static_cast<double>(last) /
                                                               (count - 1)));
        front.push_back(Vector{{skyline[k].first, skyline[k].second}});
    }
    return front;
}

std::vector<Vector> corridor_front(int count) {
    if (count < 2) {
        throw std::invalid_argument("reference front needs count >= 2");
    }
    std::vector<Vector> front;
    front.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double f1 = static_cast<double>(i) / (count - 1);
        front.push_back(Vector{{f1, 1.0 - f1}});
    }
    return front;
}

}  // namespace

void ProblemRegistry::add(const std::string& name, ProblemFactory factory) {
    if (!factories_.emplace(name, std::move(factory)).second) {
        throw std::invalid_argument("problem " + name + " is already registered");
    }
}

void ProblemRegistry::add_front(const std::string& name, FrontGenerator generator,
                                std::string cache_tag) {
    if (factories_.find(name) == factories_.end()) {
        throw std::invalid_argument("cannot register front for unknown problem " + name);
    }
    fronts_[name] = {std::move(generator), std::move(cache_tag)};
}

ProblemDefinition ProblemRegistry::get(const std::string& name, const ProblemParams& params) const {
    auto it = factories_.find(name);
    if (it == factories_.end()) {
        std::ostringstream msg;
        msg << "unknown problem " << name << "; registered problems:";
        for (const std::string& n : names()) {
            msg << " " << n;
        }
        throw std::invalid_argument(msg.str());
    }
    return it->second(params);
}

bool ProblemRegistry::has_front(const std::string& name) const {
    return fronts_.find(name) != fronts_.end();
}

std::vector<Vector> ProblemRegistry::front(const std::string& name, int count) const {
    auto it = fronts_.find(name);
    if (it == fronts_.end()) {
        throw std::invalid_argument("no reference front generator registered for " + name);
    }
    return it->second.first(count);
}

std::string ProblemRegistry::front_cache_tag(const std::string& name) const {
    auto it = fronts_.find(name);
    if (it == fronts_.end()) {
        throw std::invalid_argument("no reference front generator registered for " + name);
    }
    return it->second.second;
}

std::vector<std::string> ProblemRegistry::names() const {
    std::vector<std::string> result;
    result.reserve(factories_.size());
    for (const auto& [name, factory] : factories_) {
        result.push_back(name);
    }
    return result;
}

ProblemRegistry& builtin_registry() {
    static ProblemRegistry registry = [] {
        ProblemRegistry r;
        const std::string grid_tag = "g" + std::to_string(kGridResolution);
        r.add("BNH", make_bnh);
        r.add("SRN", make_srn);
        r.add("TNK", make_tnk);
        r.add("OSY", make_osy);
        r.add("CORRIDOR", make_corridor);
        r.add_front("BNH", [](int count) { return grid_front(make_bnh({}), count); }, grid_tag);
        r.add_front("SRN", [](int count) { return grid_front(make_srn({}), count); }, grid_tag);
        r.add_front("TNK", [](int count) { return grid_front(make_tnk({}), count); }, grid_tag);
        r.add_front("CORRIDOR", corridor_front, "analytic");
        return r;
    }();
    return registry;
}

ProblemDefinition get_problem(const std::string& name, const ProblemParams& params) {
    return builtin_registry().get(name, params);
}

std::vector<Vector> reference_front(const std::string& name, int count) {
    return builtin_registry().front(name, count);
}

std::vector<Vector> reference_front_cached(const std::string& name, int count,
                                           const std::string& cache_dir) {
    const ProblemRegistry& registry = builtin_registry();
    const std::string tag = registry.front_cache_tag(name);
    std::filesystem::create_directories(cache_dir);
    const std::filesystem::path path = std::filesystem::path(cache_dir) /
                                       (name + "_c" + std::to_string(count) + "_" + tag + ".csv");
    if (std::filesystem::exists(path)) {
        return read_objective_csv(path.string());
    }
    std::vector<Vector> front = registry.front(name, count);
    write_objective_csv(path.string(), front);
    return front;
}

void write_objective_csv(const std::string& path, const std::vector<Vector>& rows,
                         int dim_if_empty) {
    if (rows.empty() && dim_if_empty <= 0) {
        throw std::invalid_argument("write_objective_csv: no rows");
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    const Eigen::Index dim = rows.empty() ? dim_if_empty : rows.front().size();
    for (Eigen::Index j = 0; j < dim; ++j) {
        out << (j ? "," : "") << "f" << (j + 1);
    }
    out << "\n";
    char buffer[64];
    for (const Vector& row : rows) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", row[j]);
            out << (j ? "," : "") << buffer;
        }
        out << "\n";
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

std::vector<Vector> read_objective_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty CSV " + path);
    }
    std::vector<Vector> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> values;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            values.push_back(std::stod(cell));
        }
        Vector row(values.size());
        for (std::size_t j = 0; j < values.size(); ++j) {
            row[j] = values[j];
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("no data rows in " + path);
    }
    return rows;
}

}  // namespace atmr
