#pragma once

#include "atmr/core.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace atmr {

using ProblemParams = std::map<std::string, double>;
using ProblemFactory = std::function<ProblemDefinition(const ProblemParams&)>;

// Generates at least `count` mutually nondominated feasible objective vectors
// approximating the constrained Pareto front.
using FrontGenerator = std::function<std::vector<Vector>(int count)>;

// Name-keyed problem factories plus optional reference-front generators.
// Registration happens once at startup; lookups are safe concurrently after
// that. Names are case-sensitive and unique.
class ProblemRegistry {
public:
    // cache_tag distinguishes generator settings (e.g. grid resolution) in
    // cache file names; use "analytic" for closed-form fronts.
    void add(const std::string& name, ProblemFactory factory);
    void add_front(const std::string& name, FrontGenerator generator, std::string cache_tag);

    ProblemDefinition get(const std::string& name, const ProblemParams& params = {}) const;
    bool has_front(const std::string& name) const;
    std::vector<Vector> front(const std::string& name, int count) const;
    std::string front_cache_tag(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, ProblemFactory> factories_;
    std::map<std::string, std::pair<FrontGenerator, std::string>> fronts_;
};

// The registry holding BNH, SRN, TNK, OSY and CORRIDOR. Built on first use.
ProblemRegistry& builtin_registry();

// Convenience lookups against the built-in registry.
ProblemDefinition get_problem(const std::string& name, const ProblemParams& params = {});

// Reference front for a built-in problem. Throws std::runtime_error when no
// generator is registered for the name. Deterministic for fixed (name, count).
std::vector<Vector> reference_front(const std::string& name, int count);

// Same, but backed by a CSV cache in cache_dir keyed by name, count and the
// generator's cache tag. The directory is created when missing.
std::vector<Vector> reference_front_cached(const std::string& name, int count,
                                           const std::string& cache_dir);

// CSV helpers shared by the front cache and the harness dumps: header
// f1,...,fm then one row per vector, 17 significant digits. An empty row set
// needs dim_if_empty > 0 to emit the header.
void write_objective_csv(const std::string& path, const std::vector<Vector>& rows,
                         int dim_if_empty = 0);
std::vector<Vector> read_objective_csv(const std::string& path);

}  // namespace atmr
