#pragma once

#include "atmr/core.hpp"
#include "atmr/ranking.hpp"
#include "atmr/rng.hpp"

#include <algorithm>
#include <set>
#include <vector>

// Shared helpers and independent reference implementations used as oracles.
namespace testsupport {

// Builds a solution directly (no problem evaluation). The id is stored as the
// decision vector so individual solutions can be traced through selections.
inline atmr::Solution make_solution(std::initializer_list<double> objectives, double violation,
                                    double id) {
    atmr::Solution s;
    s.x = atmr::Vector::Constant(1, id);
    s.objectives = atmr::Vector(static_cast<Eigen::Index>(objectives.size()));
    Eigen::Index j = 0;
    for (double v : objectives) {
        s.objectives[j++] = v;
    }
    s.inequalities = atmr::Vector(0);
    s.equalities = atmr::Vector(0);
    s.violation = violation;
    return s;
}

inline std::multiset<double> ids_of(const atmr::Population& pop) {
    std::multiset<double> ids;
    for (const atmr::Solution& s : pop) {
        ids.insert(s.x[0]);
    }
    return ids;
}

// Front partition by repeated peeling: a point is in the current front iff no
// remaining point dominates it. Quadratic per peel, used as the sorting
// oracle.
inline std::vector<std::vector<int>> oracle_fronts(const std::vector<atmr::Vector>& points) {
    std::vector<std::vector<int>> fronts;
    std::vector<int> remaining(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        remaining[i] = static_cast<int>(i);
    }
    while (!remaining.empty()) {
        std::vector<int> front;
        std::vector<int> rest;
        for (int i : remaining) {
            bool dominated = false;
            for (int j : remaining) {
                if (j != i && atmr::dominates(points[j], points[i])) {
                    dominated = true;
                    break;
                }
            }
            (dominated ? rest : front).push_back(i);
        }
        fronts.push_back(std::move(front));
        remaining = std::move(rest);
    }
    return fronts;
}

inline std::vector<atmr::Vector> random_points(atmr::Rng& rng, int count, int dim, double lo = 0.0,
                                               double hi = 1.0) {
    std::vector<atmr::Vector> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        atmr::Vector p(dim);
        for (int j = 0; j < dim; ++j) {
            p[j] = rng.uniform(lo, hi);
        }
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace testsupport
