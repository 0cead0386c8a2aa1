#include "atmr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace atmr {

namespace {

// Area of the union of rectangles [p, ref] for 2-D points; callers have
// already discarded points outside the reference box.
double sweep_area_2d(std::vector<std::pair<double, double>> pts, double ref_x, double ref_y) {
    if (pts.empty()) {
        return 0.0;
    }
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double best_y = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> skyline;
    for (const auto& [x, y] : pts) {
        if (y < best_y) {
            skyline.emplace_back(x, y);
            best_y = y;
        }
    }
    for (std::size_t i = 0; i < skyline.size(); ++i) {
        const double next_x = i + 1 < skyline.size() ? skyline[i + 1].first : ref_x;
        area += (next_x - skyline[i].first) * (ref_y - skyline[i].second);
    }
    return area;
}

}  // namespace

double igd(const std::vector<Vector>& approx, const std::vector<Vector>& reference) {
    if (approx.empty() || reference.empty()) {
        throw std::invalid_argument("igd: both point sets must be nonempty");
    }
    double total = 0.0;
    for (const Vector& r : reference) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Vector& a : approx) {
            nearest = std::min(nearest, (r - a).norm());
        }
        total += nearest;
    }
    return total / static_cast<double>(reference.size());
}

double hypervolume(const std::vector<Vector>& points, const Vector& ref_point) {
    const Eigen::Index m = ref_point.size();
    if (m < 2) {
        throw std::invalid_argument("hypervolume: need at least two objectives");
    }
    if (m > 3) {
        throw std::runtime_error("hypervolume: exact computation supports at most 3 objectives");
    }
    std::vector<Vector> inside;
    for (const Vector& p : points) {
        if (p.size() != m) {
            throw std::invalid_argument("hypervolume: dimension mismatch");
        }
        if ((p.array() <= ref_point.array()).all()) {
            inside.push_back(p);
        }
    }
    if (inside.empty()) {
        return 0.0;
    }
    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(inside.size());
        for (const Vector& p : inside) {
            pts.emplace_back(p[0], p[1]);
        }
        return sweep_area_2d(std::move(pts), ref_point[0], ref_point[1]);
    }

    // Sweep the third objective: between consecutive cut levels the covered
    // cross-section is constant, so the volume is a sum of slab areas.
    std::sort(inside.begin(), inside.end(),
              [](const Vector& a, const Vector& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::pair<double, double>> active;
    std::size_t i = 0;
    while (i < inside.size()) {
        const double level = inside[i][2];
        while (i < inside.size() && inside[i][2] == level) {
            active.emplace_back(inside[i][0], inside[i][1]);
            ++i;
        }
        const double next_level = i < inside.size() ? inside[i][2] : ref_point[2];
        volume += sweep_area_2d(active, ref_point[0], ref_point[1]) * (next_level - level);
    }
    return volume;
}

double hv_monte_carlo(const std::vector<Vector>& points, const Vector& ref_point,
                      std::int64_t samples, Rng& rng) {
    if (samples < 1) {
        throw std::invalid_argument("hv_monte_carlo: need at least one sample");
    }
    if (points.empty()) {
        return 0.0;
    }
    const Eigen::Index m = ref_point.size();
    Vector lo = points.front();
    for (const Vector& p : points) {
        if (p.size() != m) {
            throw std::invalid_argument("hv_monte_carlo: dimension mismatch");
        }
        lo = lo.cwiseMin(p);
    }
    double box = 1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
        const double width = ref_point[j] - lo[j];
        if (width <= 0.0) {
            return 0.0;
        }
        box *= width;
    }
    std::int64_t hits = 0;
    Vector sample(m);
    for (std::int64_t s = 0; s < samples; ++s) {
        for (Eigen::Index j = 0; j < m; ++j) {
            sample[j] = rng.uniform(lo[j], ref_point[j]);
        }
        for (const Vector& p : points) {
            if ((p.array() <= sample.array()).all()) {
                ++hits;
                break;
            }
        }
    }
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

MetricReport evaluate_final_population(const Population& population,
                                       const std::vector<Vector>& reference_front) {
    if (reference_front.empty()) {
        throw std::invalid_argument("evaluate_final_population: empty reference front");
    }
    MetricReport report;
    std::vector<Vector> feasible;
    for (const Solution& s : population) {
        if (s.feasible()) {
            feasible.push_back(s.objectives);
        }
    }
    report.n_points = static_cast<int>(feasible.size());
    report.feasible_ratio =
        population.empty() ? 0.0
                           : static_cast<double>(feasible.size()) /
                                 static_cast<double>(population.size());
    if (feasible.empty()) {
        return report;
    }
    report.igd = igd(feasible, reference_front);
    Vector nadir = reference_front.front();
    for (const Vector& r : reference_front) {
        nadir = nadir.cwiseMax(r);
    }
    report.hv_reference = nadir * 1.1;
    report.hv = hypervolume(feasible, *report.hv_reference);
    return report;
}

}  // namespace atmr
