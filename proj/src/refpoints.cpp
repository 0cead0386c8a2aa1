#include "atmr/refpoints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace atmr {

namespace {

void fill_lattice(std::vector<Vector>& out, Vector& work, int position, int remaining,
                  int divisions) {
    const int last = static_cast<int>(work.size()) - 1;
    if (position == last) {
        work[position] = static_cast<double>(remaining) / divisions;
        out.push_back(work);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        work[position] = static_cast<double>(k) / divisions;
        fill_lattice(out, work, position + 1, remaining - k, divisions);
    }
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned long long>(n - k + i) /
                 static_cast<unsigned long long>(i);
    }
    return result;
}

}  // namespace

WeightVectorSet das_dennis(int num_objectives, int divisions) {
    if (num_objectives < 2) {
        throw std::invalid_argument("das_dennis: need at least two objectives");
    }
    if (divisions < 1) {
        throw std::invalid_argument("das_dennis: divisions must be positive");
    }
    WeightVectorSet set;
    set.origin = WeightOrigin::Regular;
    Vector work(num_objectives);
    fill_lattice(set.weights, work, 0, divisions, divisions);
    return set;
}

int smallest_lattice(int num_objectives, int min_count) {
    if (num_objectives < 2) {
        throw std::invalid_argument("smallest_lattice: need at least two objectives");
    }
    if (min_count < 1) {
        throw std::invalid_argument("smallest_lattice: min_count must be positive");
    }
    int h = 1;
    while (binomial(h + num_objectives - 1, num_objectives - 1) <
           static_cast<unsigned long long>(min_count)) {
        ++h;
    }
    return h;
}

NormalizationContext make_context(const std::vector<Vector>& points) {
    if (points.empty()) {
        throw std::invalid_argument("make_context: empty point set");
    }
    NormalizationContext ctx;
    ctx.ideal = points.front();
    ctx.nadir = points.front();
    for (const Vector& p : points) {
        if (p.size() != ctx.ideal.size()) {
            throw std::invalid_argument("make_context: points of mixed dimension");
        }
        ctx.ideal = ctx.ideal.cwiseMin(p);
        ctx.nadir = ctx.nadir.cwiseMax(p);
    }
    return ctx;
}

Vector normalize(const Vector& f, const NormalizationContext& ctx) {
    if (f.size() != ctx.ideal.size()) {
        throw std::invalid_argument("normalize: dimension mismatch");
    }
    Vector out(f.size());
    for (Eigen::Index j = 0; j < f.size(); ++j) {
        const double range = ctx.nadir[j] - ctx.ideal[j];
        out[j] = range > 0.0 ? (f[j] - ctx.ideal[j]) / range : 0.5;
    }
    return out;
}

int assign_to_weights(const Vector& normalized_f, const WeightVectorSet& weights, Rng& rng) {
    if (weights.weights.empty()) {
        throw std::invalid_argument("assign_to_weights: empty weight set");
    }
    const double norm_f = normalized_f.norm();
    const int count = static_cast<int>(weights.weights.size());
    if (norm_f == 0.0) {
        return static_cast<int>(rng.index(count));
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> ties;
    for (int k = 0; k < count; ++k) {
        const Vector& w = weights.weights[k];
        if (w.size() != normalized_f.size()) {
            throw std::invalid_argument("assign_to_weights: dimension mismatch");
        }
        double cosine = std::abs(normalized_f.dot(w)) / (norm_f * w.norm());
        cosine = std::min(cosine, 1.0);
        const double angle = std::acos(cosine);
        if (angle < best) {
            best = angle;
            ties.assign(1, k);
        } else if (angle == best) {
            ties.push_back(k);
        }
    }
    if (ties.size() == 1) {
        return ties.front();
    }
    return ties[rng.index(ties.size())];
}

WeightVectorSet adaptive_weights(const std::vector<Vector>& normalized_points) {
    if (normalized_points.empty()) {
        throw std::invalid_argument("adaptive_weights: empty point set");
    }
    WeightVectorSet set;
    set.origin = WeightOrigin::Adaptive;
    const Eigen::Index dim = normalized_points.front().size();
    for (int i = 0; i < static_cast<int>(normalized_points.size()); ++i) {
        const Vector& p = normalized_points[i];
        if (p.size() != dim) {
            throw std::invalid_argument("adaptive_weights: points of mixed dimension");
        }
        const double sum = p.sum();
        Vector w(dim);
        if (sum == 0.0) {
            w.setConstant(1.0 / static_cast<double>(dim));
        } else {
            w = p / sum;
        }
        set.weights.push_back(std::move(w));
        set.source_index.push_back(i);
    }
    return set;
}

}  // namespace atmr
