#include "atmr/ranking.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace atmr {

bool dominates(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: vectors of length " + std::to_string(a.size()) +
                                    " and " + std::to_string(b.size()));
    }
    bool strictly_better = false;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
        if (a[j] < b[j]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

Ordering cdp_compare(const Solution& a, const Solution& b) {
    const bool fa = a.feasible();
    const bool fb = b.feasible();
    if (!fa && !fb) {
        if (a.violation < b.violation) return Ordering::FirstBetter;
        if (b.violation < a.violation) return Ordering::SecondBetter;
        return Ordering::Tie;
    }
    if (fa != fb) {
        return fa ? Ordering::FirstBetter : Ordering::SecondBetter;
    }
    if (dominates(a.objectives, b.objectives)) return Ordering::FirstBetter;
    if (dominates(b.objectives, a.objectives)) return Ordering::SecondBetter;
    return Ordering::Tie;
}

bool cdp_dominates(const Solution& a, const Solution& b) {
    return cdp_compare(a, b) == Ordering::FirstBetter;
}

FrontPartition sort_by_dominance(int n, const std::function<bool(int, int)>& dom) {
    if (n <= 0) {
        throw std::invalid_argument("sort_by_dominance: need at least one item");
    }
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> count(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dom(i, j)) {
                dominated[i].push_back(j);
                ++count[j];
            } else if (dom(j, i)) {
                dominated[j].push_back(i);
                ++count[i];
            }
        }
    }

    FrontPartition result;
    std::vector<int> current;
    for (int i = 0; i < n; ++i) {
        if (count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<int> next;
        for (int i : current) {
            for (int j : dominated[i]) {
                if (--count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        result.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return result;
}

FrontPartition nondominated_sort(const std::vector<Vector>& points) {
    if (points.empty()) {
        throw std::invalid_argument("nondominated_sort: empty input");
    }
    const Eigen::Index dim = points.front().size();
    for (const Vector& p : points) {
        if (p.size() != dim) {
            throw std::invalid_argument("nondominated_sort: points of mixed dimension");
        }
    }
    return sort_by_dominance(static_cast<int>(points.size()),
                             [&](int i, int j) { return dominates(points[i], points[j]); });
}

std::vector<double> crowding_distance(const std::vector<Vector>& members) {
    const int n = static_cast<int>(members.size());
    std::vector<double> dist(n, 0.0);
    if (n == 0) {
        return dist;
    }
    const double inf = std::numeric_limits<double>::infinity();
    const Eigen::Index dim = members.front().size();
    std::vector<int> idx(n);
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return members[a][j] < members[b][j]; });
        dist[idx.front()] = inf;
        dist[idx.back()] = inf;
        const double range = members[idx.back()][j] - members[idx.front()][j];
        if (range > 0.0) {
            for (int k = 1; k + 1 < n; ++k) {
                dist[idx[k]] += (members[idx[k + 1]][j] - members[idx[k - 1]][j]) / range;
            }
        }
    }
    return dist;
}

}  // namespace atmr
