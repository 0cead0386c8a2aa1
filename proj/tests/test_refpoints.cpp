#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "atmr/refpoints.hpp"
#include "atmr/rng.hpp"
#include "support.hpp"

using atmr::Vector;

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return r;
}

}  // namespace

TEST_CASE("das_dennis: m=2 H=3 exact set in lexicographic order") {
  auto set = atmr::das_dennis(2, 3);
  CHECK(set.origin == atmr::WeightOrigin::Regular);
  CHECK(set.source_index.empty());
  REQUIRE(set.weights.size() == 4);
  CHECK(set.weights[0] == Vector{{0.0, 1.0}});
  CHECK(set.weights[1] == Vector{{1.0 / 3.0, 2.0 / 3.0}});
  CHECK(set.weights[2] == Vector{{2.0 / 3.0, 1.0 / 3.0}});
  CHECK(set.weights[3] == Vector{{1.0, 0.0}});
}

TEST_CASE("das_dennis: m=3 H=2 exact set") {
  auto set = atmr::das_dennis(3, 2);
  REQUIRE(set.weights.size() == 6);
  CHECK(set.weights[0] == Vector{{0.0, 0.0, 1.0}});
  CHECK(set.weights[1] == Vector{{0.0, 0.5, 0.5}});
  CHECK(set.weights[2] == Vector{{0.0, 1.0, 0.0}});
  CHECK(set.weights[3] == Vector{{0.5, 0.0, 0.5}});
  CHECK(set.weights[4] == Vector{{0.5, 0.5, 0.0}});
  CHECK(set.weights[5] == Vector{{1.0, 0.0, 0.0}});
}

TEST_CASE("das_dennis: counts, sums, and uniqueness across sizes") {
  for (int m = 2; m <= 4; ++m) {
    for (int h = 1; h <= (m == 4 ? 8 : 20); ++h) {
      auto set = atmr::das_dennis(m, h);
      CHECK(set.weights.size() == binom(h + m - 1, m - 1));
      std::set<std::vector<double>> uniq;
      for (const auto& v : set.weights) {
        REQUIRE(v.size() == m);
        CHECK(std::abs(v.sum() - 1.0) <= 1e-12);
        CHECK(v.minCoeff() >= 0.0);
        CHECK(v.maxCoeff() <= 1.0);
        uniq.insert(std::vector<double>(v.data(), v.data() + v.size()));
      }
      CHECK(uniq.size() == set.weights.size());
    }
  }
}

TEST_CASE("das_dennis: invalid arguments") {
  CHECK_THROWS_AS(atmr::das_dennis(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(atmr::das_dennis(2, 0), std::invalid_argument);
}

TEST_CASE("smallest_lattice: worked examples") {
  CHECK(atmr::smallest_lattice(2, 1) == 1);
  CHECK(atmr::smallest_lattice(2, 4) == 3);
  CHECK(atmr::smallest_lattice(2, 7) == 6);
  CHECK(atmr::smallest_lattice(2, 100) == 99);
  CHECK(atmr::smallest_lattice(3, 3) == 1);
  CHECK(atmr::smallest_lattice(3, 4) == 2);
  CHECK(atmr::smallest_lattice(3, 10) == 3);
  CHECK(atmr::smallest_lattice(3, 11) == 4);
  CHECK_THROWS_AS(atmr::smallest_lattice(2, 0), std::invalid_argument);
}

TEST_CASE("smallest_lattice: minimality property") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 60; ++n) {
      const int h = atmr::smallest_lattice(m, n);
      CHECK(atmr::das_dennis(m, h).weights.size() >= static_cast<std::size_t>(n));
      if (h > 1) {
        CHECK(atmr::das_dennis(m, h - 1).weights.size() < static_cast<std::size_t>(n));
      }
    }
  }
}

TEST_CASE("make_context and normalize: worked example") {
  std::vector<Vector> pts = {Vector{{1.0, 10.0}}, Vector{{3.0, 4.0}}, Vector{{2.0, 7.0}}};
  auto ctx = atmr::make_context(pts);
  CHECK(ctx.ideal == Vector{{1.0, 4.0}});
  CHECK(ctx.nadir == Vector{{3.0, 10.0}});

  CHECK(atmr::normalize(Vector{{2.0, 7.0}}, ctx) == Vector{{0.5, 0.5}});
  CHECK(atmr::normalize(ctx.ideal, ctx) == Vector{{0.0, 0.0}});
  CHECK(atmr::normalize(ctx.nadir, ctx) == Vector{{1.0, 1.0}});
}

TEST_CASE("normalize: degenerate range maps to 0.5") {
  std::vector<Vector> pts = {Vector{{2.0, 1.0}}, Vector{{2.0, 3.0}}};
  auto ctx = atmr::make_context(pts);
  auto z = atmr::normalize(Vector{{2.0, 2.0}}, ctx);
  CHECK(z[0] == 0.5);
  CHECK(z[1] == 0.5);
}

TEST_CASE("normalize: affine round trip within the window") {
  atmr::Rng rng(99);
  for (int it = 0; it < 50; ++it) {
    auto pts = testsupport::random_points(rng, 6, 3, -5.0, 5.0);
    auto ctx = atmr::make_context(pts);
    for (const auto& p : pts) {
      auto z = atmr::normalize(p, ctx);
      Vector back = ctx.ideal.array() + z.array() * (ctx.nadir - ctx.ideal).array();
      CHECK((back - p).cwiseAbs().maxCoeff() <= 1e-9);
      CHECK(z.minCoeff() >= -1e-12);
      CHECK(z.maxCoeff() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("make_context and normalize: reject bad input") {
  CHECK_THROWS_AS(atmr::make_context({}), std::invalid_argument);
  std::vector<Vector> ragged = {Vector{{1.0, 2.0}}, Vector{{1.0}}};
  CHECK_THROWS_AS(atmr::make_context(ragged), std::invalid_argument);
  auto ctx = atmr::make_context({Vector{{0.0, 0.0}}, Vector{{1.0, 1.0}}});
  CHECK_THROWS_AS(atmr::normalize(Vector{{1.0, 2.0, 3.0}}, ctx), std::invalid_argument);
}

TEST_CASE("assign_to_weights: worked example") {
  auto weights = atmr::das_dennis(2, 3);
  atmr::Rng rng(1);
  CHECK(atmr::assign_to_weights(Vector{{0.05, 1.0}}, weights, rng) == 0);
  CHECK(atmr::assign_to_weights(Vector{{1.0, 0.05}}, weights, rng) == 3);
  CHECK(atmr::assign_to_weights(Vector{{1.0, 2.01}}, weights, rng) == 1);
  CHECK(atmr::assign_to_weights(Vector{{2.01, 1.0}}, weights, rng) == 2);
}

TEST_CASE("assign_to_weights: scale invariance with exact binary scaling") {
  auto weights = atmr::das_dennis(3, 4);
  atmr::Rng gen(2024);
  auto pts = testsupport::random_points(gen, 30, 3, 0.01, 1.0);
  for (const auto& p : pts) {
    atmr::Rng r1(7);
    atmr::Rng r2(7);
    const int base = atmr::assign_to_weights(p, weights, r1);
    const int same = atmr::assign_to_weights(Vector(p * 4.0), weights, r2);
    CHECK(base == same);
  }
}

TEST_CASE("assign_to_weights: member of the exhaustive min-angle set") {
  atmr::Rng gen(31337);
  auto weights = atmr::das_dennis(2, 5);
  for (int it = 0; it < 200; ++it) {
    auto pts = testsupport::random_points(gen, 8, 2, 0.001, 1.0);
    atmr::Rng pick(static_cast<std::uint64_t>(it));
    for (const auto& p : pts) {
      const int got = atmr::assign_to_weights(p, weights, pick);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& w : weights.weights) {
        double cosv = std::abs(p.dot(w)) / (p.norm() * w.norm());
        cosv = std::min(cosv, 1.0);
        best = std::min(best, std::acos(cosv));
      }
      std::vector<int> tied;
      for (std::size_t j = 0; j < weights.weights.size(); ++j) {
        const auto& w = weights.weights[j];
        double cosv = std::abs(p.dot(w)) / (p.norm() * w.norm());
        cosv = std::min(cosv, 1.0);
        if (std::acos(cosv) <= best + 1e-12) tied.push_back(static_cast<int>(j));
      }
      CHECK(std::find(tied.begin(), tied.end(), got) != tied.end());
    }
  }
}

TEST_CASE("assign_to_weights: zero vector draws uniformly") {
  auto weights = atmr::das_dennis(2, 3);
  std::set<int> seen;
  for (std::uint64_t s = 0; s < 64; ++s) {
    atmr::Rng rng(s);
    const int got = atmr::assign_to_weights(Vector{{0.0, 0.0}}, weights, rng);
    CHECK(got >= 0);
    CHECK(got < 4);
    seen.insert(got);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("assign_to_weights: exact ties pick among the tied set") {
  atmr::WeightVectorSet weights;
  weights.weights = {Vector{{0.0, 1.0}}, Vector{{1.0, 0.0}}};
  std::set<int> seen;
  for (std::uint64_t s = 0; s < 32; ++s) {
    atmr::Rng rng(s);
    seen.insert(atmr::assign_to_weights(Vector{{1.0, 1.0}}, weights, rng));
  }
  CHECK(seen == std::set<int>{0, 1});
}

TEST_CASE("assign_to_weights: rejects bad input") {
  atmr::Rng rng(1);
  atmr::WeightVectorSet empty;
  CHECK_THROWS_AS(atmr::assign_to_weights(Vector{{1.0, 1.0}}, empty, rng),
                  std::invalid_argument);
  atmr::WeightVectorSet wrong;
  wrong.weights = {Vector{{1.0, 0.0, 0.0}}};
  CHECK_THROWS_AS(atmr::assign_to_weights(Vector{{1.0, 1.0}}, wrong, rng),
                  std::invalid_argument);
}

TEST_CASE("adaptive_weights: worked examples") {
  std::vector<Vector> pts = {Vector{{0.5, 1.5}}, Vector{{0.0, 0.0}}, Vector{{1.0, 3.0}}};
  auto set = atmr::adaptive_weights(pts);
  CHECK(set.origin == atmr::WeightOrigin::Adaptive);
  REQUIRE(set.weights.size() == 3);
  CHECK(set.weights[0] == Vector{{0.25, 0.75}});
  CHECK(set.weights[1] == Vector{{0.5, 0.5}});  // zero sum falls back to uniform
  CHECK(set.weights[2] == Vector{{0.25, 0.75}});
  REQUIRE(set.source_index.size() == 3);
  CHECK(set.source_index[0] == 0);
  CHECK(set.source_index[1] == 1);
  CHECK(set.source_index[2] == 2);
}

TEST_CASE("adaptive_weights: rows sum to one") {
  atmr::Rng rng(8);
  auto pts = testsupport::random_points(rng, 25, 3, 0.0, 2.0);
  auto set = atmr::adaptive_weights(pts);
  for (const auto& w : set.weights) {
    CHECK(std::abs(w.sum() - 1.0) <= 1e-12);
    CHECK(w.minCoeff() >= 0.0);
  }
}

TEST_CASE("adaptive_weights: rejects bad input") {
  CHECK_THROWS_AS(atmr::adaptive_weights({}), std::invalid_argument);
  std::vector<Vector> ragged = {Vector{{1.0, 2.0}}, Vector{{1.0}}};
  CHECK_THROWS_AS(atmr::adaptive_weights(ragged), std::invalid_argument);
}
