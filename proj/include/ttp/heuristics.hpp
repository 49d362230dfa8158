// Copyright 2026 The ttp-exact Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tour construction and the sample-then-pack hybrids. A tour is sampled by a
// randomized nearest-neighbour walk polished with 2-OPT, then packed exactly
// by the weight-profile DP. dp_s1 does this once; dp_s5 repeats it and keeps
// the best.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/report.hpp"
#include "ttp/rng.hpp"
#include "ttp/solution.hpp"
#include "ttp/weight_profile.hpp"

namespace ttp {

/// Greedy tour from `start` (0-based); ties go to the lower city index.
inline Tour nearest_neighbor_tour(const Instance& inst, int start = 0) {
  const int n = inst.num_cities();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  Tour tour;
  tour.order.reserve(static_cast<std::size_t>(n));
  int current = start;
  used[static_cast<std::size_t>(current)] = 1;
  tour.order.push_back(current);
  for (int step = 1; step < n; ++step) {
    int next = -1;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      if (next < 0 || inst.distance(current, c) < inst.distance(current, next)) next = c;
    }
    used[static_cast<std::size_t>(next)] = 1;
    tour.order.push_back(next);
    current = next;
  }
  return tour;
}

/// First-improvement 2-OPT on tour length. Position 0 is never moved.
inline Tour two_opt(const Instance& inst, Tour tour) {
  auto& t = tour.order;
  const int n = static_cast<int>(t.size());
  if (n < 4) return tour;
  const auto d = [&](int a, int b) { return inst.distance(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]); };
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 1; i < n - 1 && !improved; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int after = (j + 1) % n;
        const Distance delta = d(i - 1, j) + d(i, after) - d(i - 1, i) - d(j, after);
        if (delta < 0) {
          std::reverse(t.begin() + i, t.begin() + j + 1);
          improved = true;
          break;
        }
      }
    }
  }
  return tour;
}

/// Same cycle driven the other way round, still starting at the depot.
inline Tour reversed(const Tour& tour) {
  Tour r;
  r.order.reserve(tour.order.size());
  r.order.push_back(tour.order.front());
  r.order.insert(r.order.end(), tour.order.rbegin(), tour.order.rend() - 1);
  return r;
}

struct TourSamplerConfig {
  std::uint64_t seed = 0;
  int candidates = 3;  // randomized NN picks among this many nearest cities
  bool two_opt = true;
};

/// Randomized nearest-neighbour tour: each step moves to one of the
/// `candidates` closest unvisited cities, uniformly.
inline Tour sample_tour(const Instance& inst, const TourSamplerConfig& cfg) {
  Rng rng(cfg.seed);
  const int n = inst.num_cities();
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  Tour tour;
  tour.order.push_back(0);
  int current = 0;
  while (!rest.empty()) {
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      return inst.distance(current, a) < inst.distance(current, b);
    });
    const int pool = std::min<int>(std::max(cfg.candidates, 1), static_cast<int>(rest.size()));
    const auto pick = static_cast<std::size_t>(rng.uniform_int(0, pool - 1));
    current = rest[pick];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    tour.order.push_back(current);
  }
  return cfg.two_opt ? two_opt(inst, std::move(tour)) : tour;
}

/// Packs both orientations of `tour` optimally and keeps the better one.
inline Solution pack_best_orientation(const Instance& inst, const Tour& tour) {
  PackResult fwd = pack_optimal(inst, tour);
  Tour back = reversed(tour);
  PackResult bwd = pack_optimal(inst, back);
  Solution s;
  if (bwd.objective > fwd.objective) {
    s.tour = std::move(back);
    s.plan = std::move(bwd.plan);
  } else {
    s.tour = tour;
    s.plan = std::move(fwd.plan);
  }
  s.objective = evaluate(inst, s.tour, s.plan);
  return s;
}

/// One sampled tour plus its optimal packing.
inline Solution dp_s1(const Instance& inst, std::uint64_t seed) {
  TourSamplerConfig cfg;
  cfg.seed = mix_seed(seed, 0);
  return pack_best_orientation(inst, sample_tour(inst, cfg));
}

struct RestartBudget {
  int restarts = 1;        // used when seconds <= 0
  double seconds = 0.0;    // wall-clock mode when positive
};

struct Dps5Result {
  Solution best;
  std::vector<double> best_so_far;  // after each restart
  int restarts = 0;
};

/// Repeats dp_s1 with the seed stream mix_seed(seed, r), r = 0, 1, ...
inline Dps5Result dp_s5(const Instance& inst, RestartBudget budget, std::uint64_t seed) {
  Dps5Result result;
  Deadline deadline(budget.seconds);
  const bool timed = budget.seconds > 0.0;
  for (int r = 0;; ++r) {
    if (timed ? (r > 0 && deadline.expired()) : r >= std::max(budget.restarts, 1)) break;
    TourSamplerConfig cfg;
    cfg.seed = mix_seed(seed, static_cast<std::uint64_t>(r));
    Solution s = pack_best_orientation(inst, sample_tour(inst, cfg));
    if (r == 0 || s.objective > result.best.objective) result.best = std::move(s);
    result.best_so_far.push_back(result.best.objective);
    result.restarts = r + 1;
  }
  return result;
}

}  // namespace ttp
