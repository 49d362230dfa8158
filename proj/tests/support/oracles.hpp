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

// Slow, independent reference implementations used only by tests. Nothing
// here calls into the solver headers beyond reading instance fields, so a
// bug in the library cannot hide in its own oracle.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/solution.hpp"

namespace oracle {

using ttp::Instance;

/// Euclidean distance rounded up, recomputed from coordinates.
inline long long dist(const Instance& inst, int a, int b) {
  if (a == b) return 0;
  const auto& p = inst.coords()[static_cast<std::size_t>(a)];
  const auto& q = inst.coords()[static_cast<std::size_t>(b)];
  return static_cast<long long>(std::ceil(std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y))));
}

/// The TTP objective written out directly from its definition.
/// `order` lists 0-based cities starting at 0; `take[j]` selects item j.
/// Returns -inf for an overweight plan.
inline double objective(const Instance& inst, const std::vector<int>& order, const std::vector<int>& take) {
  const int n = inst.num_cities();
  long long total_w = 0;
  long long profit = 0;
  for (int j = 0; j < inst.num_items(); ++j) {
    if (take[static_cast<std::size_t>(j)]) {
      total_w += inst.items()[static_cast<std::size_t>(j)].weight;
      profit += inst.items()[static_cast<std::size_t>(j)].profit;
    }
  }
  if (total_w > inst.capacity()) return -std::numeric_limits<double>::infinity();
  const double nu = (inst.max_speed() - inst.min_speed()) / static_cast<double>(inst.capacity());
  double time = 0.0;
  long long carried = 0;
  for (int i = 0; i < n; ++i) {
    const int city = order[static_cast<std::size_t>(i)];
    for (int j = 0; j < inst.num_items(); ++j) {
      if (take[static_cast<std::size_t>(j)] && inst.items()[static_cast<std::size_t>(j)].city == city) {
        carried += inst.items()[static_cast<std::size_t>(j)].weight;
      }
    }
    const int next = order[static_cast<std::size_t>((i + 1) % n)];
    const long long d = dist(inst, city, next);
    if (d == 0) continue;
    const double v = carried >= inst.capacity() ? inst.min_speed() : inst.max_speed() - nu * static_cast<double>(carried);
    time += static_cast<double>(d) / v;
  }
  return static_cast<double>(profit) - inst.renting_rate() * time;
}

inline std::vector<int> mask_to_plan(const Instance& inst, std::uint32_t mask) {
  std::vector<int> take(static_cast<std::size_t>(inst.num_items()));
  for (int j = 0; j < inst.num_items(); ++j) take[static_cast<std::size_t>(j)] = static_cast<int>(mask >> j & 1u);
  return take;
}

/// Best packing for a fixed tour by trying all 2^m plans.
inline double best_packing(const Instance& inst, const std::vector<int>& order) {
  double best = -std::numeric_limits<double>::infinity();
  const std::uint32_t plans = 1u << inst.num_items();
  for (std::uint32_t mask = 0; mask < plans; ++mask) best = std::max(best, objective(inst, order, mask_to_plan(inst, mask)));
  return best;
}

/// Optimal TTP value by enumerating every tour and every plan.
inline double best_ttp(const Instance& inst) {
  std::vector<int> order(static_cast<std::size_t>(inst.num_cities()));
  std::iota(order.begin(), order.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  do {
    best = std::max(best, best_packing(inst, order));
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

/// Shortest closed tour by enumeration.
inline long long tsp_length(const Instance& inst) {
  std::vector<int> order(static_cast<std::size_t>(inst.num_cities()));
  std::iota(order.begin(), order.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  do {
    long long len = 0;
    for (std::size_t i = 0; i < order.size(); ++i) len += dist(inst, order[i], order[(i + 1) % order.size()]);
    best = std::min(best, len);
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

/// Best objective over all completions of a tour prefix (all plans).
inline double best_completion(const Instance& inst, const std::vector<int>& prefix) {
  std::vector<int> rest;
  for (int c = 0; c < inst.num_cities(); ++c) {
    if (std::find(prefix.begin(), prefix.end(), c) == prefix.end()) rest.push_back(c);
  }
  std::sort(rest.begin(), rest.end());
  double best = -std::numeric_limits<double>::infinity();
  do {
    std::vector<int> order = prefix;
    order.insert(order.end(), rest.begin(), rest.end());
    best = std::max(best, best_packing(inst, order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

struct RandomSpec {
  int n = 5;
  int m = 5;
  int coord_range = 100;
  int weight_range = 100;
  int profit_range = 100;
};

/// Random instance with uniformly drawn coordinates, items and capacity.
inline Instance random_instance(std::mt19937_64& gen, const RandomSpec& spec) {
  std::uniform_int_distribution<int> coord(0, spec.coord_range);
  std::uniform_int_distribution<int> weight(1, spec.weight_range);
  std::uniform_int_distribution<int> profit(1, spec.profit_range);
  std::uniform_int_distribution<int> city(1, spec.n - 1);
  std::uniform_real_distribution<double> rate(0.05, 3.0);
  ttp::InstanceData d;
  d.name = "random_n" + std::to_string(spec.n) + "_m" + std::to_string(spec.m);
  d.knapsack_type = "random";
  for (int i = 0; i < spec.n; ++i) d.coords.push_back({static_cast<double>(coord(gen)), static_cast<double>(coord(gen))});
  long long total = 0;
  for (int j = 0; j < spec.m; ++j) {
    d.items.push_back(ttp::Item{city(gen), profit(gen), weight(gen)});
    total += d.items.back().weight;
  }
  std::uniform_int_distribution<long long> cap(std::max<long long>(1, total / 5), std::max<long long>(1, total));
  d.capacity = cap(gen);
  d.renting_rate = std::round(rate(gen) * 100.0) / 100.0;
  return Instance(std::move(d));
}

}  // namespace oracle
