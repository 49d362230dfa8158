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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttp/instance.hpp"

namespace ttp {

/// Visiting order, 0-based; order[0] is always the depot (city 0).
struct Tour {
  std::vector<int> order;
  friend bool operator==(const Tour&, const Tour&) = default;
};

/// One selection flag per item, indexed like Instance::items().
struct PackingPlan {
  std::vector<std::uint8_t> selected;

  static PackingPlan empty(const Instance& inst) {
    return PackingPlan{std::vector<std::uint8_t>(static_cast<std::size_t>(inst.num_items()), 0)};
  }
  bool picks(int item) const { return selected[static_cast<std::size_t>(item)] != 0; }
  friend bool operator==(const PackingPlan&, const PackingPlan&) = default;
};

struct Solution {
  Tour tour;
  PackingPlan plan;
  double objective = 0.0;
};

class InfeasiblePlan : public std::domain_error {
 public:
  InfeasiblePlan(Weight overweight)
      : std::domain_error("packing plan exceeds capacity by " + std::to_string(overweight)),
        overweight_(overweight) {}
  Weight overweight() const { return overweight_; }

 private:
  Weight overweight_;
};

/// Tolerance used whenever two objective values are compared.
inline constexpr double kObjectiveTolerance = 1e-9;

inline bool same_objective(double a, double b, double rel = kObjectiveTolerance) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

inline Weight plan_weight(const Instance& inst, const PackingPlan& plan) {
  Weight total = 0;
  for (int i = 0; i < inst.num_items(); ++i) {
    if (plan.picks(i)) total += inst.item(i).weight;
  }
  return total;
}

inline Distance tour_length(const Instance& inst, const Tour& tour) {
  Distance total = 0;
  const std::size_t n = tour.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    total += inst.distance(tour.order[i], tour.order[(i + 1) % n]);
  }
  return total;
}

/// Travelling-thief objective: collected profit minus rent for the total
/// travel time, where each leg is driven at the speed implied by the weight
/// carried when leaving its start city.
inline double evaluate(const Instance& inst, const Tour& tour, const PackingPlan& plan) {
  const int n = inst.num_cities();
  if (static_cast<int>(tour.order.size()) != n) {
    throw std::invalid_argument("tour has " + std::to_string(tour.order.size()) +
                                " cities, instance has " + std::to_string(n));
  }
  if (static_cast<int>(plan.selected.size()) != inst.num_items()) {
    throw std::invalid_argument("packing plan size does not match item count");
  }
  const Weight total = plan_weight(inst, plan);
  if (total > inst.capacity()) throw InfeasiblePlan(total - inst.capacity());

  Profit profit = 0;
  Weight carried = 0;
  double time = 0.0;
  for (int i = 0; i < n; ++i) {
    const int city = tour.order[static_cast<std::size_t>(i)];
    for (int item : inst.items_at(city)) {
      if (plan.picks(item)) {
        carried += inst.item(item).weight;
        profit += inst.item(item).profit;
      }
    }
    const int next = tour.order[static_cast<std::size_t>((i + 1) % n)];
    const Distance d = inst.distance(city, next);
    if (d != 0) time += static_cast<double>(d) / inst.speed(carried);
  }
  return static_cast<double>(profit) - inst.renting_rate() * time;
}

inline bool is_valid_tour(const Instance& inst, const Tour& tour) {
  const int n = inst.num_cities();
  if (static_cast<int>(tour.order.size()) != n || tour.order.front() != 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c : tour.order) {
    if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) return false;
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return true;
}

/// Lists everything wrong with `solution`; an empty result means it is valid.
inline std::vector<std::string> validate(const Instance& inst, const Solution& solution) {
  std::vector<std::string> violations;
  const int n = inst.num_cities();
  const auto& order = solution.tour.order;

  bool permutation = static_cast<int>(order.size()) == n;
  if (permutation) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int c : order) {
      if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) {
        permutation = false;
        break;
      }
      seen[static_cast<std::size_t>(c)] = 1;
    }
  }
  if (!permutation) violations.emplace_back("not a permutation");
  if (!order.empty() && order.front() != 0) violations.emplace_back("tour does not start at city 1");

  const bool plan_sized = static_cast<int>(solution.plan.selected.size()) == inst.num_items();
  if (!plan_sized) violations.emplace_back("packing plan size does not match item count");

  bool feasible = false;
  if (plan_sized) {
    const Weight total = plan_weight(inst, solution.plan);
    if (total > inst.capacity()) {
      violations.push_back("capacity exceeded by " + std::to_string(total - inst.capacity()));
    } else {
      feasible = true;
    }
  }

  if (permutation && feasible) {
    const double z = evaluate(inst, solution.tour, solution.plan);
    if (!same_objective(z, solution.objective)) {
      std::ostringstream os;
      os.precision(17);
      os << "objective mismatch: reported " << solution.objective << ", recomputed " << z;
      violations.push_back(os.str());
    }
  }
  return violations;
}

/// Renders a tour with 1-based city numbers, e.g. "1 3 2 4".
inline std::string format_tour(const Tour& tour) {
  std::string out;
  for (std::size_t i = 0; i < tour.order.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(tour.order[i] + 1);
  }
  return out;
}

/// Renders a plan as the 1-based ids of its selected items.
inline std::string format_plan(const PackingPlan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.selected.size(); ++i) {
    if (!plan.selected[i]) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

}  // namespace ttp
