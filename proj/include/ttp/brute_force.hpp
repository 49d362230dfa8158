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
#include <numeric>
#include <stdexcept>

#include "ttp/instance.hpp"
#include "ttp/report.hpp"
#include "ttp/solution.hpp"
#include "ttp/weight_profile.hpp"

namespace ttp {

inline constexpr int kBruteForceMaxCities = 9;

/// Enumerates all (n-1)! tours and packs each one optimally.
inline SolveReport solve_brute(const Instance& inst, double time_limit = 0.0) {
  if (inst.num_cities() > kBruteForceMaxCities) {
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceMaxCities) + " cities");
  }
  Deadline deadline(time_limit);
  SolveReport report;
  Tour tour;
  tour.order.resize(static_cast<std::size_t>(inst.num_cities()));
  std::iota(tour.order.begin(), tour.order.end(), 0);
  do {
    if (deadline.poll()) {
      report.status = Status::kTimeout;
      report.abort_reason = "time";
      report.seconds = deadline.elapsed();
      return report;
    }
    ++report.nodes;
    PackResult packed = pack_optimal(inst, tour);
    if (!report.solution || packed.objective > report.solution->objective) {
      report.solution = Solution{tour, std::move(packed.plan), packed.objective};
    }
  } while (std::next_permutation(tour.order.begin() + 1, tour.order.end()));
  report.solution->objective = evaluate(inst, report.solution->tour, report.solution->plan);
  report.status = Status::kOptimal;
  report.seconds = deadline.elapsed();
  return report;
}

}  // namespace ttp
