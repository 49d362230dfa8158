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
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ttp/instance.hpp"

namespace ttp {

/// Optimal closed-tour length via Held-Karp over subsets of cities 1..n-1.
/// Memory is 2^(n-1) * (n-1) 32-bit cells.
inline Distance precompute_tsp_optimum(const Instance& inst) {
  const int n = inst.num_cities();
  if (n > Instance::kMaxCities) {
    throw std::invalid_argument("exact tour length needs n <= 24; use the BASE or FARTHEST bound");
  }
  if (n == 2) return 2 * inst.distance(0, 1);
  const int k = n - 1;  // cities 1..n-1 map to bits 0..k-1
  const std::size_t subsets = std::size_t{1} << k;
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dp(subsets * static_cast<std::size_t>(k), kInf);
  const auto cell = [k](std::size_t mask, int end) { return mask * static_cast<std::size_t>(k) + static_cast<std::size_t>(end); };

  for (int j = 0; j < k; ++j) dp[cell(std::size_t{1} << j, j)] = static_cast<std::uint32_t>(inst.distance(0, j + 1));
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int end = 0; end < k; ++end) {
      if (!(mask >> end & 1)) continue;
      const std::uint32_t here = dp[cell(mask, end)];
      if (here == kInf) continue;
      for (int next = 0; next < k; ++next) {
        if (mask >> next & 1) continue;
        const std::size_t to = mask | (std::size_t{1} << next);
        const auto cand = here + static_cast<std::uint32_t>(inst.distance(end + 1, next + 1));
        std::uint32_t& slot = dp[cell(to, next)];
        slot = std::min(slot, cand);
      }
    }
  }
  std::uint32_t best = kInf;
  for (int end = 0; end < k; ++end) {
    const std::uint32_t v = dp[cell(subsets - 1, end)];
    if (v != kInf) best = std::min(best, v + static_cast<std::uint32_t>(inst.distance(end + 1, 0)));
  }
  return static_cast<Distance>(best);
}

}  // namespace ttp
