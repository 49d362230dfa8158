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

// Generates a small eil51 sub-instance, solves it with every exact solver and
// both heuristics, and prints the results side by side.

#include <cstdio>

#include "ttp/ttp.hpp"

int main() {
  using namespace ttp;

  GenSpec spec;
  spec.n = 8;
  spec.items_per_city = 3;
  spec.type = KnapsackType::kUncorrelated;
  spec.capacity_category = 5;
  spec.renting_rate = 1.0;
  const Instance inst = generate_instance(spec);
  std::printf("%s: %d cities, %d items, capacity %lld\n", inst.name().c_str(), inst.num_cities(),
              inst.num_items(), static_cast<long long>(inst.capacity()));

  const SolveReport dp = solve_dp(inst);
  const SolveReport bnb = solve_bnb(inst);
  const SolveReport cp = solve_cp(build_model(inst));
  std::printf("%-6s %14s %9s\n", "solver", "objective", "seconds");
  for (const auto& [name, r] : {std::pair{"dp", &dp}, std::pair{"bnb", &bnb}, std::pair{"cp", &cp}}) {
    std::printf("%-6s %14.4f %9.3f\n", name, r->objective(), r->seconds);
  }

  const Solution s1 = dp_s1(inst, 1);
  const Dps5Result s5 = dp_s5(inst, RestartBudget{16, 0.0}, 1);
  std::printf("%-6s %14.4f\n%-6s %14.4f\n", "dp-s1", s1.objective, "dp-s5", s5.best.objective);

  std::printf("optimal tour  %s\n", format_tour(dp.solution->tour).c_str());
  std::printf("picked items  %s\n", format_plan(dp.solution->plan).c_str());
  return 0;
}
