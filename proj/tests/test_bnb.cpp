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

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "ttp/bnb.hpp"
#include "ttp/brute_force.hpp"
#include "ttp/tsp.hpp"

namespace {

using namespace ttp;

constexpr BoundVariant kVariants[] = {BoundVariant::kBase, BoundVariant::kFarthest, BoundVariant::kGlobal,
                                      BoundVariant::kCombined};
constexpr ChildOrder kOrders[] = {ChildOrder::kIndex, ChildOrder::kNearestFirst, ChildOrder::kBoundFirst};

TEST(Tsp, HeldKarpMatchesEnumeration) {
  std::mt19937_64 gen(1);
  for (int rep = 0; rep < 20; ++rep) {
    const Instance inst = oracle::random_instance(gen, {2 + rep % 7, 1});
    EXPECT_EQ(precompute_tsp_optimum(inst), oracle::tsp_length(inst));
  }
}

TEST(Bnb, EveryBoundAndOrderFindsTheOptimum) {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 24; ++rep) {
    const Instance inst = oracle::random_instance(gen, {3 + rep % 5, 1 + rep % 8});
    const double expect = oracle::best_ttp(inst);
    for (BoundVariant v : kVariants) {
      for (ChildOrder o : kOrders) {
        BnbConfig cfg;
        cfg.bound = v;
        cfg.order = o;
        const SolveReport r = solve_bnb(inst, cfg);
        EXPECT_EQ(r.status, Status::kOptimal);
        EXPECT_TRUE(same_objective(r.objective(), expect))
            << "rep " << rep << " bound " << to_string(v) << ": " << r.objective() << " vs " << expect;
        EXPECT_TRUE(validate(inst, *r.solution).empty());
      }
    }
  }
}

TEST(Bnb, EntryPruningKeepsTheOptimumAndTheNodeCount) {
  std::mt19937_64 gen(15);
  for (int rep = 0; rep < 10; ++rep) {
    const Instance inst = oracle::random_instance(gen, {7, 12});
    const Solution start = make_incumbent(inst).solution;
    BnbConfig on;
    on.incumbent = start;
    BnbConfig off = on;
    off.entry_pruning = false;
    const SolveReport a = solve_bnb(inst, on);
    const SolveReport b = solve_bnb(inst, off);
    EXPECT_TRUE(same_objective(a.objective(), b.objective()));
    // Only entries inside the tolerance band can differ, so node counts stay close.
    EXPECT_LE(a.nodes, b.nodes + 1);
  }
}

TEST(Bnb, AgreesWithBruteForceOnEightCities) {
  std::mt19937_64 gen(12);
  const Instance inst = oracle::random_instance(gen, {8, 7});
  EXPECT_TRUE(same_objective(solve_bnb(inst).objective(), solve_brute(inst).objective()));
}

// Every evaluated child: bound >= best objective of any completion of its prefix.
TEST(Bnb, BoundsAreAdmissibleAlongTheSearch) {
  std::mt19937_64 gen(19);
  for (int rep = 0; rep < 4; ++rep) {
    const Instance inst = oracle::random_instance(gen, {6, 5});
    for (BoundVariant v : kVariants) {
      BnbConfig cfg;
      cfg.bound = v;
      cfg.order = ChildOrder::kIndex;
      cfg.entry_pruning = false;  // the bound itself, not the pruned profiles
      // Start from a poor incumbent so the search visits many nodes.
      Solution weak;
      weak.tour.order = {0, 1, 2, 3, 4, 5};
      weak.plan = PackingPlan::empty(inst);
      weak.objective = evaluate(inst, weak.tour, weak.plan);
      cfg.incumbent = weak;
      int checked = 0;
      cfg.trace = [&](const NodeTrace& t) {
        const std::vector<int> prefix(t.prefix.begin(), t.prefix.end());
        EXPECT_GE(t.bound + 1e-9, oracle::best_completion(inst, prefix)) << "bound " << to_string(v);
        ++checked;
      };
      solve_bnb(inst, cfg);
      EXPECT_GT(checked, 5);
    }
  }
}

TEST(Bnb, TraceProfilesMatchTheDpStates) {
  std::mt19937_64 gen(21);
  const Instance inst = oracle::random_instance(gen, {5, 6});
  BnbConfig cfg;
  cfg.order = ChildOrder::kIndex;
  cfg.entry_pruning = false;
  Solution weak;
  weak.tour.order = {0, 1, 2, 3, 4};
  weak.plan = PackingPlan::empty(inst);
  weak.objective = -1e12;
  cfg.incumbent = weak;
  int checked = 0;
  cfg.trace = [&](const NodeTrace& t) {
    DPState s = first_state(inst, t.prefix[1]);
    for (std::size_t i = 2; i < t.prefix.size(); ++i) s = extend_state(s, inst, t.prefix[i]);
    ASSERT_EQ(s.profile.size(), t.profile.size());
    for (std::size_t i = 0; i < s.profile.size(); ++i) {
      EXPECT_EQ(s.profile.entries()[i].weight, t.profile.entries()[i].weight);
      EXPECT_NEAR(s.profile.entries()[i].benefit, t.profile.entries()[i].benefit, 1e-9);
    }
    EXPECT_EQ(t.traveled, [&] {
      Distance d = 0;
      for (std::size_t i = 1; i < t.prefix.size(); ++i) d += inst.distance(t.prefix[i - 1], t.prefix[i]);
      return d;
    }());
    ++checked;
  };
  solve_bnb(inst, cfg);
  // At most 4 + 4*3 + 4*3*2 + 4! children exist; found tours prune some of them.
  EXPECT_LE(checked, 4 + 12 + 24 + 24);
  EXPECT_GE(checked, 4);
}

TEST(Bnb, RemainingDistanceVariants) {
  InstanceData d;
  d.coords = {{0, 0}, {3, 0}, {10, 0}, {0, 4}};
  d.capacity = 5;
  d.renting_rate = 1.0;
  const Instance inst(d);
  const std::uint32_t visited = 1u << 1;
  EXPECT_EQ(bnb_detail::remaining_distance(inst, visited, 1, 3, BoundVariant::kBase, std::nullopt), 3);
  EXPECT_EQ(bnb_detail::remaining_distance(inst, visited, 1, 3, BoundVariant::kFarthest, std::nullopt), 10);
  EXPECT_EQ(bnb_detail::remaining_distance(inst, visited, 1, 3, BoundVariant::kGlobal, Distance{25}), 22);
  EXPECT_EQ(bnb_detail::remaining_distance(inst, visited, 1, 30, BoundVariant::kGlobal, Distance{25}), 0);
  EXPECT_EQ(bnb_detail::remaining_distance(inst, visited, 1, 3, BoundVariant::kCombined, Distance{25}), 22);
  EXPECT_EQ(bnb_detail::remaining_distance(inst, visited, 1, 20, BoundVariant::kCombined, Distance{25}), 10);
  // Nothing left to visit: FARTHEST falls back to the closing leg.
  EXPECT_EQ(bnb_detail::remaining_distance(inst, 0b1110u, 2, 3, BoundVariant::kFarthest, std::nullopt), 10);
  EXPECT_THROW(bnb_detail::remaining_distance(inst, visited, 1, 3, BoundVariant::kGlobal, std::nullopt),
               std::invalid_argument);
}

TEST(Bnb, NodeBoundArithmetic) {
  InstanceData d;
  d.coords = {{0, 0}, {3, 0}, {10, 0}};
  d.items = {Item{1, 7, 1}, Item{2, 40, 2}};
  d.capacity = 5;
  d.renting_rate = 2.0;
  const Instance inst(d);
  SearchNode node{{0, 1}, 3, WeightProfile::from_entries({{0, -6.0, kNoTrail}, {1, 1.0, kNoTrail}})};
  EXPECT_DOUBLE_EQ(node_bound(node, inst, BoundVariant::kBase), 1.0 + 40.0 - 2.0 * 3.0);
  EXPECT_DOUBLE_EQ(node_bound(node, inst, BoundVariant::kFarthest), 1.0 + 40.0 - 2.0 * 10.0);
}

TEST(Bnb, TighterBoundsExploreNoMoreNodes) {
  std::mt19937_64 gen(31);
  for (int rep = 0; rep < 8; ++rep) {
    const Instance inst = oracle::random_instance(gen, {8, 8});
    const Solution start = make_incumbent(inst).solution;
    std::uint64_t nodes[4];
    for (int v = 0; v < 4; ++v) {
      BnbConfig cfg;
      cfg.bound = kVariants[v];
      cfg.order = ChildOrder::kIndex;
      cfg.incumbent = start;
      nodes[v] = solve_bnb(inst, cfg).nodes;
    }
    // Same order and incumbent: the pointwise larger distance bound never widens the search here.
    EXPECT_LE(nodes[1], nodes[0]);
    EXPECT_LE(nodes[3], nodes[1]);
    EXPECT_LE(nodes[3], nodes[2]);
  }
}

TEST(Bnb, TimeLimitReturnsIncumbent) {
  std::mt19937_64 gen(3);
  const Instance inst = oracle::random_instance(gen, {14, 40});
  BnbConfig cfg;
  cfg.bound = BoundVariant::kBase;
  cfg.time_limit = 0.05;
  const SolveReport r = solve_bnb(inst, cfg);
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_TRUE(validate(inst, *r.solution).empty());
  if (r.status == Status::kTimeout) {
    EXPECT_EQ(r.abort_reason, "time");
  }
}

TEST(Bnb, TwoCityInstance) {
  InstanceData d;
  d.coords = {{0, 0}, {1, 1}};
  d.items = {Item{1, 9, 2}};
  d.capacity = 3;
  d.renting_rate = 0.5;
  const Instance inst(d);
  EXPECT_TRUE(same_objective(solve_bnb(inst).objective(), oracle::best_ttp(inst)));
}

}  // namespace
