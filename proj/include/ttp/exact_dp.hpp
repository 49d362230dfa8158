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

// Exact TTP solver: Held-Karp over (visited set, end city) states, where each
// state carries the weight profile of the best partial tours reaching it.
//
// Layer i holds every state whose visited set has i cities. A state [S, k] is
// extended to [S + {c}, c] by charging the leg k -> c and running the
// knapsack step for c; states reached from several predecessors are merged by
// per-weight maximum. After the last layer every state is closed with the
// return leg to the depot, charged at the speed of the carried weight (the
// closing rent is subtracted, as in the objective).
//
// Pruning: E_U = benefit + profit still available - R * d(k, 1) / v_max
// bounds every completion, because the remaining path is at least d(k, 1)
// long and is never driven faster than v_max. Entries with E_U below the
// incumbent value are dropped.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ttp/heuristics.hpp"
#include "ttp/instance.hpp"
#include "ttp/report.hpp"
#include "ttp/solution.hpp"
#include "ttp/weight_profile.hpp"

namespace ttp {

/// Cities are bits of `visited` (bit c for city c; the depot bit stays 0).
struct DPState {
  std::uint32_t visited = 0;
  int end = 0;
  WeightProfile profile;
};

inline std::uint64_t state_key(std::uint32_t visited, int end) {
  return (static_cast<std::uint64_t>(visited) << 8) | static_cast<std::uint64_t>(end);
}

inline Profit remaining_profit(const Instance& inst, std::uint32_t visited) {
  Profit total = 0;
  for (int c = 1; c < inst.num_cities(); ++c) {
    if (!(visited >> c & 1u)) total += inst.profit_at(c);
  }
  return total;
}

/// State for the single-city tour 1 -> c.
inline DPState first_state(const Instance& inst, int city, DecisionTrail* trail = nullptr,
                           ProfileOptions opts = {}) {
  DPState root{0, 0, WeightProfile::initial()};
  root.profile = apply_city_items(root.profile, inst, 0, trail, opts);
  DPState s;
  s.visited = 1u << city;
  s.end = city;
  s.profile = apply_leg(root.profile, inst, inst.distance(0, city), opts);
  if (trail) {
    for (ProfileEntry& e : s.profile.mutable_entries()) e.trail = trail->visit(e.trail, city);
  }
  s.profile = apply_city_items(s.profile, inst, city, trail, opts);
  return s;
}

inline DPState extend_state(const DPState& state, const Instance& inst, int next_city,
                            DecisionTrail* trail = nullptr, ProfileOptions opts = {}) {
  if (next_city <= 0 || next_city >= inst.num_cities() || (state.visited >> next_city & 1u)) {
    throw std::invalid_argument("extend_state: city already visited or out of range");
  }
  DPState out;
  out.visited = state.visited | (1u << next_city);
  out.end = next_city;
  out.profile = apply_leg(state.profile, inst, inst.distance(state.end, next_city), opts);
  if (trail) {
    for (ProfileEntry& e : out.profile.mutable_entries()) e.trail = trail->visit(e.trail, next_city);
  }
  out.profile = apply_city_items(out.profile, inst, next_city, trail, opts);
  return out;
}

/// Per-weight maximum of two states with the same key; `a` wins ties.
inline DPState merge_states(const DPState& a, const DPState& b, ProfileOptions opts = {}) {
  if (a.visited != b.visited || a.end != b.end) throw std::invalid_argument("merge_states: keys differ");
  return DPState{a.visited, a.end, merge_profiles(a.profile, b.profile, opts)};
}

/// E_U for one entry of `state` with the given benefit.
inline double entry_upper_bound(const DPState& state, const Instance& inst, double benefit) {
  return benefit + static_cast<double>(remaining_profit(inst, state.visited)) -
         inst.renting_rate() * static_cast<double>(inst.distance(state.end, 0)) / inst.max_speed();
}

/// E_U of the whole state (its best entry).
inline double upper_bound(const DPState& state, const Instance& inst) {
  return entry_upper_bound(state, inst, state.profile.max_benefit());
}

enum class PruneMode { kPerEntry, kPerState };

inline double prune_threshold(double z_lower) {
  return z_lower - kObjectiveTolerance * std::max(1.0, std::abs(z_lower));
}

/// Drops entries (or whole states) whose bound falls below `z_lower`.
/// Returns the number of entries removed.
inline std::uint64_t prune(std::vector<DPState>& layer, const Instance& inst, double z_lower,
                           PruneMode mode = PruneMode::kPerEntry) {
  if (!(z_lower > -std::numeric_limits<double>::infinity())) return 0;
  const double threshold = prune_threshold(z_lower);
  std::uint64_t removed = 0;
  std::size_t out = 0;
  for (DPState& s : layer) {
    const double offset = entry_upper_bound(s, inst, 0.0);
    auto& entries = s.profile.mutable_entries();
    if (mode == PruneMode::kPerEntry) {
      const std::size_t before = entries.size();
      std::erase_if(entries, [&](const ProfileEntry& e) { return e.benefit + offset < threshold; });
      removed += before - entries.size();
    } else if (s.profile.max_benefit() + offset < threshold) {
      removed += entries.size();
      entries.clear();
    }
    if (!entries.empty()) {
      if (&layer[out] != &s) layer[out] = std::move(s);
      ++out;
    }
  }
  layer.resize(out);
  return removed;
}

struct Incumbent {
  Solution solution;
  double z_lower = -std::numeric_limits<double>::infinity();
};

/// Feasible starting point: heuristic tours packed exactly.
inline Incumbent make_incumbent(const Instance& inst, int restarts = 16, std::uint64_t seed = 0) {
  Dps5Result r = dp_s5(inst, RestartBudget{restarts, 0.0}, seed);
  return Incumbent{r.best, r.best.objective};
}

struct DpOptions {
  bool prune = true;
  PruneMode prune_mode = PruneMode::kPerEntry;
  bool dominance = true;
  std::optional<Solution> incumbent;  // computed when absent and prune is on
  int incumbent_restarts = 16;
  std::uint64_t memory_cap = 0;  // bytes, 0 = unlimited
  double time_limit = 0.0;       // seconds, 0 = unlimited
  ProgressSink progress;
};

namespace dp_detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline Solution rebuild(const Instance& inst, const DecisionTrail& trail, TrailId id) {
  Solution s;
  std::vector<int> cities;
  std::vector<int> items;
  trail.unwind(id, &cities, &items);
  s.tour.order.push_back(0);
  s.tour.order.insert(s.tour.order.end(), cities.begin(), cities.end());
  s.plan = PackingPlan::empty(inst);
  for (int item : items) s.plan.selected[static_cast<std::size_t>(item)] = 1;
  s.objective = evaluate(inst, s.tour, s.plan);
  return s;
}

}  // namespace dp_detail

inline SolveReport solve_dp(const Instance& inst, const DpOptions& opts = {}) {
  Deadline deadline(opts.time_limit);
  SolveReport report;
  const int n = inst.num_cities();
  const ProfileOptions popts{opts.dominance};

  std::optional<Solution> incumbent;
  double z_lower = -std::numeric_limits<double>::infinity();
  if (opts.prune) {
    incumbent = opts.incumbent ? *opts.incumbent : make_incumbent(inst, opts.incumbent_restarts).solution;
    z_lower = incumbent->objective;
  }

  DecisionTrail trail;
  std::vector<DPState> layer;
  for (int c = 1; c < n; ++c) layer.push_back(first_state(inst, c, &trail, popts));
  report.states = layer.size();
  report.nodes = layer.size();

  const auto entry_count = [](const std::vector<DPState>& l) {
    std::uint64_t total = 0;
    for (const DPState& s : l) total += s.profile.size();
    return total;
  };
  const auto abort = [&](const char* why) {
    report.status = Status::kTimeout;
    report.abort_reason = why;
    report.solution = incumbent;
    report.seconds = deadline.elapsed();
    return report;
  };
  const auto bytes_for = [&](std::uint64_t entries, std::uint64_t states) {
    return entries * sizeof(ProfileEntry) + states * (sizeof(DPState) + 32) + trail.bytes();
  };

  for (int size = 1;; ++size) {
    if (opts.prune) report.pruned += prune(layer, inst, z_lower, opts.prune_mode);
    const std::uint64_t live_entries = entry_count(layer);
    report.peak_states = std::max<std::uint64_t>(report.peak_states, layer.size());
    report.peak_bytes = std::max(report.peak_bytes, bytes_for(live_entries, layer.size()));
    if (layer.size() > dp_detail::binomial(n - 1, size) * static_cast<std::uint64_t>(size)) {
      throw std::logic_error("solve_dp: layer exceeds its cardinality bound");
    }
    if (opts.progress) {
      opts.progress(Progress{"dp", size, layer.size(), report.pruned, z_lower, std::numeric_limits<double>::quiet_NaN()});
    }
    if (size == n - 1) break;

    // Reclaim trail nodes that no live entry references.
    if (trail.size() > 4 * live_entries + 4096) {
      std::vector<TrailId*> roots;
      roots.reserve(live_entries);
      for (DPState& s : layer) {
        for (ProfileEntry& e : s.profile.mutable_entries()) roots.push_back(&e.trail);
      }
      trail.compact(roots);
    }

    std::vector<DPState> next;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    std::uint64_t next_entries = 0;
    for (const DPState& s : layer) {
      for (int c = 1; c < n; ++c) {
        if (s.visited >> c & 1u) continue;
        if (deadline.poll()) return abort("time");
        DPState child = extend_state(s, inst, c, &trail, popts);
        ++report.nodes;
        const std::uint64_t key = state_key(child.visited, child.end);
        const auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(next.size()));
        if (inserted) {
          next_entries += child.profile.size();
          next.push_back(std::move(child));
          ++report.states;
        } else {
          DPState& slot = next[it->second];
          next_entries -= slot.profile.size();
          slot = merge_states(slot, child, popts);
          next_entries += slot.profile.size();
        }
      }
      if (opts.memory_cap > 0 && bytes_for(live_entries + next_entries, layer.size() + next.size()) > opts.memory_cap) {
        return abort("memory");
      }
    }
    layer = std::move(next);
  }

  const ProfileEntry* best = nullptr;
  double best_value = -std::numeric_limits<double>::infinity();
  for (const DPState& s : layer) {
    for (const ProfileEntry& e : s.profile.entries()) {
      const double v = closing_value(inst, e, s.end);
      if (!best || v > best_value) {
        best = &e;
        best_value = v;
      }
    }
  }

  report.status = Status::kOptimal;
  if (best && (!incumbent || best_value > incumbent->objective)) {
    report.solution = dp_detail::rebuild(inst, trail, best->trail);
  } else {
    report.solution = incumbent;  // nothing beat the incumbent, so it is optimal
  }
  report.seconds = deadline.elapsed();
  return report;
}

}  // namespace ttp
