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

// Permutation constraint model of the TTP, solved by depth-first branch and
// bound with propagation.
//
// Variables: x[i] is the city at position i (x[0] = depot), y[j] selects item
// j, W[i] is the weight carried when leaving position i. Constraints:
//
//   AllDifferent(x)                         every city visited once
//   W[i] = W[i-1] + sum of w_j y_j at x[i]  weight chain
//   W[n-1] <= C                             capacity
//
// and the objective  sum p_j y_j - R * sum_i d[n(x_i - 1) + x_{i+1}] / (v_max - nu W[i])
// with d the row-major distance vector (1-based element addressing).
//
// Search instantiates x[1..n-1] first (values nearest to the previous city
// first), then the item variables, trying 1 before 0. Items are taken in
// decreasing density of their rent-adjusted value when the knapsack bound is
// on, in city order otherwise.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ttp/exact_dp.hpp"
#include "ttp/instance.hpp"
#include "ttp/report.hpp"
#include "ttp/solution.hpp"

namespace ttp {

struct CpModel {
  const Instance* inst = nullptr;
  int n = 0;
  std::vector<Distance> distance_vector;   // element h = n(a-1)+b holds d_ab (1-based a, b, h)
  std::vector<std::uint32_t> x_domains;    // initial position domains, bit c = city c (0-based)
  std::vector<int> item_order;             // branching order of the item variables

  static int element_index(int n, int a, int b) { return n * (a - 1) + b; }
  Distance element(int h) const { return distance_vector[static_cast<std::size_t>(h - 1)]; }
  /// Distance between 0-based cities through the element expression.
  Distance leg(int from, int to) const { return element(element_index(n, from + 1, to + 1)); }
};

inline CpModel build_model(const Instance& inst) {
  CpModel m;
  m.inst = &inst;
  m.n = inst.num_cities();
  m.distance_vector.resize(static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n));
  for (int a = 1; a <= m.n; ++a) {
    for (int b = 1; b <= m.n; ++b) {
      m.distance_vector[static_cast<std::size_t>(CpModel::element_index(m.n, a, b) - 1)] = inst.distance(a - 1, b - 1);
    }
  }
  const std::uint32_t all = m.n == 32 ? ~0u : ((1u << m.n) - 1u);
  m.x_domains.assign(static_cast<std::size_t>(m.n), all & ~1u);
  m.x_domains[0] = 1u;
  for (int c = 1; c < m.n; ++c) {
    for (int item : inst.items_at(c)) m.item_order.push_back(item);
  }
  return m;
}

/// Complete assignment of the model's decision variables.
struct CpAssignment {
  std::vector<int> x;
  std::vector<std::uint8_t> y;
};

inline Solution decode(const CpModel& model, const CpAssignment& a) {
  Solution s;
  s.tour.order = a.x;
  s.plan.selected = a.y;
  s.objective = evaluate(*model.inst, s.tour, s.plan);
  return s;
}

/// Objective expression of the model evaluated on a complete assignment.
inline double objective_expression(const CpModel& model, const CpAssignment& a) {
  const Instance& inst = *model.inst;
  Profit profit = 0;
  std::vector<Weight> w(static_cast<std::size_t>(model.n), 0);
  for (int i = 0; i < model.n; ++i) {
    Weight here = 0;
    for (int item : inst.items_at(a.x[static_cast<std::size_t>(i)])) {
      if (a.y[static_cast<std::size_t>(item)]) {
        here += inst.item(item).weight;
        profit += inst.item(item).profit;
      }
    }
    w[static_cast<std::size_t>(i)] = (i ? w[static_cast<std::size_t>(i - 1)] : 0) + here;
  }
  double rent = 0.0;
  for (int i = 0; i < model.n; ++i) {
    const int from = a.x[static_cast<std::size_t>(i)];
    const int to = a.x[static_cast<std::size_t>((i + 1) % model.n)];
    rent += inst.leg_cost(model.leg(from, to), w[static_cast<std::size_t>(i)]);
  }
  return static_cast<double>(profit) - rent;
}

enum class CpConflict { kNone, kAllDifferent, kCapacity, kObjective };

struct CpConfig {
  int alldiff_level = 1;         // 0: value removal, 1: matching-based filtering
  bool objective_pruning = true;
  bool knapsack_bound = true;    // false: every open item counts at full profit
  double time_limit = 0.0;
  std::optional<Solution> incumbent;
  std::uint64_t luby_base = 0;   // restarts disabled when 0
  ProgressSink progress;
};

/// Domains, trail and propagators of one search.
class CpSearch {
 public:
  static constexpr std::uint8_t kCanBeZero = 1;
  static constexpr std::uint8_t kCanBeOne = 2;

  CpSearch(const CpModel& model, CpConfig cfg) : model_(model), inst_(*model.inst), cfg_(std::move(cfg)) {
    x_ = model.x_domains;
    y_.assign(static_cast<std::size_t>(inst_.num_items()), kCanBeZero | kCanBeOne);
    w_min_.assign(static_cast<std::size_t>(model.n), 0);
    w_max_.assign(static_cast<std::size_t>(model.n), 0);
    if (cfg_.incumbent) best_ = *cfg_.incumbent;
  }

  std::span<const std::uint32_t> x_domains() const { return x_; }
  std::span<const std::uint8_t> y_domains() const { return y_; }
  std::span<const Weight> weight_min() const { return w_min_; }
  std::span<const Weight> weight_max() const { return w_max_; }
  CpConflict last_conflict() const { return conflict_; }

  std::size_t mark() const { return trail_.size(); }
  void restore(std::size_t mark) {
    while (trail_.size() > mark) {
      const Change& c = trail_.back();
      if (c.is_x) {
        x_[static_cast<std::size_t>(c.index)] = c.old;
      } else {
        y_[static_cast<std::size_t>(c.index)] = static_cast<std::uint8_t>(c.old);
      }
      trail_.pop_back();
    }
  }

  bool assign_x(int pos, int city) { return set_x(pos, x_[static_cast<std::size_t>(pos)] & (1u << city)); }
  bool assign_y(int item, int value) {
    return set_y(item, static_cast<std::uint8_t>(y_[static_cast<std::size_t>(item)] & (value ? kCanBeOne : kCanBeZero)));
  }

  /// Runs every propagator to a common fixpoint. Returns false on conflict.
  bool propagate() {
    conflict_ = CpConflict::kNone;
    for (bool changed = true; changed;) {
      changed = false;
      if (!alldiff_values(changed)) return fail(CpConflict::kAllDifferent);
      if (cfg_.alldiff_level >= 1 && !changed && !alldiff_matching(changed)) return fail(CpConflict::kAllDifferent);
      if (!capacity(changed)) return fail(CpConflict::kCapacity);
    }
    compute_weight_bounds();
    if (cfg_.objective_pruning && best_ && objective_bound() <= best_->objective) return fail(CpConflict::kObjective);
    return true;
  }

  /// Optimistic objective. The assigned prefix is charged at the speeds its
  /// weight lower bounds allow and the rest of the tour as at least d(k, 1).
  /// Plain mode (the E_U bound) counts every open item in full and drives the
  /// rest at v_max. With knapsack_bound the rest is driven at the speed of the
  /// weight already forced, and open items enter a fractional knapsack over
  /// the residual capacity, each valued at its profit minus the extra rent it
  /// must cause: on the known legs after its city and on at least d(c, 1) of
  /// the open part. Rent is convex in the weight, so the sum of single-item
  /// increments measured from the lower bounds never exceeds the joint one.
  double objective_bound() const {
    Profit fixed_profit = 0;
    Profit open_profit = 0;
    Weight forced = 0;
    for (int j = 0; j < inst_.num_items(); ++j) {
      const std::uint8_t d = y_[static_cast<std::size_t>(j)];
      if (d == kCanBeOne) {
        fixed_profit += inst_.item(j).profit;
        forced += inst_.item(j).weight;
      } else if (d & kCanBeOne) {
        open_profit += inst_.item(j).profit;
      }
    }
    int l = 1;
    while (l < model_.n && std::has_single_bit(x_[static_cast<std::size_t>(l)])) ++l;
    const int last = city_at(l - 1);
    double rent = 0.0;
    for (int i = 0; i + 1 < l; ++i) {
      rent += inst_.leg_cost(model_.leg(city_at(i), city_at(i + 1)), w_min_[static_cast<std::size_t>(i)]);
    }
    if (l == model_.n) {
      rent += inst_.leg_cost(model_.leg(last, 0), w_min_[static_cast<std::size_t>(l - 1)]);
    } else if (cfg_.knapsack_bound) {
      rent += inst_.leg_cost(model_.leg(last, 0), w_min_[static_cast<std::size_t>(l - 1)]);
    } else {
      rent += inst_.renting_rate() * static_cast<double>(model_.leg(last, 0)) / inst_.max_speed();
    }
    const double base = static_cast<double>(fixed_profit) - rent;
    if (!cfg_.knapsack_bound) return base + static_cast<double>(open_profit);
    return base + open_items_bound(l, inst_.capacity() - forced);
  }

  /// Depth-first search; calls `on_solution` for every complete assignment
  /// reached (improving ones only when objective pruning is on).
  SolveReport solve(const std::function<void(const CpAssignment&)>& on_solution = {}) {
    Deadline deadline(cfg_.time_limit);
    deadline_ = &deadline;
    on_solution_ = on_solution;
    SolveReport report;
    const std::size_t root = mark();
    bool complete = false;
    if (!propagate()) {
      complete = true;
    } else if (cfg_.luby_base == 0) {
      node_limit_ = 0;
      complete = dfs();
    } else {
      for (std::uint64_t run = 1; !timed_out_; ++run) {
        node_limit_ = nodes_ + luby(run) * cfg_.luby_base;
        if (dfs()) {
          complete = true;
          break;
        }
        restore(root);
        if (!propagate()) {
          complete = true;
          break;
        }
      }
    }
    restore(root);
    report.status = complete ? Status::kOptimal : Status::kTimeout;
    if (!complete) report.abort_reason = "time";
    report.solution = best_;
    report.nodes = nodes_;
    report.pruned = failures_;
    report.max_depth = max_depth_;
    report.seconds = deadline.elapsed();
    deadline_ = nullptr;
    return report;
  }

  static std::uint64_t luby(std::uint64_t i) {
    for (std::uint64_t k = 1;; ++k) {
      if (i == (std::uint64_t{1} << k) - 1) return std::uint64_t{1} << (k - 1);
      if (i < (std::uint64_t{1} << k) - 1) return luby(i - (std::uint64_t{1} << (k - 1)) + 1);
    }
  }

 private:
  struct Change {
    bool is_x;
    int index;
    std::uint32_t old;
  };

  bool fail(CpConflict c) {
    conflict_ = c;
    return false;
  }

  struct OpenItem {
    int item;
    double value;  // profit minus the extra rent on the known legs
    Weight weight;
  };

  // Undecided items with positive adjusted value, best value density first.
  std::vector<OpenItem> open_items(int assigned) const {
    std::vector<OpenItem> open;
    std::vector<int> position(static_cast<std::size_t>(model_.n), -1);
    for (int i = 0; i < assigned; ++i) position[static_cast<std::size_t>(city_at(i))] = i;
    const int last = city_at(assigned - 1);
    for (int j = 0; j < inst_.num_items(); ++j) {
      if (y_[static_cast<std::size_t>(j)] != (kCanBeZero | kCanBeOne)) continue;
      const Item& it = inst_.item(j);
      double value = static_cast<double>(it.profit);
      const int at = position[static_cast<std::size_t>(it.city)];
      const auto extra = [&](Distance d, Weight w) { return inst_.leg_cost(d, w + it.weight) - inst_.leg_cost(d, w); };
      if (at >= 0) {
        for (int i = at; i < assigned; ++i) {
          if (i + 1 >= assigned && i + 1 < model_.n) break;  // leg leaves the assigned prefix
          const int to = i + 1 < model_.n ? city_at(i + 1) : 0;
          value -= extra(model_.leg(city_at(i), to), w_min_[static_cast<std::size_t>(i)]);
        }
      }
      if (assigned < model_.n) {
        // The open part of the tour carries the item from its city (or
        // from the last assigned city) back to the depot.
        const int from = at >= 0 ? last : it.city;
        value -= extra(model_.leg(from, 0), w_min_[static_cast<std::size_t>(assigned - 1)]);
      }
      if (value > 0.0) open.push_back(OpenItem{j, value, it.weight});
    }
    std::stable_sort(open.begin(), open.end(), [](const OpenItem& a, const OpenItem& b) {
      return a.value * static_cast<double>(b.weight) > b.value * static_cast<double>(a.weight);
    });
    return open;
  }

  // Fractional knapsack over the open items.
  double open_items_bound(int assigned, Weight residual) const {
    double total = 0.0;
    double room = static_cast<double>(residual);
    for (const OpenItem& o : open_items(assigned)) {
      if (static_cast<double>(o.weight) <= room) {
        total += o.value;
        room -= static_cast<double>(o.weight);
      } else {
        total += o.value * room / static_cast<double>(o.weight);
        break;
      }
    }
    return total;
  }

  int city_at(int pos) const { return std::countr_zero(x_[static_cast<std::size_t>(pos)]); }

  bool set_x(int pos, std::uint32_t dom) {
    std::uint32_t& slot = x_[static_cast<std::size_t>(pos)];
    if (dom == slot) return dom != 0;
    trail_.push_back(Change{true, pos, slot});
    slot = dom;
    return dom != 0;
  }

  bool set_y(int item, std::uint8_t dom) {
    std::uint8_t& slot = y_[static_cast<std::size_t>(item)];
    if (dom == slot) return dom != 0;
    trail_.push_back(Change{false, item, slot});
    slot = dom;
    return dom != 0;
  }

  bool alldiff_values(bool& changed) {
    for (bool again = true; again;) {
      again = false;
      for (int i = 0; i < model_.n; ++i) {
        const std::uint32_t d = x_[static_cast<std::size_t>(i)];
        if (d == 0) return false;
        if (!std::has_single_bit(d)) continue;
        for (int j = 0; j < model_.n; ++j) {
          if (j == i || !(x_[static_cast<std::size_t>(j)] & d)) continue;
          if (!set_x(j, x_[static_cast<std::size_t>(j)] & ~d)) return false;
          again = changed = true;
        }
      }
    }
    return true;
  }

  // Matching-based filtering: an edge (position, city) survives iff it lies
  // in some perfect matching, i.e. it is matched or both ends share a
  // strongly connected component of the residual graph.
  bool alldiff_matching(bool& changed) {
    const int n = model_.n;
    std::vector<int> match_city(static_cast<std::size_t>(n), -1);  // position -> city
    std::vector<int> match_pos(static_cast<std::size_t>(n), -1);   // city -> position
    for (int p = 0; p < n; ++p) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      if (!augment(p, seen, match_city, match_pos)) return false;
    }
    // Nodes 0..n-1 positions, n..2n-1 cities. Matched: city -> position;
    // unmatched domain edges: position -> city.
    const int nodes = 2 * n;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (int p = 0; p < n; ++p) {
      for (std::uint32_t d = x_[static_cast<std::size_t>(p)]; d; d &= d - 1) {
        const int c = std::countr_zero(d);
        if (match_city[static_cast<std::size_t>(p)] == c) {
          adj[static_cast<std::size_t>(n + c)].push_back(p);
        } else {
          adj[static_cast<std::size_t>(p)].push_back(n + c);
        }
      }
    }
    const std::vector<int> comp = strongly_connected(adj);
    for (int p = 0; p < n; ++p) {
      std::uint32_t keep = x_[static_cast<std::size_t>(p)];
      for (std::uint32_t d = keep; d; d &= d - 1) {
        const int c = std::countr_zero(d);
        if (match_city[static_cast<std::size_t>(p)] == c) continue;
        if (comp[static_cast<std::size_t>(p)] != comp[static_cast<std::size_t>(n + c)]) keep &= ~(1u << c);
      }
      if (keep != x_[static_cast<std::size_t>(p)]) {
        set_x(p, keep);
        changed = true;
      }
    }
    return true;
  }

  bool augment(int p, std::vector<char>& seen, std::vector<int>& match_city, std::vector<int>& match_pos) {
    for (std::uint32_t d = x_[static_cast<std::size_t>(p)]; d; d &= d - 1) {
      const int c = std::countr_zero(d);
      if (seen[static_cast<std::size_t>(c)]) continue;
      seen[static_cast<std::size_t>(c)] = 1;
      const int other = match_pos[static_cast<std::size_t>(c)];
      if (other < 0 || augment(other, seen, match_city, match_pos)) {
        match_city[static_cast<std::size_t>(p)] = c;
        match_pos[static_cast<std::size_t>(c)] = p;
        return true;
      }
    }
    return false;
  }

  static std::vector<int> strongly_connected(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int counter = 0;
    int components = 0;
    const std::function<void(int)> visit = [&](int v) {
      index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
      stack.push_back(v);
      on_stack[static_cast<std::size_t>(v)] = 1;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (index[static_cast<std::size_t>(w)] < 0) {
          visit(w);
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
      }
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = components;
        } while (w != v);
        ++components;
      }
    };
    for (int v = 0; v < n; ++v) {
      if (index[static_cast<std::size_t>(v)] < 0) visit(v);
    }
    return comp;
  }

  bool capacity(bool& changed) {
    Weight forced = 0;
    for (int j = 0; j < inst_.num_items(); ++j) {
      if (y_[static_cast<std::size_t>(j)] == kCanBeOne) forced += inst_.item(j).weight;
    }
    if (forced > inst_.capacity()) return false;
    for (int j = 0; j < inst_.num_items(); ++j) {
      if (y_[static_cast<std::size_t>(j)] == (kCanBeZero | kCanBeOne) &&
          forced + inst_.item(j).weight > inst_.capacity()) {
        set_y(j, kCanBeZero);
        changed = true;
      }
    }
    return true;
  }

  void compute_weight_bounds() {
    const int n = model_.n;
    Weight forced_total = 0;
    for (int j = 0; j < inst_.num_items(); ++j) {
      if (y_[static_cast<std::size_t>(j)] == kCanBeOne) forced_total += inst_.item(j).weight;
    }
    const auto city_weights = [&](int c, Weight& forced, Weight& possible) {
      forced = possible = 0;
      for (int item : inst_.items_at(c)) {
        const std::uint8_t d = y_[static_cast<std::size_t>(item)];
        if (d == kCanBeOne) forced += inst_.item(item).weight;
        if (d & kCanBeOne) possible += inst_.item(item).weight;
      }
    };
    for (int i = 0; i < n; ++i) {
      Weight lo = std::numeric_limits<Weight>::max();
      Weight hi = 0;
      for (std::uint32_t d = x_[static_cast<std::size_t>(i)]; d; d &= d - 1) {
        Weight f = 0;
        Weight p = 0;
        city_weights(std::countr_zero(d), f, p);
        lo = std::min(lo, f);
        hi = std::max(hi, p);
      }
      const Weight prev_lo = i ? w_min_[static_cast<std::size_t>(i - 1)] : 0;
      const Weight prev_hi = i ? w_max_[static_cast<std::size_t>(i - 1)] : 0;
      w_min_[static_cast<std::size_t>(i)] = prev_lo + lo;
      w_max_[static_cast<std::size_t>(i)] = std::min(inst_.capacity(), prev_hi + hi);
    }
    Weight& last = w_min_[static_cast<std::size_t>(n - 1)];
    last = std::max(last, forced_total);
  }

  CpAssignment assignment() const {
    CpAssignment a;
    a.x.resize(static_cast<std::size_t>(model_.n));
    for (int i = 0; i < model_.n; ++i) a.x[static_cast<std::size_t>(i)] = city_at(i);
    a.y.resize(y_.size());
    for (std::size_t j = 0; j < y_.size(); ++j) a.y[j] = y_[j] == kCanBeOne ? 1 : 0;
    return a;
  }

  // Returns true when the subtree was exhausted, false when cut short.
  bool dfs(int depth = 0) {
    if (timed_out_ || deadline_->poll()) {
      timed_out_ = true;
      return false;
    }
    if (node_limit_ && nodes_ >= node_limit_) return false;
    max_depth_ = std::max(max_depth_, depth);

    int pos = -1;
    for (int i = 1; i < model_.n; ++i) {
      if (!std::has_single_bit(x_[static_cast<std::size_t>(i)])) {
        pos = i;
        break;
      }
    }
    if (pos >= 0) {
      const int prev = std::has_single_bit(x_[static_cast<std::size_t>(pos - 1)]) ? city_at(pos - 1) : 0;
      std::vector<int> values;
      for (std::uint32_t d = x_[static_cast<std::size_t>(pos)]; d; d &= d - 1) values.push_back(std::countr_zero(d));
      std::stable_sort(values.begin(), values.end(),
                       [&](int a, int b) { return model_.leg(prev, a) < model_.leg(prev, b); });
      for (int v : values) {
        if (!try_branch(depth, [&] { return assign_x(pos, v); })) return false;
      }
      return true;
    }
    int item = -1;
    if (cfg_.knapsack_bound) {
      const std::vector<OpenItem> open = open_items(model_.n);
      if (!open.empty()) item = open.front().item;
    }
    for (std::size_t k = 0; item < 0 && k < model_.item_order.size(); ++k) {
      const int j = model_.item_order[k];
      if (y_[static_cast<std::size_t>(j)] == (kCanBeZero | kCanBeOne)) item = j;
    }
    if (item >= 0) {
      if (!try_branch(depth, [&] { return assign_y(item, 1); })) return false;
      return try_branch(depth, [&] { return assign_y(item, 0); });
    }
    leaf();
    return true;
  }

  template <typename Decide>
  bool try_branch(int depth, Decide decide) {
    ++nodes_;
    const std::size_t m = mark();
    bool exhausted = true;
    if (decide() && propagate()) {
      exhausted = dfs(depth + 1);
    } else {
      ++failures_;
    }
    restore(m);
    return exhausted;
  }

  void leaf() {
    const CpAssignment a = assignment();
    const double z = objective_expression(model_, a);
    if (cfg_.objective_pruning && best_ && z <= best_->objective) return;
    if (on_solution_) on_solution_(a);
    if (!best_ || z > best_->objective) {
      best_ = decode(model_, a);
      if (cfg_.progress) {
        cfg_.progress(Progress{"cp", max_depth_, nodes_, failures_, best_->objective,
                               std::numeric_limits<double>::quiet_NaN()});
      }
    }
  }

  const CpModel& model_;
  const Instance& inst_;
  CpConfig cfg_;
  std::vector<std::uint32_t> x_;
  std::vector<std::uint8_t> y_;
  std::vector<Weight> w_min_;
  std::vector<Weight> w_max_;
  std::vector<Change> trail_;
  std::optional<Solution> best_;
  CpConflict conflict_ = CpConflict::kNone;
  Deadline* deadline_ = nullptr;
  std::function<void(const CpAssignment&)> on_solution_;
  std::uint64_t nodes_ = 0;
  std::uint64_t failures_ = 0;
  std::uint64_t node_limit_ = 0;
  int max_depth_ = 0;
  bool timed_out_ = false;
};

inline SolveReport solve_cp(const CpModel& model, const CpConfig& cfg = {}) {
  CpSearch search(model, cfg);
  return search.solve();
}

}  // namespace ttp
