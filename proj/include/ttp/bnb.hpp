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

// Depth-first branch and bound over tour prefixes. The working permutation
// is extended one position at a time by swapping a candidate city into place
// (and swapping it back afterwards); the weight profile of each prefix is
// kept on a stack, one per depth. A child is explored only if its bound is
// strictly above the best objective found so far.
//
// Bounds all take the form  max benefit + remaining profit - R * D / v_max
// with a lower bound D on the distance still to travel:
//   BASE      D = d(k, 1)
//   FARTHEST  D = d(f, 1), f the unvisited city farthest from the depot
//   GLOBAL    D = max(0, d* - d_t), d* the optimal tour length
//   COMBINED  D = max(FARTHEST, GLOBAL)

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ttp/exact_dp.hpp"
#include "ttp/instance.hpp"
#include "ttp/report.hpp"
#include "ttp/solution.hpp"
#include "ttp/tsp.hpp"
#include "ttp/weight_profile.hpp"

namespace ttp {

enum class BoundVariant { kBase, kFarthest, kGlobal, kCombined };
enum class ChildOrder { kIndex, kNearestFirst, kBoundFirst };

inline std::string_view to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::kBase: return "base";
    case BoundVariant::kFarthest: return "farthest";
    case BoundVariant::kGlobal: return "global";
    case BoundVariant::kCombined: return "combined";
  }
  return "?";
}

inline bool needs_tsp_optimum(BoundVariant v) {
  return v == BoundVariant::kGlobal || v == BoundVariant::kCombined;
}

/// A tour prefix (0-based, starting at the depot) with its weight profile.
struct SearchNode {
  std::vector<int> prefix;
  Distance traveled = 0;
  WeightProfile profile;
};

/// Callback payload for every child the search evaluates.
struct NodeTrace {
  std::span<const int> prefix;
  Distance traveled;
  const WeightProfile& profile;
  double bound;
  double best;
  bool explored;
};

struct BnbConfig {
  BoundVariant bound = BoundVariant::kCombined;
  ChildOrder order = ChildOrder::kBoundFirst;
  double time_limit = 0.0;
  std::optional<Solution> incumbent;
  std::optional<Distance> tsp_optimum;  // computed on demand for GLOBAL/COMBINED
  int incumbent_restarts = 16;
  bool entry_pruning = true;  // drop profile entries whose own bound is below the incumbent
  ProgressSink progress;
  std::function<void(const NodeTrace&)> trace;
};

namespace bnb_detail {

/// Remaining-distance lower bound for a prefix ending at `end`.
inline Distance remaining_distance(const Instance& inst, std::uint32_t visited, int end, Distance traveled,
                                   BoundVariant variant, std::optional<Distance> d_star) {
  const auto farthest = [&]() {
    Distance far = -1;
    for (int c = 1; c < inst.num_cities(); ++c) {
      if (!(visited >> c & 1u)) far = std::max(far, inst.distance(c, 0));
    }
    return far < 0 ? inst.distance(end, 0) : far;
  };
  const auto global = [&]() {
    if (!d_star) throw std::invalid_argument("GLOBAL and COMBINED bounds need the optimal tour length d*");
    return std::max<Distance>(0, *d_star - traveled);
  };
  switch (variant) {
    case BoundVariant::kBase: return inst.distance(end, 0);
    case BoundVariant::kFarthest: return farthest();
    case BoundVariant::kGlobal: return global();
    case BoundVariant::kCombined: return std::max(farthest(), global());
  }
  return 0;
}

inline double bound_value(const Instance& inst, double max_benefit, Profit remaining, Distance d) {
  return max_benefit + static_cast<double>(remaining) -
         inst.renting_rate() * static_cast<double>(d) / inst.max_speed();
}

}  // namespace bnb_detail

inline double node_bound(const SearchNode& node, const Instance& inst, BoundVariant variant,
                         std::optional<Distance> d_star = std::nullopt) {
  std::uint32_t visited = 0;
  for (int c : node.prefix) visited |= 1u << c;
  visited &= ~1u;
  const int end = node.prefix.back();
  const Distance d = bnb_detail::remaining_distance(inst, visited, end, node.traveled, variant, d_star);
  return bnb_detail::bound_value(inst, node.profile.max_benefit(), remaining_profit(inst, visited), d);
}

namespace bnb_detail {

class Search {
 public:
  Search(const Instance& inst, const BnbConfig& cfg, std::optional<Distance> d_star, const Solution& start)
      : inst_(inst), cfg_(cfg), d_star_(d_star), deadline_(cfg.time_limit) {
    n_ = inst.num_cities();
    perm_ = start.tour.order;
    best_ = start;
    best_value_ = start.objective;
    profiles_.resize(static_cast<std::size_t>(n_));
    traveled_.assign(static_cast<std::size_t>(n_), 0);
  }

  void run() {
    profiles_[0] = apply_city_items(WeightProfile::initial(), inst_, 0, &trail_);
    expand(1, 1u << 0, remaining_profit(inst_, 0));
  }

  Solution best() const { return best_; }
  const std::vector<int>& permutation() const { return perm_; }
  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t pruned() const { return pruned_; }
  int max_depth() const { return max_depth_; }

 private:
  struct Child {
    int city;
    WeightProfile profile;
    double bound;
  };

  Child make_child(int l, int city, std::uint32_t visited, Profit remaining) {
    const int prev = perm_[static_cast<std::size_t>(l - 1)];
    const Distance traveled = traveled_[static_cast<std::size_t>(l - 1)] + inst_.distance(prev, city);
    const std::uint32_t vis = (visited | (1u << city)) & ~1u;
    const Distance d = remaining_distance(inst_, vis, city, traveled, cfg_.bound, d_star_);
    // Offset that turns an entry's benefit into its own bound, before and
    // after the items of `city` are considered.
    const double before_items = bound_value(inst_, 0.0, remaining, d);
    const double after_items = bound_value(inst_, 0.0, remaining - inst_.profit_at(city), d);
    WeightProfile p = apply_leg(profiles_[static_cast<std::size_t>(l - 1)], inst_, inst_.distance(prev, city));
    drop_hopeless(p, before_items);
    p = apply_city_items(p, inst_, city, &trail_);
    drop_hopeless(p, after_items);
    const double b = p.empty() ? -std::numeric_limits<double>::infinity() : after_items + p.max_benefit();
    return Child{city, std::move(p), b};
  }

  // Entries whose bound cannot beat the incumbent never lead to a better
  // tour; dropping them keeps the profiles small.
  void drop_hopeless(WeightProfile& p, double offset) const {
    if (!cfg_.entry_pruning || !(best_value_ > -std::numeric_limits<double>::infinity())) return;
    const double threshold = prune_threshold(best_value_);
    std::erase_if(p.mutable_entries(), [&](const ProfileEntry& e) { return e.benefit + offset < threshold; });
  }

  // Positions 0..l-1 of perm_ are fixed; profiles_[l-1] is current.
  void expand(int l, std::uint32_t visited, Profit remaining) {
    max_depth_ = std::max(max_depth_, l);
    if (l == n_) {
      close_tour();
      return;
    }
    const std::size_t mark = trail_.size();
    const int prev = perm_[static_cast<std::size_t>(l - 1)];
    std::vector<int> order(perm_.begin() + l, perm_.end());
    if (cfg_.order == ChildOrder::kNearestFirst) {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const Distance da = inst_.distance(prev, a);
        const Distance db = inst_.distance(prev, b);
        return da != db ? da < db : a < b;
      });
    }
    std::vector<Child> children;
    if (cfg_.order == ChildOrder::kBoundFirst) {
      children.reserve(order.size());
      for (int city : order) children.push_back(make_child(l, city, visited, remaining));
      std::stable_sort(children.begin(), children.end(),
                       [](const Child& a, const Child& b) { return a.bound > b.bound; });
    }
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      if (!timed_out_ && deadline_.poll()) timed_out_ = true;
      if (timed_out_) break;
      Child child = cfg_.order == ChildOrder::kBoundFirst ? std::move(children[idx])
                                                          : make_child(l, order[idx], visited, remaining);
      ++nodes_;
      const bool explore = child.bound > best_value_;
      const auto pos = static_cast<std::size_t>(std::find(perm_.begin() + l, perm_.end(), child.city) - perm_.begin());
      const Distance traveled = traveled_[static_cast<std::size_t>(l - 1)] + inst_.distance(prev, child.city);
      std::swap(perm_[static_cast<std::size_t>(l)], perm_[pos]);
      if (cfg_.trace) {
        cfg_.trace(NodeTrace{std::span<const int>(perm_.data(), static_cast<std::size_t>(l + 1)), traveled,
                             child.profile, child.bound, best_value_, explore});
      }
      if (explore) {
        traveled_[static_cast<std::size_t>(l)] = traveled;
        profiles_[static_cast<std::size_t>(l)] = std::move(child.profile);
        expand(l + 1, visited | (1u << child.city), remaining - inst_.profit_at(child.city));
      } else {
        ++pruned_;
      }
      std::swap(perm_[static_cast<std::size_t>(l)], perm_[pos]);
    }
    trail_.truncate(mark);
    if (cfg_.progress && l == 1) {
      cfg_.progress(Progress{"bnb", l, nodes_, pruned_, best_value_, std::numeric_limits<double>::quiet_NaN()});
    }
  }

  void close_tour() {
    const int last = perm_.back();
    const WeightProfile& p = profiles_[static_cast<std::size_t>(n_ - 1)];
    const ProfileEntry* top = nullptr;
    double value = -std::numeric_limits<double>::infinity();
    for (const ProfileEntry& e : p.entries()) {
      const double v = closing_value(inst_, e, last);
      if (!top || v > value) {
        top = &e;
        value = v;
      }
    }
    if (!top || !(value > best_value_)) return;
    Solution s;
    s.tour.order = perm_;
    s.plan = PackingPlan::empty(inst_);
    std::vector<int> items;
    trail_.unwind(top->trail, nullptr, &items);
    for (int item : items) s.plan.selected[static_cast<std::size_t>(item)] = 1;
    s.objective = evaluate(inst_, s.tour, s.plan);
    best_value_ = value;
    best_ = std::move(s);
  }

  const Instance& inst_;
  const BnbConfig& cfg_;
  std::optional<Distance> d_star_;
  Deadline deadline_;
  int n_ = 0;
  std::vector<int> perm_;
  std::vector<WeightProfile> profiles_;
  std::vector<Distance> traveled_;
  DecisionTrail trail_;
  Solution best_;
  double best_value_ = -std::numeric_limits<double>::infinity();
  std::uint64_t nodes_ = 0;
  std::uint64_t pruned_ = 0;
  int max_depth_ = 0;
  bool timed_out_ = false;
};

}  // namespace bnb_detail

inline SolveReport solve_bnb(const Instance& inst, const BnbConfig& cfg = {}) {
  Deadline clock;
  std::optional<Distance> d_star = cfg.tsp_optimum;
  if (!d_star && needs_tsp_optimum(cfg.bound)) d_star = precompute_tsp_optimum(inst);

  Solution start = cfg.incumbent ? *cfg.incumbent : make_incumbent(inst, cfg.incumbent_restarts).solution;
  bnb_detail::Search search(inst, cfg, d_star, start);
  const std::vector<int> before = search.permutation();
  search.run();
  if (search.permutation() != before) throw std::logic_error("solve_bnb: permutation not restored");

  SolveReport report;
  report.status = search.timed_out() ? Status::kTimeout : Status::kOptimal;
  if (search.timed_out()) report.abort_reason = "time";
  report.solution = search.best();
  report.nodes = search.nodes();
  report.pruned = search.pruned();
  report.max_depth = search.max_depth();
  report.seconds = clock.elapsed();
  return report;
}

}  // namespace ttp
