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

// Exact packing for a fixed tour.
//
// A WeightProfile maps every reachable knapsack weight w (0 <= w <= C) to the
// best benefit of a partial tour that leaves its last city carrying exactly w:
// profit of the items picked so far minus the rent already paid. Walking a
// tour alternates two updates, a 0/1 knapsack step per city and a rent step
// per leg, and the best closing entry is the optimal packing for that tour.
//
// Entries are kept sorted by weight. With dominance pruning enabled (the
// default) only Pareto entries survive, i.e. benefits strictly increase with
// weight, so "best with weight exactly w" and "best with weight at most w"
// agree on every stored entry.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/solution.hpp"

namespace ttp {

using TrailId = std::uint32_t;
inline constexpr TrailId kNoTrail = std::numeric_limits<TrailId>::max();

/// Append-only forest of decisions (cities visited, items picked). Each
/// profile entry points at the node holding its latest decision; following
/// parent links rebuilds the partial solution, so no entry carries a full
/// plan.
class DecisionTrail {
 public:
  struct Node {
    TrailId parent;
    std::int32_t tag;  // >= 0: picked item id; < 0: visited city -(tag + 1)
  };

  TrailId pick(TrailId parent, int item) { return push(parent, item); }
  TrailId visit(TrailId parent, int city) { return push(parent, -(city + 1)); }

  std::size_t size() const { return nodes_.size(); }
  std::size_t bytes() const { return nodes_.capacity() * sizeof(Node); }
  void truncate(std::size_t size) { nodes_.resize(size); }
  void clear() { nodes_.clear(); }

  /// Collects decisions in chronological order.
  void unwind(TrailId id, std::vector<int>* cities, std::vector<int>* items) const {
    std::vector<int> c;
    std::vector<int> it;
    for (; id != kNoTrail; id = nodes_[id].parent) {
      const std::int32_t tag = nodes_[id].tag;
      if (tag >= 0) {
        it.push_back(tag);
      } else {
        c.push_back(-tag - 1);
      }
    }
    if (cities) cities->assign(c.rbegin(), c.rend());
    if (items) items->assign(it.rbegin(), it.rend());
  }

  /// Drops every node not reachable from `roots` and rewrites the roots in
  /// place. Parents always precede children, so a forward sweep remaps.
  void compact(std::span<TrailId* const> roots) {
    std::vector<char> live(nodes_.size(), 0);
    for (TrailId* root : roots) {
      for (TrailId id = *root; id != kNoTrail && !live[id]; id = nodes_[id].parent) live[id] = 1;
    }
    std::vector<TrailId> remap(nodes_.size(), kNoTrail);
    std::vector<Node> kept;
    kept.reserve(static_cast<std::size_t>(std::count(live.begin(), live.end(), 1)));
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!live[i]) continue;
      Node node = nodes_[i];
      if (node.parent != kNoTrail) node.parent = remap[node.parent];
      remap[i] = static_cast<TrailId>(kept.size());
      kept.push_back(node);
    }
    for (TrailId* root : roots) {
      if (*root != kNoTrail) *root = remap[*root];
    }
    nodes_ = std::move(kept);
  }

 private:
  TrailId push(TrailId parent, std::int32_t tag) {
    nodes_.push_back(Node{parent, tag});
    return static_cast<TrailId>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
};

struct ProfileEntry {
  Weight weight = 0;
  double benefit = 0.0;
  TrailId trail = kNoTrail;
};

class WeightProfile {
 public:
  WeightProfile() = default;

  /// The empty prefix: weight 0, benefit 0.
  static WeightProfile initial(TrailId root = kNoTrail) {
    WeightProfile p;
    p.entries_.push_back(ProfileEntry{0, 0.0, root});
    return p;
  }

  static WeightProfile from_entries(std::vector<ProfileEntry> entries) {
    WeightProfile p;
    p.entries_ = std::move(entries);
    return p;
  }

  std::span<const ProfileEntry> entries() const { return entries_; }
  std::vector<ProfileEntry>& mutable_entries() { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Benefit stored for exactly `weight`, if reachable.
  std::optional<double> at(Weight weight) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), weight,
                                     [](const ProfileEntry& e, Weight w) { return e.weight < w; });
    if (it == entries_.end() || it->weight != weight) return std::nullopt;
    return it->benefit;
  }

  /// Highest-benefit entry; ties go to the lowest weight.
  const ProfileEntry* best() const {
    const ProfileEntry* top = nullptr;
    for (const ProfileEntry& e : entries_) {
      if (!top || e.benefit > top->benefit) top = &e;
    }
    return top;
  }

  double max_benefit() const {
    const ProfileEntry* top = best();
    return top ? top->benefit : -std::numeric_limits<double>::infinity();
  }

  /// Removes every entry that some lighter-or-equal entry matches or beats.
  void prune_dominated() {
    std::size_t out = 0;
    double running = -std::numeric_limits<double>::infinity();
    for (const ProfileEntry& e : entries_) {
      if (e.benefit > running) {
        running = e.benefit;
        entries_[out++] = e;
      }
    }
    entries_.resize(out);
  }

  bool is_pareto() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i].weight <= entries_[i - 1].weight) return false;
      if (entries_[i].benefit <= entries_[i - 1].benefit) return false;
    }
    return true;
  }

  /// `weight,benefit` rows for plotting.
  std::string to_csv() const {
    std::string out = "weight,benefit\n";
    char buf[64];
    for (const ProfileEntry& e : entries_) {
      std::snprintf(buf, sizeof buf, "%.17g", e.benefit);
      out += std::to_string(e.weight) + "," + buf + "\n";
    }
    return out;
  }

 private:
  std::vector<ProfileEntry> entries_;
};

struct ProfileOptions {
  bool prune = true;
};

/// Charges the rent for a leg of length `d`; an entry at weight w loses
/// R * d / (v_max - nu * w).
inline WeightProfile apply_leg(WeightProfile profile, const Instance& inst, Distance d,
                               ProfileOptions opts = {}) {
  if (d == 0) return profile;
  for (ProfileEntry& e : profile.mutable_entries()) e.benefit -= inst.leg_cost(d, e.weight);
  if (opts.prune) profile.prune_dominated();
  return profile;
}

/// 0/1 knapsack step over the items of `city`. On equal benefit the entry
/// without the new item is kept.
inline WeightProfile apply_city_items(const WeightProfile& profile, const Instance& inst, int city,
                                      DecisionTrail* trail = nullptr, ProfileOptions opts = {}) {
  const auto items = inst.items_at(city);
  if (items.empty()) return profile;
  const Weight capacity = inst.capacity();

  std::vector<ProfileEntry> current(profile.entries().begin(), profile.entries().end());
  std::vector<ProfileEntry> next;
  for (int item : items) {
    const Weight w = inst.item(item).weight;
    const double p = static_cast<double>(inst.item(item).profit);
    next.clear();
    next.reserve(current.size() * 2);
    // Merge `current` with `current` shifted by the item, both sorted by weight.
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < current.size() || b < current.size()) {
      const bool b_ok = b < current.size() && current[b].weight + w <= capacity;
      if (!b_ok) {
        if (a == current.size()) break;
        next.push_back(current[a++]);
        continue;
      }
      const Weight wb = current[b].weight + w;
      if (a < current.size() && current[a].weight < wb) {
        next.push_back(current[a++]);
      } else if (a < current.size() && current[a].weight == wb) {
        const double taken = current[b].benefit + p;
        if (taken > current[a].benefit) {
          next.push_back(ProfileEntry{wb, taken, trail ? trail->pick(current[b].trail, item) : kNoTrail});
        } else {
          next.push_back(current[a]);
        }
        ++a;
        ++b;
      } else {
        next.push_back(ProfileEntry{wb, current[b].benefit + p,
                                    trail ? trail->pick(current[b].trail, item) : kNoTrail});
        ++b;
      }
    }
    current.swap(next);
  }
  WeightProfile out = WeightProfile::from_entries(std::move(current));
  if (opts.prune) out.prune_dominated();
  return out;
}

/// Per-weight maximum of two profiles; on equal benefit `a` wins.
inline WeightProfile merge_profiles(const WeightProfile& a, const WeightProfile& b, ProfileOptions opts = {}) {
  const auto ea = a.entries();
  const auto eb = b.entries();
  std::vector<ProfileEntry> out;
  out.reserve(ea.size() + eb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].weight < eb[j].weight)) {
      out.push_back(ea[i++]);
    } else if (i == ea.size() || eb[j].weight < ea[i].weight) {
      out.push_back(eb[j++]);
    } else {
      out.push_back(eb[j].benefit > ea[i].benefit ? eb[j] : ea[i]);
      ++i;
      ++j;
    }
  }
  WeightProfile merged = WeightProfile::from_entries(std::move(out));
  if (opts.prune) merged.prune_dominated();
  return merged;
}

/// Benefit of closing a tour from `entry`'s end city `last` back to the depot.
inline double closing_value(const Instance& inst, const ProfileEntry& entry, int last) {
  return entry.benefit - inst.leg_cost(inst.distance(last, 0), entry.weight);
}

struct PackResult {
  PackingPlan plan;
  double objective = 0.0;
  WeightProfile profile;  // after the last city's items, before the return leg
};

/// Optimal packing plan for a fixed tour.
inline PackResult pack_optimal(const Instance& inst, const Tour& tour, ProfileOptions opts = {}) {
  DecisionTrail trail;
  WeightProfile profile = WeightProfile::initial();
  const std::size_t n = tour.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int city = tour.order[i];
    profile = apply_city_items(profile, inst, city, &trail, opts);
    if (i + 1 < n) profile = apply_leg(std::move(profile), inst, inst.distance(city, tour.order[i + 1]), opts);
  }
  PackResult result;
  result.profile = profile;
  const int last = tour.order.back();
  const ProfileEntry* best = nullptr;
  double best_value = -std::numeric_limits<double>::infinity();
  for (const ProfileEntry& e : profile.entries()) {
    const double v = closing_value(inst, e, last);
    if (!best || v > best_value) {
      best = &e;
      best_value = v;
    }
  }
  result.plan = PackingPlan::empty(inst);
  std::vector<int> items;
  trail.unwind(best->trail, nullptr, &items);
  for (int item : items) result.plan.selected[static_cast<std::size_t>(item)] = 1;
  result.objective = best_value;
  return result;
}

}  // namespace ttp
