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

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ttp {

using Distance = std::int64_t;
using Weight = std::int64_t;
using Profit = std::int64_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Euclidean distance rounded up to the nearest integer (TSPLIB CEIL_2D).
inline Distance ceil2d(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return static_cast<Distance>(std::ceil(std::sqrt(dx * dx + dy * dy)));
}

/// Item located in a city. Cities are 0-based here; city 0 is the depot and
/// never holds items.
struct Item {
  int city = 0;
  Profit profit = 0;
  Weight weight = 0;
  friend bool operator==(const Item&, const Item&) = default;
};

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InstanceData {
  std::string name;
  std::string knapsack_type;
  std::vector<Point> coords;
  std::vector<Item> items;
  Weight capacity = 0;
  double renting_rate = 0.0;
  double min_speed = 0.1;
  double max_speed = 1.0;
};

/// Immutable TTP instance with a materialized CEIL_2D distance matrix.
class Instance {
 public:
  explicit Instance(InstanceData data) : data_(std::move(data)) {
    const int n = num_cities();
    if (n < 2) throw InstanceError("instance needs at least 2 cities");
    if (n > kMaxCities) {
      throw InstanceError("instance has " + std::to_string(n) +
                          " cities; at most " + std::to_string(kMaxCities) +
                          " are supported");
    }
    if (data_.capacity <= 0) throw InstanceError("capacity must be positive");
    if (!(data_.min_speed > 0.0) || !(data_.min_speed < data_.max_speed)) {
      throw InstanceError("speeds must satisfy 0 < v_min < v_max");
    }
    if (!(data_.renting_rate >= 0.0) || !std::isfinite(data_.renting_rate)) {
      throw InstanceError("renting rate must be a non-negative finite number");
    }
    for (const Point& p : data_.coords) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw InstanceError("coordinates must be finite");
      }
    }
    items_at_.resize(static_cast<std::size_t>(n));
    profit_at_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < data_.items.size(); ++i) {
      const Item& item = data_.items[i];
      if (item.city < 1 || item.city >= n) {
        throw InstanceError("item " + std::to_string(i + 1) +
                            " is assigned to invalid city " +
                            std::to_string(item.city + 1));
      }
      if (item.profit < 1 || item.weight < 1) {
        throw InstanceError("item " + std::to_string(i + 1) +
                            " must have positive profit and weight");
      }
      items_at_[static_cast<std::size_t>(item.city)].push_back(static_cast<int>(i));
      profit_at_[static_cast<std::size_t>(item.city)] += item.profit;
      total_weight_ += item.weight;
    }
    nu_ = (data_.max_speed - data_.min_speed) / static_cast<double>(data_.capacity);
    dist_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist_[index(i, j)] = i == j ? 0 : ceil2d(data_.coords[i], data_.coords[j]);
      }
    }
  }

  static constexpr int kMaxCities = 24;

  const std::string& name() const { return data_.name; }
  const std::string& knapsack_type() const { return data_.knapsack_type; }
  int num_cities() const { return static_cast<int>(data_.coords.size()); }
  int num_items() const { return static_cast<int>(data_.items.size()); }
  std::span<const Point> coords() const { return data_.coords; }
  std::span<const Item> items() const { return data_.items; }
  const Item& item(int i) const { return data_.items[static_cast<std::size_t>(i)]; }
  std::span<const int> items_at(int city) const {
    return items_at_[static_cast<std::size_t>(city)];
  }
  Profit profit_at(int city) const { return profit_at_[static_cast<std::size_t>(city)]; }
  Weight total_weight() const { return total_weight_; }
  Weight capacity() const { return data_.capacity; }
  double renting_rate() const { return data_.renting_rate; }
  double min_speed() const { return data_.min_speed; }
  double max_speed() const { return data_.max_speed; }
  double nu() const { return nu_; }
  const InstanceData& data() const { return data_; }

  Distance distance(int from, int to) const { return dist_[index(from, to)]; }

  /// Travel speed when carrying `weight`. A full knapsack moves at exactly
  /// v_min.
  double speed(Weight weight) const {
    if (weight >= data_.capacity) return data_.min_speed;
    return data_.max_speed - nu_ * static_cast<double>(weight);
  }

  /// Rent paid for traversing `d` while carrying `weight`.
  double leg_cost(Distance d, Weight weight) const {
    if (d == 0) return 0.0;
    return data_.renting_rate * static_cast<double>(d) / speed(weight);
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * data_.coords.size() + static_cast<std::size_t>(j);
  }

  InstanceData data_;
  std::vector<std::vector<int>> items_at_;
  std::vector<Profit> profit_at_;
  std::vector<Distance> dist_;
  Weight total_weight_ = 0;
  double nu_ = 0.0;
};

}  // namespace ttp
