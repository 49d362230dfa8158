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

// Small benchmark instances cut out of TSPLIB eil51.
//
// A generated instance keeps city 1 of eil51, draws n-1 further cities
// uniformly without replacement, generates k(n-1) knapsack items of the
// requested type, sorts them by decreasing profit and hands them out in
// blocks of k: the best k go to the second city, the next k to the third,
// and so on. Capacity follows the benchmark convention
// C = ceil(Q * total weight / 11) for capacity category Q.
//
// Random streams: cities use Rng(mix_seed(seed, 1)), items use
// Rng(mix_seed(seed, 2)); see rng.hpp for the portable draws.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/instance_io.hpp"
#include "ttp/rng.hpp"

namespace ttp {

/// TSPLIB eil51 node coordinates, node 1 first.
inline constexpr std::array<Point, 51> kEil51 = {{
    {37, 52}, {49, 49}, {52, 64}, {20, 26}, {40, 30}, {21, 47}, {17, 63}, {31, 62}, {52, 33}, {51, 21},
    {42, 41}, {31, 32}, {5, 25},  {12, 42}, {36, 16}, {52, 41}, {27, 23}, {17, 33}, {13, 13}, {57, 58},
    {62, 42}, {42, 57}, {16, 57}, {8, 52},  {7, 38},  {27, 68}, {30, 48}, {43, 67}, {58, 48}, {58, 27},
    {37, 69}, {38, 46}, {46, 10}, {61, 33}, {62, 63}, {63, 69}, {32, 22}, {45, 35}, {59, 15}, {5, 6},
    {10, 17}, {21, 10}, {5, 64},  {30, 15}, {39, 10}, {32, 39}, {25, 32}, {25, 55}, {48, 28}, {56, 37},
    {30, 40},
}};

enum class KnapsackType { kUncorrelated, kUncorrSimilarWeights, kMultipleStronglyCorr };

/// Short form used in instance names.
inline std::string_view type_tag(KnapsackType t) {
  switch (t) {
    case KnapsackType::kUncorrelated: return "uncorr";
    case KnapsackType::kUncorrSimilarWeights: return "uncorr-similar-weights";
    case KnapsackType::kMultipleStronglyCorr: return "multiple-strongly-corr";
  }
  return "?";
}

/// Long form used in the KNAPSACK DATA TYPE header.
inline std::string_view type_description(KnapsackType t) {
  switch (t) {
    case KnapsackType::kUncorrelated: return "uncorrelated";
    case KnapsackType::kUncorrSimilarWeights: return "uncorrelated, similar weights";
    case KnapsackType::kMultipleStronglyCorr: return "multiple strongly correlated";
  }
  return "?";
}

inline KnapsackType parse_knapsack_type(std::string_view s) {
  for (KnapsackType t : {KnapsackType::kUncorrelated, KnapsackType::kUncorrSimilarWeights,
                         KnapsackType::kMultipleStronglyCorr}) {
    if (s == type_tag(t) || s == type_description(t)) return t;
  }
  if (s == "uncorr-s-w" || s == "usw") return KnapsackType::kUncorrSimilarWeights;
  if (s == "m-s-corr" || s == "msc") return KnapsackType::kMultipleStronglyCorr;
  throw std::invalid_argument("unknown knapsack type '" + std::string(s) + "'");
}

struct GenSpec {
  int n = 5;
  int items_per_city = 1;
  KnapsackType type = KnapsackType::kUncorrelated;
  int capacity_category = 1;
  Profit coeff_range = 1000;
  std::optional<double> renting_rate;  // required; no default on purpose
  std::uint64_t seed = 0;
  double min_speed = 0.1;
  double max_speed = 1.0;

  int num_items() const { return items_per_city * (n - 1); }
};

struct GeneratedItem {
  Profit profit = 0;
  Weight weight = 0;
  friend bool operator==(const GeneratedItem&, const GeneratedItem&) = default;
};

/// Parameters of the multiple-strongly-correlated family.
struct StrongCorrelation {
  Profit k1;
  Profit k2;
  Weight divisor;
};

inline StrongCorrelation strong_correlation(Profit coeff_range) {
  return StrongCorrelation{3 * coeff_range / 10, 2 * coeff_range / 10, 6};
}

inline constexpr Weight kSimilarWeightBand = 10;

/// Indices into `base_size` cities: 0 first, then n-1 others in ascending order.
inline std::vector<int> subselect_cities(int base_size, int n, std::uint64_t seed) {
  if (n < 5 || n > base_size) {
    throw std::invalid_argument("city count must be between 5 and " + std::to_string(base_size));
  }
  Rng rng(mix_seed(seed, 1));
  std::vector<int> pool(static_cast<std::size_t>(base_size - 1));
  std::iota(pool.begin(), pool.end(), 1);
  // Partial Fisher-Yates: the first n-1 slots become the sample.
  for (int i = 0; i < n - 1; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(i, base_size - 2));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + (n - 1));
  std::sort(chosen.begin(), chosen.end());
  chosen.insert(chosen.begin(), 0);
  return chosen;
}

inline std::vector<GeneratedItem> gen_items(KnapsackType type, int m, Profit coeff_range, Rng& rng) {
  if (m < 1) throw std::invalid_argument("need at least one item");
  if (coeff_range < 10) throw std::invalid_argument("coefficient range must be at least 10");
  std::vector<GeneratedItem> items(static_cast<std::size_t>(m));
  const StrongCorrelation sc = strong_correlation(coeff_range);
  for (GeneratedItem& it : items) {
    switch (type) {
      case KnapsackType::kUncorrelated:
        it.weight = rng.uniform_int(1, coeff_range);
        it.profit = rng.uniform_int(1, coeff_range);
        break;
      case KnapsackType::kUncorrSimilarWeights:
        it.weight = rng.uniform_int(coeff_range, coeff_range + kSimilarWeightBand);
        it.profit = rng.uniform_int(1, coeff_range);
        break;
      case KnapsackType::kMultipleStronglyCorr:
        it.weight = rng.uniform_int(1, coeff_range);
        it.profit = it.weight + (it.weight % sc.divisor == 0 ? sc.k1 : sc.k2);
        break;
    }
  }
  return items;
}

/// Sorts by decreasing profit (then increasing weight, then generation
/// order) and gives consecutive blocks of k items to cities 2, 3, ..., n.
inline std::vector<Item> assign_items(std::span<const GeneratedItem> items, int n, int k) {
  if (static_cast<int>(items.size()) != k * (n - 1)) {
    throw std::invalid_argument("expected " + std::to_string(k * (n - 1)) + " items, got " +
                                std::to_string(items.size()));
  }
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const GeneratedItem& x = items[static_cast<std::size_t>(a)];
    const GeneratedItem& y = items[static_cast<std::size_t>(b)];
    if (x.profit != y.profit) return x.profit > y.profit;
    return x.weight < y.weight;
  });
  std::vector<Item> out;
  out.reserve(items.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    const GeneratedItem& g = items[static_cast<std::size_t>(order[r])];
    out.push_back(Item{1 + static_cast<int>(r) / k, g.profit, g.weight});
  }
  return out;
}

inline Weight capacity_for(int category, Weight total_weight) {
  if (category < 1 || category > 10) throw std::invalid_argument("capacity category must be in 1..10");
  return (static_cast<Weight>(category) * total_weight + 10) / 11;
}

inline std::string instance_name(const GenSpec& spec) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "eil51_n%02d_m%d_%s_%02d", spec.n, spec.num_items(),
                std::string(type_tag(spec.type)).c_str(), spec.capacity_category);
  return buf;
}

inline Instance generate_instance(const GenSpec& spec) {
  if (!spec.renting_rate) throw std::invalid_argument("renting rate must be given explicitly");
  if (spec.items_per_city < 1) throw std::invalid_argument("items per city must be positive");
  const std::vector<int> cities = subselect_cities(static_cast<int>(kEil51.size()), spec.n, spec.seed);
  Rng item_rng(mix_seed(spec.seed, 2));
  const std::vector<GeneratedItem> raw = gen_items(spec.type, spec.num_items(), spec.coeff_range, item_rng);

  InstanceData data;
  data.name = instance_name(spec);
  data.knapsack_type = std::string(type_description(spec.type));
  for (int c : cities) data.coords.push_back(kEil51[static_cast<std::size_t>(c)]);
  data.items = assign_items(raw, spec.n, spec.items_per_city);
  Weight total = 0;
  for (const Item& it : data.items) total += it.weight;
  data.capacity = capacity_for(spec.capacity_category, total);
  data.renting_rate = *spec.renting_rate;
  data.min_speed = spec.min_speed;
  data.max_speed = spec.max_speed;
  return Instance(std::move(data));
}

/// Generates the instance and writes `<dir>/<name>.ttp`; returns the path.
inline std::filesystem::path write_generated_instance(const GenSpec& spec, const std::filesystem::path& dir) {
  const Instance inst = generate_instance(spec);
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / (inst.name() + ".ttp");
  write_instance_file(inst, path.string());
  return path;
}

}  // namespace ttp
