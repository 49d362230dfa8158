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

// Reader and writer for the TSPLIB-style TTP benchmark format:
//
//   PROBLEM NAME: 	eil51_n05_m4_uncorr_01
//   KNAPSACK DATA TYPE: 	uncorrelated
//   DIMENSION: 	5
//   NUMBER OF ITEMS: 	4
//   CAPACITY OF KNAPSACK: 	362
//   MIN SPEED: 	0.1
//   MAX SPEED: 	1
//   RENTING RATIO: 	1
//   EDGE_WEIGHT_TYPE: 	CEIL_2D
//   NODE_COORD_SECTION	(INDEX, X, Y):
//   1	37	52
//   ...
//   ITEMS SECTION	(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):
//   1	962	35	2
//   ...
//
// Keys are matched case-sensitively up to the colon, values and rows may be
// separated by any mix of spaces and tabs, and CR line endings are ignored.

#pragma once

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ttp/instance.hpp"

namespace ttp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + field + ": " + message),
        line_(line),
        field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

namespace io_detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view text, int line, const std::string& field) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, field, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

inline double parse_real(std::string_view text, int line, const std::string& field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(line, field, "expected a real number, got '" + std::string(text) + "'");
  }
  return value;
}

inline std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace io_detail

/// Parses TTP instance text. Cities and items are renumbered to 0-based.
inline Instance parse_instance(std::string_view text) {
  using namespace io_detail;
  enum class Section { kHeader, kCoords, kItems };

  struct HeaderValue {
    std::string value;
    int line = 0;
  };
  std::map<std::string, HeaderValue, std::less<>> header;
  struct Row {
    std::vector<std::string_view> cols;
    int line;
  };
  std::vector<Row> coord_rows;
  std::vector<Row> item_rows;

  Section section = Section::kHeader;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.starts_with("NODE_COORD_SECTION")) {
      section = Section::kCoords;
    } else if (line.starts_with("ITEMS SECTION")) {
      section = Section::kItems;
    } else if (line == "EOF") {
      break;
    } else if (section == Section::kHeader) {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "header", "expected 'KEY: value', got '" + std::string(line) + "'");
      }
      const std::string key(trim(line.substr(0, colon)));
      header[key] = HeaderValue{std::string(trim(line.substr(colon + 1))), line_no};
    } else {
      Row row{split_ws(line), line_no};
      (section == Section::kCoords ? coord_rows : item_rows).push_back(std::move(row));
    }
    if (end == text.size()) break;
  }

  const auto require = [&](std::string_view key) -> const HeaderValue& {
    const auto it = header.find(key);
    if (it == header.end()) throw ParseError(line_no, std::string(key), "missing header key");
    return it->second;
  };
  const auto header_int = [&](std::string_view key) {
    const HeaderValue& h = require(key);
    return parse_int(h.value, h.line, std::string(key));
  };
  const auto header_real = [&](std::string_view key) {
    const HeaderValue& h = require(key);
    return parse_real(h.value, h.line, std::string(key));
  };

  InstanceData data;
  if (const auto it = header.find("PROBLEM NAME"); it != header.end()) data.name = it->second.value;
  if (const auto it = header.find("KNAPSACK DATA TYPE"); it != header.end()) {
    data.knapsack_type = it->second.value;
  }
  const HeaderValue& edge = require("EDGE_WEIGHT_TYPE");
  if (edge.value != "CEIL_2D") {
    throw ParseError(edge.line, "EDGE_WEIGHT_TYPE", "unsupported type '" + edge.value + "' (only CEIL_2D)");
  }
  const std::int64_t n = header_int("DIMENSION");
  const std::int64_t m = header_int("NUMBER OF ITEMS");
  if (n < 2 || n > Instance::kMaxCities) {
    throw ParseError(require("DIMENSION").line, "DIMENSION",
                     "must be between 2 and " + std::to_string(Instance::kMaxCities));
  }
  if (m < 0) throw ParseError(require("NUMBER OF ITEMS").line, "NUMBER OF ITEMS", "must be non-negative");
  data.capacity = header_int("CAPACITY OF KNAPSACK");
  if (data.capacity <= 0) {
    throw ParseError(require("CAPACITY OF KNAPSACK").line, "CAPACITY OF KNAPSACK", "must be positive");
  }
  data.min_speed = header_real("MIN SPEED");
  data.max_speed = header_real("MAX SPEED");
  if (!(data.min_speed > 0.0 && data.min_speed < data.max_speed)) {
    throw ParseError(require("MAX SPEED").line, "MIN SPEED/MAX SPEED", "need 0 < min speed < max speed");
  }
  data.renting_rate = header_real("RENTING RATIO");
  if (data.renting_rate < 0.0) {
    throw ParseError(require("RENTING RATIO").line, "RENTING RATIO", "must be non-negative");
  }

  if (static_cast<std::int64_t>(coord_rows.size()) != n) {
    throw ParseError(line_no, "NODE_COORD_SECTION",
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(coord_rows.size()));
  }
  data.coords.assign(static_cast<std::size_t>(n), Point{});
  std::vector<char> seen_city(static_cast<std::size_t>(n), 0);
  for (const Row& row : coord_rows) {
    if (row.cols.size() != 3) throw ParseError(row.line, "node", "expected 'index x y'");
    const std::int64_t id = parse_int(row.cols[0], row.line, "node index");
    if (id < 1 || id > n || seen_city[static_cast<std::size_t>(id - 1)]) {
      throw ParseError(row.line, "node index", "invalid or duplicate index " + std::to_string(id));
    }
    seen_city[static_cast<std::size_t>(id - 1)] = 1;
    data.coords[static_cast<std::size_t>(id - 1)] =
        Point{parse_real(row.cols[1], row.line, "x"), parse_real(row.cols[2], row.line, "y")};
  }

  if (static_cast<std::int64_t>(item_rows.size()) != m) {
    throw ParseError(line_no, "ITEMS SECTION",
                     "expected " + std::to_string(m) + " rows, found " + std::to_string(item_rows.size()));
  }
  data.items.assign(static_cast<std::size_t>(m), Item{});
  std::vector<char> seen_item(static_cast<std::size_t>(m), 0);
  for (const Row& row : item_rows) {
    if (row.cols.size() != 4) throw ParseError(row.line, "item", "expected 'index profit weight city'");
    const std::int64_t id = parse_int(row.cols[0], row.line, "item index");
    if (id < 1 || id > m || seen_item[static_cast<std::size_t>(id - 1)]) {
      throw ParseError(row.line, "item index", "invalid or duplicate index " + std::to_string(id));
    }
    seen_item[static_cast<std::size_t>(id - 1)] = 1;
    Item item;
    item.profit = parse_int(row.cols[1], row.line, "profit");
    item.weight = parse_int(row.cols[2], row.line, "weight");
    const std::int64_t city = parse_int(row.cols[3], row.line, "city");
    if (item.profit < 1) throw ParseError(row.line, "profit", "must be a positive integer");
    if (item.weight < 1) throw ParseError(row.line, "weight", "must be a positive integer");
    if (city == 1) throw ParseError(row.line, "city", "city 1 is the start city and holds no items");
    if (city < 2 || city > n) throw ParseError(row.line, "city", "out of range: " + std::to_string(city));
    item.city = static_cast<int>(city - 1);
    data.items[static_cast<std::size_t>(id - 1)] = item;
  }
  return Instance(std::move(data));
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

/// Emits `inst` in the benchmark format; parse_instance(write_instance(x))
/// reproduces x exactly.
inline std::string write_instance(const Instance& inst) {
  using io_detail::format_real;
  std::string out;
  out += "PROBLEM NAME: \t" + inst.name() + "\n";
  out += "KNAPSACK DATA TYPE: \t" + inst.knapsack_type() + "\n";
  out += "DIMENSION: \t" + std::to_string(inst.num_cities()) + "\n";
  out += "NUMBER OF ITEMS: \t" + std::to_string(inst.num_items()) + "\n";
  out += "CAPACITY OF KNAPSACK: \t" + std::to_string(inst.capacity()) + "\n";
  out += "MIN SPEED: \t" + format_real(inst.min_speed()) + "\n";
  out += "MAX SPEED: \t" + format_real(inst.max_speed()) + "\n";
  out += "RENTING RATIO: \t" + format_real(inst.renting_rate()) + "\n";
  out += "EDGE_WEIGHT_TYPE:\tCEIL_2D\n";
  out += "NODE_COORD_SECTION\t(INDEX, X, Y): \n";
  for (int i = 0; i < inst.num_cities(); ++i) {
    const Point& p = inst.coords()[static_cast<std::size_t>(i)];
    out += std::to_string(i + 1) + "\t" + format_real(p.x) + "\t" + format_real(p.y) + "\n";
  }
  out += "ITEMS SECTION\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER): \n";
  for (int i = 0; i < inst.num_items(); ++i) {
    const Item& item = inst.item(i);
    out += std::to_string(i + 1) + "\t" + std::to_string(item.profit) + "\t" + std::to_string(item.weight) +
           "\t" + std::to_string(item.city + 1) + "\n";
  }
  return out;
}

inline void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot create instance file '" + path + "'");
  out << write_instance(inst);
  if (!out) throw std::runtime_error("failed writing instance file '" + path + "'");
}

}  // namespace ttp
