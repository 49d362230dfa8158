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

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "ttp/solution.hpp"

namespace ttp {

enum class Status { kOptimal, kFeasible, kTimeout };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "optimal";
    case Status::kFeasible: return "feasible";
    case Status::kTimeout: return "timeout";
  }
  return "unknown";
}

struct SolveReport {
  Status status = Status::kTimeout;
  std::optional<Solution> solution;
  double seconds = 0.0;
  std::uint64_t nodes = 0;        // search nodes or DP state extensions
  std::uint64_t states = 0;       // DP states created
  std::uint64_t peak_states = 0;  // largest live layer
  std::uint64_t pruned = 0;
  std::uint64_t peak_bytes = 0;
  int max_depth = 0;
  std::string abort_reason;  // "time" or "memory" when status is kTimeout

  double objective() const {
    return solution ? solution->objective : -std::numeric_limits<double>::infinity();
  }
};

/// Wall-clock budget. A non-positive limit means unlimited.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(double seconds = 0.0) : start_(Clock::now()), limit_(seconds) {}

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  bool expired() const { return limit_ > 0.0 && elapsed() >= limit_; }

  /// Checks the clock only every 1024 calls.
  bool poll() {
    if (limit_ <= 0.0) return false;
    if ((++ticks_ & 1023u) != 0) return expired_;
    expired_ = expired();
    return expired_;
  }

 private:
  Clock::time_point start_;
  double limit_;
  std::uint32_t ticks_ = 0;
  bool expired_ = false;
};

/// One line of the machine-readable progress channel.
struct Progress {
  std::string solver;
  int stage = 0;             // DP layer or search depth
  std::uint64_t live = 0;    // live states or nodes so far
  std::uint64_t pruned = 0;
  double incumbent = -std::numeric_limits<double>::infinity();
  double bound = std::numeric_limits<double>::quiet_NaN();
};

using ProgressSink = std::function<void(const Progress&)>;

inline std::string format_progress(const Progress& p) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "progress solver=%s stage=%d live=%llu pruned=%llu incumbent=%.6f bound=%.6f",
                p.solver.c_str(), p.stage, static_cast<unsigned long long>(p.live),
                static_cast<unsigned long long>(p.pruned), p.incumbent, p.bound);
  return buf;
}

}  // namespace ttp
