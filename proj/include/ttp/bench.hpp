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

// Experiment harness: solver x instance matrices, result CSV, derived
// markdown tables and gap plot data.
//
// Each (instance, solver) pair runs in its own forked process with an
// address-space limit and a wall-clock deadline, so a runaway solve is
// recorded as a failed row instead of taking the harness down. The parent
// is single threaded and keeps at most `width` children alive.
//
// CSV columns:
//   instance,n,m,solver,status,objective,std,gap,runtime_s,nodes,states,reps
// Empty objective/gap fields mean "unknown". The CSV is the source of
// truth; every table is recomputed from rows.

#pragma once

#include <fcntl.h>
#include <glob.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <new>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ttp/bnb.hpp"
#include "ttp/brute_force.hpp"
#include "ttp/cp_model.hpp"
#include "ttp/exact_dp.hpp"
#include "ttp/heuristics.hpp"
#include "ttp/instance_io.hpp"
#include "ttp/rng.hpp"

namespace ttp::bench {

inline constexpr std::array<std::string_view, 6> kSolverNames = {"dp", "bnb", "cp", "dp-s1", "dp-s5", "brute"};

inline bool is_known_solver(std::string_view s) {
  return std::find(kSolverNames.begin(), kSolverNames.end(), s) != kSolverNames.end();
}
inline bool is_exact_solver(std::string_view s) { return s == "dp" || s == "bnb" || s == "cp" || s == "brute"; }

/// Absolute tolerance for "average equals the optimum" (print precision of the tables).
inline constexpr double kOptTolerance = 1e-3;
/// Relative tolerance of the cross-solver consistency gate.
inline constexpr double kConsistencyTolerance = 1e-9;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error("config line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// 32 GiB, or three quarters of physical memory when the host has less.
inline std::uint64_t default_memory_cap() {
  constexpr std::uint64_t k32G = std::uint64_t{32} << 30;
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page = sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page <= 0) return k32G;
  const std::uint64_t host = static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page);
  return std::min(k32G, host / 4 * 3);
}

/// "512M", "4G", "1024" (bytes). Suffixes are binary.
inline std::uint64_t parse_size(std::string_view s) {
  s = io_detail::trim(s);
  if (s.empty()) throw std::invalid_argument("empty size");
  std::uint64_t scale = 1;
  switch (s.back()) {
    case 'k': case 'K': scale = std::uint64_t{1} << 10; break;
    case 'm': case 'M': scale = std::uint64_t{1} << 20; break;
    case 'g': case 'G': scale = std::uint64_t{1} << 30; break;
    default: break;
  }
  if (scale != 1) s.remove_suffix(1);
  const double v = std::stod(std::string(s));
  if (!(v >= 0)) throw std::invalid_argument("negative size");
  return static_cast<std::uint64_t>(v * static_cast<double>(scale));
}

struct RunConfig {
  std::vector<std::string> solvers;
  std::vector<std::string> instances;  // file paths or glob patterns
  double exact_time_limit = 24.0 * 3600.0;
  double heuristic_time_limit = 600.0;  // per repetition
  std::uint64_t memory_cap = default_memory_cap();
  int repetitions = 10;
  int dp_s5_restarts = 0;  // > 0: restart-count mode (reproducible); 0: wall clock
  std::uint64_t seed = 0;
  std::string output_dir = "results";
  int width = 1;
  BoundVariant bnb_bound = BoundVariant::kCombined;

  void validate() const {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (width < 1) throw std::invalid_argument("width must be at least 1");
    if (exact_time_limit <= 0 || heuristic_time_limit <= 0) throw std::invalid_argument("time limits must be positive");
    for (const std::string& s : solvers) {
      if (!is_known_solver(s)) throw std::invalid_argument("unknown solver '" + s + "'");
    }
  }
};

inline BoundVariant parse_bound_variant(std::string_view s) {
  for (BoundVariant v : {BoundVariant::kBase, BoundVariant::kFarthest, BoundVariant::kGlobal, BoundVariant::kCombined}) {
    if (s == to_string(v)) return v;
  }
  throw std::invalid_argument("unknown bound variant '" + std::string(s) + "'");
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string_view piece = io_detail::trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Flat `key = value` format; `#` starts a comment; list keys may repeat.
inline RunConfig parse_run_config(std::string_view text) {
  RunConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = io_detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected key = value");
    const std::string key(io_detail::trim(line.substr(0, eq)));
    const std::string_view value = io_detail::trim(line.substr(eq + 1));
    try {
      if (key == "solvers") {
        for (std::string& s : split_list(value)) cfg.solvers.push_back(std::move(s));
      } else if (key == "instances") {
        for (std::string& s : split_list(value)) cfg.instances.push_back(std::move(s));
      } else if (key == "time_limit" || key == "exact_time_limit") {
        cfg.exact_time_limit = std::stod(std::string(value));
      } else if (key == "heuristic_time_limit") {
        cfg.heuristic_time_limit = std::stod(std::string(value));
      } else if (key == "memory_cap") {
        cfg.memory_cap = parse_size(value);
      } else if (key == "repetitions") {
        cfg.repetitions = std::stoi(std::string(value));
      } else if (key == "dp_s5_restarts") {
        cfg.dp_s5_restarts = std::stoi(std::string(value));
      } else if (key == "seed") {
        cfg.seed = std::stoull(std::string(value));
      } else if (key == "output_dir") {
        cfg.output_dir = std::string(value);
      } else if (key == "width") {
        cfg.width = std::stoi(std::string(value));
      } else if (key == "bnb_bound") {
        cfg.bnb_bound = parse_bound_variant(value);
      } else {
        throw ConfigError(line_no, "unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(line_no, key + ": " + e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw ConfigError(line_no, e.what());
  }
  return cfg;
}

inline RunConfig read_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

/// Patterns with wildcards are globbed (sorted); plain paths pass through.
inline std::vector<std::string> expand_instances(const std::vector<std::string>& patterns) {
  std::vector<std::string> out;
  for (const std::string& p : patterns) {
    if (p.find_first_of("*?[") == std::string::npos) {
      out.push_back(p);
      continue;
    }
    glob_t g{};
    if (::glob(p.c_str(), 0, nullptr, &g) == 0) {
      for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
    }
    globfree(&g);
  }
  return out;
}

// ---------------------------------------------------------------- rows

inline constexpr double kUnknown = std::numeric_limits<double>::quiet_NaN();

struct ResultRow {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string solver;
  std::string status;  // optimal, feasible, timeout, memory, error
  double objective = kUnknown;
  double std = 0.0;
  double gap = kUnknown;
  double runtime_s = 0.0;
  std::uint64_t nodes = 0;
  std::uint64_t states = 0;
  int reps = 1;

  bool has_objective() const { return !std::isnan(objective); }
  bool has_gap() const { return !std::isnan(gap); }
  bool optimal() const { return status == "optimal"; }
};

inline constexpr std::string_view kCsvHeader = "instance,n,m,solver,status,objective,std,gap,runtime_s,nodes,states,reps";

inline std::string format_optional(double v) { return std::isnan(v) ? std::string() : io_detail::format_real(v); }

inline std::string to_csv_line(const ResultRow& r) {
  char runtime[32];
  std::snprintf(runtime, sizeof runtime, "%.3f", r.runtime_s);
  std::string line = r.instance + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + r.solver + ',' +
                     r.status + ',' + format_optional(r.objective) + ',' + io_detail::format_real(r.std) + ',' +
                     format_optional(r.gap) + ',' + runtime + ',' + std::to_string(r.nodes) + ',' +
                     std::to_string(r.states) + ',' + std::to_string(r.reps);
  return line;
}

inline ResultRow parse_csv_line(std::string_view line) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    f.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (f.size() != 12) throw std::invalid_argument("expected 12 CSV fields, got " + std::to_string(f.size()));
  const auto real_or_unknown = [](std::string_view s) {
    s = io_detail::trim(s);
    return s.empty() || s == "-" ? kUnknown : std::stod(std::string(s));
  };
  ResultRow r;
  r.instance = std::string(io_detail::trim(f[0]));
  r.n = std::stoi(std::string(f[1]));
  r.m = std::stoi(std::string(f[2]));
  r.solver = std::string(io_detail::trim(f[3]));
  r.status = std::string(io_detail::trim(f[4]));
  r.objective = real_or_unknown(f[5]);
  r.std = real_or_unknown(f[6]);
  if (std::isnan(r.std)) r.std = 0.0;
  r.gap = real_or_unknown(f[7]);
  r.runtime_s = std::stod(std::string(f[8]));
  r.nodes = std::stoull(std::string(f[9]));
  r.states = std::stoull(std::string(f[10]));
  r.reps = std::stoi(std::string(f[11]));
  return r;
}

inline void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) out << to_csv_line(r) << '\n';
}

inline std::vector<ResultRow> read_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (io_detail::trim(line).empty()) continue;
    if (header) {
      header = false;
      if (io_detail::trim(line) != kCsvHeader) throw std::invalid_argument("unexpected CSV header");
      continue;
    }
    rows.push_back(parse_csv_line(line));
  }
  return rows;
}

inline std::vector<ResultRow> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_csv(in);
}

// ---------------------------------------------------------------- solving

inline double gap_percent(double opt, double obj) { return (opt - obj) / opt * 100.0; }

/// Mean and sample standard deviation (0 for a single value).
inline std::pair<double, double> mean_std(const std::vector<double>& v) {
  if (v.empty()) return {kUnknown, 0.0};
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  if (v.size() < 2) return {mean, 0.0};
  double sq = 0.0;
  for (double x : v) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / static_cast<double>(v.size() - 1))};
}

inline std::string status_of(const SolveReport& r) {
  if (r.status == Status::kOptimal) return "optimal";
  if (r.status == Status::kFeasible) return "feasible";
  return r.abort_reason == "memory" ? "memory" : "timeout";
}

/// Runs one (instance, solver) cell in the calling process.
inline ResultRow execute(const Instance& inst, std::string_view solver, const RunConfig& cfg) {
  ResultRow row;
  row.instance = inst.name();
  row.n = inst.num_cities();
  row.m = inst.num_items();
  row.solver = std::string(solver);
  const auto take = [&](const SolveReport& r) {
    row.status = status_of(r);
    if (r.solution) row.objective = r.solution->objective;
    row.runtime_s = r.seconds;
    row.nodes = r.nodes;
    row.states = r.states;
  };
  if (solver == "dp") {
    DpOptions o;
    o.time_limit = cfg.exact_time_limit;
    o.memory_cap = cfg.memory_cap;
    take(solve_dp(inst, o));
  } else if (solver == "bnb") {
    BnbConfig c;
    c.bound = cfg.bnb_bound;
    c.time_limit = cfg.exact_time_limit;
    take(solve_bnb(inst, c));
  } else if (solver == "cp") {
    const CpModel model = build_model(inst);
    CpConfig c;
    c.time_limit = cfg.exact_time_limit;
    take(solve_cp(model, c));
  } else if (solver == "brute") {
    if (inst.num_cities() > kBruteForceMaxCities) {
      row.status = "error";
      return row;
    }
    take(solve_brute(inst, cfg.exact_time_limit));
  } else if (solver == "dp-s1" || solver == "dp-s5") {
    std::vector<double> values;
    double seconds = 0.0;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
      const std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(rep));
      Deadline clock;
      Solution s;
      if (solver == "dp-s1") {
        s = dp_s1(inst, seed);
      } else {
        RestartBudget budget;
        if (cfg.dp_s5_restarts > 0) {
          budget.restarts = cfg.dp_s5_restarts;
        } else {
          budget.seconds = cfg.heuristic_time_limit;
        }
        s = dp_s5(inst, budget, seed).best;
      }
      seconds += clock.elapsed();
      values.push_back(s.objective);
    }
    const auto [mean, sd] = mean_std(values);
    row.status = "feasible";
    row.objective = mean;
    row.std = sd;
    row.reps = cfg.repetitions;
    row.runtime_s = seconds / static_cast<double>(cfg.repetitions);
  } else {
    throw std::invalid_argument("unknown solver '" + std::string(solver) + "'");
  }
  return row;
}

/// Wall-clock allowance for one forked cell, including a grace period.
inline double wall_limit(std::string_view solver, const RunConfig& cfg) {
  constexpr double kGrace = 30.0;
  if (is_exact_solver(solver)) return cfg.exact_time_limit + kGrace;
  return cfg.heuristic_time_limit * cfg.repetitions + kGrace;
}

struct Cell {
  std::string path;
  std::string solver;
  ResultRow skeleton;  // instance/n/m/solver prefilled; used for failure rows
  std::optional<Instance> instance;
};

namespace detail {

struct Child {
  pid_t pid = -1;
  int fd = -1;
  std::size_t cell = 0;
  std::chrono::steady_clock::time_point deadline;
  bool killed = false;
  std::string output;
};

inline void drain(Child& c) {
  char buf[4096];
  for (;;) {
    const ssize_t got = ::read(c.fd, buf, sizeof buf);
    if (got <= 0) break;
    c.output.append(buf, static_cast<std::size_t>(got));
  }
}

inline Child spawn(const Cell& cell, std::size_t index, const RunConfig& cfg) {
  int fds[2];
  if (::pipe(fds) != 0) throw std::runtime_error("pipe failed");
  std::fflush(nullptr);
  const pid_t pid = ::fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    ::close(fds[0]);
    if (cfg.memory_cap > 0) {
      rlimit lim{cfg.memory_cap, cfg.memory_cap};
      ::setrlimit(RLIMIT_AS, &lim);
    }
    ResultRow row = cell.skeleton;
    try {
      row = execute(*cell.instance, cell.solver, cfg);
    } catch (const std::bad_alloc&) {
      row.status = "memory";
    } catch (const std::exception&) {
      row.status = "error";
    }
    const std::string line = to_csv_line(row) + '\n';
    std::size_t off = 0;
    while (off < line.size()) {
      const ssize_t put = ::write(fds[1], line.data() + off, line.size() - off);
      if (put <= 0) break;
      off += static_cast<std::size_t>(put);
    }
    ::close(fds[1]);
    std::fflush(nullptr);
    ::_exit(0);
  }
  ::close(fds[1]);
  ::fcntl(fds[0], F_SETFL, ::fcntl(fds[0], F_GETFL) | O_NONBLOCK);
  Child c;
  c.pid = pid;
  c.fd = fds[0];
  c.cell = index;
  c.deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(wall_limit(cell.solver, cfg)));
  return c;
}

inline ResultRow reap(Child& c, int wait_status, const Cell& cell) {
  drain(c);
  ::close(c.fd);
  ResultRow row = cell.skeleton;
  const std::size_t nl = c.output.find('\n');
  if (WIFEXITED(wait_status) && WEXITSTATUS(wait_status) == 0 && nl != std::string::npos) {
    try {
      return parse_csv_line(std::string_view(c.output).substr(0, nl));
    } catch (const std::exception&) {
      row.status = "error";
      return row;
    }
  }
  if (c.killed) {
    row.status = "timeout";
  } else if (WIFSIGNALED(wait_status) && WTERMSIG(wait_status) == SIGKILL) {
    row.status = "memory";  // killed from outside, most likely the OOM killer
  } else {
    row.status = "error";
  }
  return row;
}

}  // namespace detail

/// Runs every cell in isolated child processes, at most `width` at a time.
/// Rows come back in cell order regardless of completion order.
inline std::vector<ResultRow> run_cells(std::vector<Cell>& cells, const RunConfig& cfg, std::ostream* log = nullptr) {
  std::vector<ResultRow> rows(cells.size());
  std::vector<bool> done(cells.size(), false);
  std::vector<detail::Child> running;
  std::size_t next = 0;
  while (next < cells.size() || !running.empty()) {
    while (running.size() < static_cast<std::size_t>(cfg.width) && next < cells.size()) {
      const std::size_t i = next++;
      if (!cells[i].instance) {
        rows[i] = cells[i].skeleton;  // parse failure recorded up front
        done[i] = true;
        continue;
      }
      running.push_back(detail::spawn(cells[i], i, cfg));
    }
    bool reaped = false;
    for (auto it = running.begin(); it != running.end();) {
      detail::drain(*it);
      int st = 0;
      if (::waitpid(it->pid, &st, WNOHANG) == it->pid) {
        rows[it->cell] = detail::reap(*it, st, cells[it->cell]);
        done[it->cell] = true;
        if (log) *log << "[bench] " << rows[it->cell].instance << ' ' << rows[it->cell].solver << ' ' << rows[it->cell].status << '\n';
        it = running.erase(it);
        reaped = true;
        continue;
      }
      if (!it->killed && std::chrono::steady_clock::now() > it->deadline) {
        ::kill(it->pid, SIGKILL);
        it->killed = true;
      }
      ++it;
    }
    if (!reaped && !running.empty()) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  return rows;
}

// ---------------------------------------------------------------- analysis

/// OPT per instance: the first optimal exact row.
inline std::map<std::string, double> optimum_column(const std::vector<ResultRow>& rows) {
  std::map<std::string, double> opt;
  for (const ResultRow& r : rows) {
    if (is_exact_solver(r.solver) && r.optimal() && r.has_objective()) opt.try_emplace(r.instance, r.objective);
  }
  return opt;
}

/// Messages for every instance where two optimal exact rows disagree.
inline std::vector<std::string> consistency_violations(const std::vector<ResultRow>& rows) {
  std::vector<std::string> out;
  std::map<std::string, const ResultRow*> first;
  for (const ResultRow& r : rows) {
    if (!is_exact_solver(r.solver) || !r.optimal() || !r.has_objective()) continue;
    const auto [it, inserted] = first.try_emplace(r.instance, &r);
    if (inserted) continue;
    const ResultRow& a = *it->second;
    if (!same_objective(a.objective, r.objective, kConsistencyTolerance)) {
      out.push_back(r.instance + ": " + a.solver + " = " + io_detail::format_real(a.objective) + " but " + r.solver +
                    " = " + io_detail::format_real(r.objective));
    }
  }
  return out;
}

/// Fills the gap column from the OPT column (only where OPT > 0).
inline void fill_gaps(std::vector<ResultRow>& rows) {
  const std::map<std::string, double> opt = optimum_column(rows);
  for (ResultRow& r : rows) {
    r.gap = kUnknown;
    const auto it = opt.find(r.instance);
    if (it == opt.end() || !(it->second > 0) || !r.has_objective()) continue;
    if (is_exact_solver(r.solver) && !r.optimal()) continue;
    r.gap = gap_percent(it->second, r.objective);
  }
}

struct SolverSummary {
  std::string solver;
  int instances = 0;
  double avg_gap = 0.0;
  double std_gap = 0.0;
  int n_opt = 0;
  int n_1pct = 0;
  int n_10pct = 0;
  int excluded = 0;  // rows without a positive OPT
};

/// Per-solver statistics over heuristic rows. Gaps are recomputed from the
/// OPT column rather than read from the CSV.
inline std::vector<SolverSummary> summarize(const std::vector<ResultRow>& rows) {
  const std::map<std::string, double> opt = optimum_column(rows);
  std::vector<SolverSummary> out;
  std::map<std::string, std::vector<double>> gaps;
  const auto slot = [&](const std::string& solver) -> SolverSummary& {
    for (SolverSummary& s : out) {
      if (s.solver == solver) return s;
    }
    out.push_back(SolverSummary{solver});
    return out.back();
  };
  for (const ResultRow& r : rows) {
    if (is_exact_solver(r.solver)) continue;
    SolverSummary& s = slot(r.solver);
    const auto it = opt.find(r.instance);
    if (it == opt.end() || !(it->second > 0) || !r.has_objective()) {
      ++s.excluded;
      continue;
    }
    const double g = gap_percent(it->second, r.objective);
    gaps[r.solver].push_back(g);
    ++s.instances;
    if (std::abs(r.objective - it->second) <= kOptTolerance) ++s.n_opt;
    if (g <= 1.0) ++s.n_1pct;
    if (g <= 10.0) ++s.n_10pct;
  }
  for (SolverSummary& s : out) {
    const auto [mean, sd] = mean_std(gaps[s.solver]);
    s.avg_gap = s.instances ? mean : 0.0;
    s.std_gap = sd;
  }
  return out;
}

struct GapPoint {
  int rank = 0;  // instance position after sorting
  std::string instance;
  int n = 0;
  int m = 0;
  std::string solver;
  double gap = kUnknown;
};

/// Gap series ordered by city count, then item count, then name.
inline std::vector<GapPoint> plot_gaps(const std::vector<ResultRow>& rows) {
  const std::map<std::string, double> opt = optimum_column(rows);
  std::vector<GapPoint> pts;
  for (const ResultRow& r : rows) {
    if (is_exact_solver(r.solver)) continue;
    GapPoint p{0, r.instance, r.n, r.m, r.solver, kUnknown};
    const auto it = opt.find(r.instance);
    if (it != opt.end() && it->second > 0 && r.has_objective()) p.gap = gap_percent(it->second, r.objective);
    pts.push_back(std::move(p));
  }
  std::stable_sort(pts.begin(), pts.end(), [](const GapPoint& a, const GapPoint& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.m != b.m) return a.m < b.m;
    return a.instance < b.instance;
  });
  int rank = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i].instance != pts[i - 1].instance) ++rank;
    pts[i].rank = rank;
  }
  return pts;
}

inline void write_plot_data(std::ostream& out, const std::vector<GapPoint>& pts) {
  out << "# rank instance n m solver gap_percent\n";
  for (const GapPoint& p : pts) {
    out << p.rank << ' ' << p.instance << ' ' << p.n << ' ' << p.m << ' ' << p.solver << ' '
        << (std::isnan(p.gap) ? std::string("nan") : io_detail::format_real(p.gap)) << '\n';
  }
}

// ---------------------------------------------------------------- tables

inline std::string fixed(double v, int digits = 3) {
  if (std::isnan(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

namespace detail {

inline std::vector<std::string> instance_order(const std::vector<ResultRow>& rows) {
  std::vector<std::string> names;
  for (const ResultRow& r : rows) {
    if (std::find(names.begin(), names.end(), r.instance) == names.end()) names.push_back(r.instance);
  }
  return names;
}

inline std::vector<std::string> solver_order(const std::vector<ResultRow>& rows, bool exact) {
  std::vector<std::string> out;
  for (std::string_view s : kSolverNames) {
    if (is_exact_solver(s) != exact) continue;
    for (const ResultRow& r : rows) {
      if (r.solver == s) {
        out.emplace_back(s);
        break;
      }
    }
  }
  return out;
}

inline const ResultRow* find(const std::vector<ResultRow>& rows, const std::string& inst, const std::string& solver) {
  for (const ResultRow& r : rows) {
    if (r.instance == inst && r.solver == solver) return &r;
  }
  return nullptr;
}

}  // namespace detail

/// Runtimes of the exact solvers; '-' where a run did not prove optimality.
inline void write_runtime_table(std::ostream& out, const std::vector<ResultRow>& rows) {
  const auto solvers = detail::solver_order(rows, true);
  out << "| Instance | n | m |";
  for (const auto& s : solvers) out << ' ' << s << " |";
  out << "\n|---|---|---|";
  for (std::size_t i = 0; i < solvers.size(); ++i) out << "---|";
  out << '\n';
  for (const std::string& name : detail::instance_order(rows)) {
    const ResultRow* any = &*std::find_if(rows.begin(), rows.end(), [&](const ResultRow& r) { return r.instance == name; });
    out << "| " << name << " | " << any->n << " | " << any->m << " |";
    for (const auto& s : solvers) {
      const ResultRow* r = detail::find(rows, name, s);
      out << ' ' << (r && r->optimal() ? fixed(r->runtime_s) : "-") << " |";
    }
    out << '\n';
  }
}

/// OPT column plus objective, gap and runtime of every heuristic.
inline void write_gap_table(std::ostream& out, const std::vector<ResultRow>& rows) {
  const std::map<std::string, double> opt = optimum_column(rows);
  const auto heuristics = detail::solver_order(rows, false);
  out << "| Instance | OPT |";
  for (const auto& s : heuristics) out << ' ' << s << " Obj | " << s << " std | " << s << " Gap | " << s << " RT |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < heuristics.size(); ++i) out << "---|---|---|---|";
  out << '\n';
  for (const std::string& name : detail::instance_order(rows)) {
    const auto it = opt.find(name);
    out << "| " << name << " | " << (it == opt.end() ? "-" : fixed(it->second)) << " |";
    for (const auto& s : heuristics) {
      const ResultRow* r = detail::find(rows, name, s);
      if (!r || !r->has_objective()) {
        out << " - | - | - | - |";
        continue;
      }
      double gap = kUnknown;
      if (it != opt.end() && it->second > 0) gap = gap_percent(it->second, r->objective);
      out << ' ' << fixed(r->objective) << " | " << fixed(r->std) << " | " << fixed(gap, 1) << " | "
          << fixed(r->runtime_s) << " |";
    }
    out << '\n';
  }
}

inline void write_summary_table(std::ostream& out, const std::vector<SolverSummary>& summary) {
  out << "| gap |";
  for (const SolverSummary& s : summary) out << ' ' << s.solver << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < summary.size(); ++i) out << "---|";
  out << "\n| avg |";
  for (const SolverSummary& s : summary) out << ' ' << fixed(s.avg_gap, 1) << "% |";
  out << "\n| stdev |";
  for (const SolverSummary& s : summary) out << ' ' << fixed(s.std_gap, 1) << "% |";
  out << "\n| #opt |";
  for (const SolverSummary& s : summary) out << ' ' << s.n_opt << " |";
  out << "\n| #1% |";
  for (const SolverSummary& s : summary) out << ' ' << s.n_1pct << " |";
  out << "\n| #10% |";
  for (const SolverSummary& s : summary) out << ' ' << s.n_10pct << " |";
  out << "\n| excluded |";
  for (const SolverSummary& s : summary) out << ' ' << s.excluded << " |";
  out << '\n';
}

// ---------------------------------------------------------------- matrix

enum ExitCode : int { kExitOk = 0, kExitPartial = 2, kExitInconsistent = 3 };

struct MatrixResult {
  std::vector<ResultRow> rows;
  std::vector<std::string> violations;
  int failures = 0;  // rows with status timeout, memory or error
  int exit_code() const {
    if (!violations.empty()) return kExitInconsistent;
    return failures > 0 ? kExitPartial : kExitOk;
  }
};

inline std::vector<Cell> plan_cells(const RunConfig& cfg) {
  std::vector<Cell> cells;
  for (const std::string& path : expand_instances(cfg.instances)) {
    std::optional<Instance> inst;
    std::string name = std::filesystem::path(path).stem().string();
    try {
      inst = read_instance_file(path);
      name = inst->name();
    } catch (const std::exception&) {
      inst.reset();
    }
    for (const std::string& solver : cfg.solvers) {
      Cell c;
      c.path = path;
      c.solver = solver;
      c.skeleton.instance = name;
      c.skeleton.solver = solver;
      c.skeleton.status = "error";
      if (inst) {
        c.skeleton.n = inst->num_cities();
        c.skeleton.m = inst->num_items();
      }
      c.instance = inst;
      cells.push_back(std::move(c));
    }
  }
  return cells;
}

/// Post-processing shared by `bench` and `summarize`: gaps, gate, tables.
inline MatrixResult finish(std::vector<ResultRow> rows) {
  MatrixResult res;
  fill_gaps(rows);
  res.violations = consistency_violations(rows);
  for (const ResultRow& r : rows) {
    if (r.status == "timeout" || r.status == "memory" || r.status == "error") ++res.failures;
  }
  res.rows = std::move(rows);
  return res;
}

inline void write_outputs(const MatrixResult& res, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto open = [&](const char* name) {
    std::ofstream f(dir / name);
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("results.csv");
    write_csv(f, res.rows);
  }
  if (res.rows.empty()) return;
  {
    auto f = open("table_runtime.md");
    write_runtime_table(f, res.rows);
  }
  {
    auto f = open("table_gaps.md");
    write_gap_table(f, res.rows);
  }
  {
    auto f = open("table_summary.md");
    write_summary_table(f, summarize(res.rows));
  }
  {
    auto f = open("gaps.dat");
    write_plot_data(f, plot_gaps(res.rows));
  }
}

inline MatrixResult run_matrix(const RunConfig& cfg, std::ostream* log = nullptr) {
  cfg.validate();
  if (cfg.solvers.empty() && log) *log << "[bench] warning: no solvers configured\n";
  std::vector<Cell> cells = plan_cells(cfg);
  MatrixResult res = finish(run_cells(cells, cfg, log));
  write_outputs(res, cfg.output_dir);
  if (log) {
    for (const std::string& v : res.violations) *log << "[bench] CONSISTENCY VIOLATION " << v << '\n';
  }
  return res;
}

}  // namespace ttp::bench
