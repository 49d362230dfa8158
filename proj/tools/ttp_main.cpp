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

// ttp: generate instances, solve them, run benchmark matrices and rebuild
// the summary tables from a result CSV.
//
// Exit codes: 0 success, 1 usage or input error, 2 partial failure
// (a solve timed out or a matrix cell failed), 3 consistency violation.

#include <sys/resource.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttp/ttp.hpp"

namespace {

using namespace ttp;

int run_gen(const std::vector<int>& ns, const std::vector<int>& ks, const std::vector<std::string>& types,
            const std::vector<int>& qs, double renting_rate, std::uint64_t seed, const std::string& out_dir) {
  int written = 0;
  for (const std::string& t : types) {
    const KnapsackType type = parse_knapsack_type(t);
    for (int n : ns) {
      for (int k : ks) {
        for (int q : qs) {
          GenSpec spec;
          spec.n = n;
          spec.items_per_city = k;
          spec.type = type;
          spec.capacity_category = q;
          spec.renting_rate = renting_rate;
          spec.seed = seed;
          std::cout << write_generated_instance(spec, out_dir).string() << '\n';
          ++written;
        }
      }
    }
  }
  std::cerr << "generated " << written << " instance(s)\n";
  return 0;
}

struct SolveArgs {
  std::string file;
  std::string solver = "dp";
  double time_limit = 0.0;
  std::string mem_cap;
  std::uint64_t seed = 0;
  int restarts = 1;
  std::string bound = "combined";
  bool progress = false;
};

int run_solve(const SolveArgs& a) {
  const Instance inst = read_instance_file(a.file);
  std::uint64_t cap = 0;
  if (!a.mem_cap.empty()) {
    cap = bench::parse_size(a.mem_cap);
    rlimit lim{cap, cap};
    setrlimit(RLIMIT_AS, &lim);
  }
  ProgressSink sink;
  if (a.progress) sink = [](const Progress& p) { std::cerr << format_progress(p) << '\n'; };

  SolveReport report;
  if (a.solver == "dp") {
    DpOptions o;
    o.time_limit = a.time_limit;
    o.memory_cap = cap;
    o.progress = sink;
    report = solve_dp(inst, o);
  } else if (a.solver == "bnb") {
    BnbConfig c;
    c.bound = bench::parse_bound_variant(a.bound);
    c.time_limit = a.time_limit;
    c.progress = sink;
    report = solve_bnb(inst, c);
  } else if (a.solver == "cp") {
    const CpModel model = build_model(inst);
    CpConfig c;
    c.time_limit = a.time_limit;
    c.progress = sink;
    report = solve_cp(model, c);
  } else if (a.solver == "brute") {
    report = solve_brute(inst, a.time_limit);
  } else if (a.solver == "dp-s1") {
    Deadline clock;
    report.solution = dp_s1(inst, a.seed);
    report.status = Status::kFeasible;
    report.seconds = clock.elapsed();
  } else if (a.solver == "dp-s5") {
    Deadline clock;
    RestartBudget budget;
    if (a.time_limit > 0) {
      budget.seconds = a.time_limit;
    } else {
      budget.restarts = a.restarts;
    }
    const Dps5Result r = dp_s5(inst, budget, a.seed);
    report.solution = r.best;
    report.status = Status::kFeasible;
    report.seconds = clock.elapsed();
  } else {
    std::cerr << "unknown solver '" << a.solver << "'\n";
    return 1;
  }

  std::cout << "instance  " << inst.name() << '\n';
  std::cout << "solver    " << a.solver << '\n';
  std::cout << "status    " << to_string(report.status);
  if (!report.abort_reason.empty()) std::cout << " (" << report.abort_reason << ')';
  std::cout << '\n';
  if (report.solution) {
    std::printf("objective %.6f\n", report.solution->objective);
    std::cout << "tour      " << format_tour(report.solution->tour) << '\n';
    std::cout << "items     " << format_plan(report.solution->plan) << '\n';
  }
  std::printf("runtime_s %.3f\n", report.seconds);
  std::cout << "nodes     " << report.nodes << "\nstates    " << report.states << '\n';
  return report.status == Status::kTimeout ? 2 : 0;
}

int run_bench(const std::string& config_path) {
  const bench::RunConfig cfg = bench::read_run_config(config_path);
  const bench::MatrixResult res = bench::run_matrix(cfg, &std::cerr);
  std::cerr << "wrote " << res.rows.size() << " row(s) to " << cfg.output_dir << '\n';
  return res.exit_code();
}

int run_summarize(const std::string& csv) {
  const bench::MatrixResult res = bench::finish(bench::read_csv_file(csv));
  bench::write_summary_table(std::cout, bench::summarize(res.rows));
  for (const std::string& v : res.violations) std::cerr << "consistency violation: " << v << '\n';
  return res.violations.empty() ? 0 : bench::kExitInconsistent;
}

int run_plot(const std::string& csv, const std::string& out) {
  const std::vector<bench::GapPoint> pts = bench::plot_gaps(bench::read_csv_file(csv));
  if (out.empty()) {
    bench::write_plot_data(std::cout, pts);
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write '" + out + "'");
    bench::write_plot_data(f, pts);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and heuristic solvers for the travelling thief problem"};
  app.require_subcommand(1);

  std::vector<int> ns{5};
  std::vector<int> ks{1};
  std::vector<std::string> types{"uncorr"};
  std::vector<int> qs{1};
  double renting_rate = 0.0;
  std::uint64_t gen_seed = 0;
  std::string out_dir = ".";
  auto* gen = app.add_subcommand("gen", "Generate eil51 sub-instances");
  gen->add_option("-n,--cities", ns, "City counts")->delimiter(',');
  gen->add_option("-k,--items-per-city", ks, "Items per city")->delimiter(',');
  gen->add_option("-t,--type", types, "uncorr, uncorr-similar-weights, multiple-strongly-corr")->delimiter(',');
  gen->add_option("-Q,--capacity-category", qs, "Capacity categories")->delimiter(',');
  gen->add_option("-R,--renting-rate", renting_rate, "Renting rate (required)")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("-o,--out", out_dir, "Output directory");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("file", sa.file, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("-s,--solver", sa.solver, "dp|bnb|cp|dp-s1|dp-s5|brute");
  solve->add_option("--time-limit", sa.time_limit, "Seconds, 0 = none");
  solve->add_option("--mem-cap", sa.mem_cap, "Address-space cap, e.g. 4G");
  solve->add_option("--seed", sa.seed, "Seed for the heuristics");
  solve->add_option("--restarts", sa.restarts, "dp-s5 restarts when no time limit is given");
  solve->add_option("--bound", sa.bound, "bnb bound: base|farthest|global|combined");
  solve->add_flag("--progress", sa.progress, "Progress lines on stderr");

  std::string config;
  auto* bench_cmd = app.add_subcommand("bench", "Run a solver x instance matrix");
  bench_cmd->add_option("-c,--config", config, "Config file")->required()->check(CLI::ExistingFile);

  std::string csv;
  auto* summarize = app.add_subcommand("summarize", "Summary table from a result CSV");
  summarize->add_option("csv", csv, "Result CSV")->required()->check(CLI::ExistingFile);

  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "Gap plot data from a result CSV");
  plot->add_option("csv", csv, "Result CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("-o,--out", plot_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return run_gen(ns, ks, types, qs, renting_rate, gen_seed, out_dir);
    if (*solve) return run_solve(sa);
    if (*bench_cmd) return run_bench(config);
    if (*summarize) return run_summarize(csv);
    if (*plot) return run_plot(csv, plot_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
