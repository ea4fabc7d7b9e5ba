// Copyright 2026 The qcadviser Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qcadviser/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "qcadviser/errors.hpp"

namespace qcadviser {

DistanceMatrix random_distances(std::size_t n, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                    0x7d15u};
  std::mt19937_64 rng(seq);
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double length = static_cast<double>(rng() % 99 + 1);
      d(i, j) = length;
      d(j, i) = length;
    }
  }
  return d;
}

namespace {

std::size_t resolve_selector(const std::string& selector, const std::vector<RankedSolver>& ranked) {
  const std::size_t count = ranked.size();
  auto require_rank = [&](std::size_t rank) {
    if (rank < 1 || rank > count) {
      throw ConfigError("selector '" + selector + "' asks for rank " + std::to_string(rank) + " but only " +
                        std::to_string(count) + " solvers are ranked");
    }
    return rank - 1;
  };
  if (selector == "top") return require_rank(1);
  if (selector == "second") return require_rank(2);
  if (selector == "last") return require_rank(count);
  if (!selector.empty() && std::all_of(selector.begin(), selector.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return require_rank(std::stoul(selector));
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (ranked[i].solver.id == selector) return i;
  }
  throw ConfigError("unknown solver selector '" + selector + "'");
}

std::size_t sweep_budget(const RankedSolver& solver, std::size_t full_sweeps) {
  if (!solver.solution_quality) return full_sweeps;
  const auto scaled = static_cast<std::size_t>(
      std::llround(static_cast<double>(full_sweeps) * static_cast<double>(*solver.solution_quality) / 100.0));
  return std::max<std::size_t>(scaled, 1);
}

}  // namespace

EvaluationReport run_evaluation(const Catalog& catalog, const RegistrySnapshot& snapshot,
                                const EvaluationOptions& options) {
  if (options.problem_id != "tsp") throw ConfigError("evaluation supports only the tsp problem");
  if (options.nodes < kEvaluateMinNodes || options.nodes > kEvaluateMaxNodes) {
    throw ConfigError(fmt::format("--nodes must be within {}..{}, got {}", kEvaluateMinNodes, kEvaluateMaxNodes,
                                  options.nodes));
  }
  if (options.selectors.empty()) throw ConfigError("select at least one solver");
  if (options.distances && options.distances->order() != options.nodes) {
    throw ConfigError("distance matrix order does not match --nodes");
  }

  EvaluationReport report;
  report.instance = ProblemInstance::tsp(options.distances ? *options.distances
                                                           : random_distances(options.nodes, options.seed));
  try {
    report.instance.validate();
  } catch (const InvalidInstance& e) {
    throw ConfigError(e.what());
  }
  report.optimum = brute_force_tsp(report.instance);

  const Recommendation rec = recommend(report.instance, snapshot, catalog);
  report.sort_mode = rec.sort_mode;
  report.benchmark = rec.benchmark;

  std::set<std::size_t> picked;
  for (const auto& selector : options.selectors) picked.insert(resolve_selector(selector, rec.ranked));

  const Qubo qubo = build_tsp_qubo(report.instance);
  for (const std::size_t index : picked) {
    SolverRun run;
    run.solver = rec.ranked[index];
    run.sweeps = sweep_budget(run.solver, options.full_sweeps);
    run.sample = sample_tour(report.instance, qubo, AnnealOptions{options.seed, run.sweeps, options.restarts});
    if (run.sample.decoded) run.deviation_pct = deviation_pct(*run.sample.decoded, report.optimum);
    report.runs.push_back(std::move(run));
  }

  if (report.runs.size() >= 2) {
    constexpr double kInvalid = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (std::size_t i = 1; i < report.runs.size(); ++i) {
      const double above = report.runs[i - 1].deviation_pct.value_or(kInvalid);
      const double below = report.runs[i].deviation_pct.value_or(kInvalid);
      if (above > below) monotone = false;
    }
    report.verdict = monotone;
  }
  return report;
}

std::string format_report(const EvaluationReport& report) {
  std::string out;
  const auto& instance = report.instance;
  const DistanceMatrix d = instance.effective_distances();
  out += fmt::format("problem {}  nodes {}\n", instance.problem_id, instance.n);
  out += "distances\n";
  for (std::size_t i = 0; i < d.order(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < d.order(); ++j) out += fmt::format(" {:>4}", d(i, j));
    out += "\n";
  }
  out += fmt::format("classical optimum  cost {}  tour [{}]\n", report.optimum.cost,
                     fmt::join(report.optimum.order, " "));
  if (report.benchmark) {
    out += fmt::format("sort mode benchmarked  (benchmark row {}, mainParam {})\n", report.benchmark->index,
                       report.benchmark->row.main_param);
  } else {
    out += "sort mode default\n";
  }
  out += fmt::format("{:<5} {:<32} {:>7} {:>7} {:>10} {:>10}\n", "rank", "solver", "quality", "sweeps", "cost",
                     "deviation");
  for (const auto& run : report.runs) {
    const std::string quality = run.solver.solution_quality ? std::to_string(*run.solver.solution_quality) : "-";
    const std::string cost = run.sample.decoded ? fmt::format("{}", run.sample.decoded->cost) : "invalid";
    const std::string deviation = run.deviation_pct ? fmt::format("{:.3f}%", *run.deviation_pct) : "-";
    out += fmt::format("{:<5} {:<32} {:>7} {:>7} {:>10} {:>10}\n", run.solver.rank, run.solver.solver.id, quality,
                       run.sweeps, cost, deviation);
  }
  if (report.verdict) {
    out += fmt::format("verdict {}\n", *report.verdict ? "PASS" : "FAIL");
  } else {
    out += "verdict none (fewer than two solvers)\n";
  }
  return out;
}

}  // namespace qcadviser
