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

#include "qcadviser/advisor.hpp"

#include <algorithm>
#include <tuple>

#include "qcadviser/errors.hpp"
#include "qcadviser/registry.hpp"

namespace qcadviser {

std::string to_string(SolverKind kind) { return kind == SolverKind::Qpu ? "qpu" : "hybrid"; }

std::string to_string(SortMode mode) { return mode == SortMode::Benchmarked ? "benchmarked" : "default"; }

std::vector<Solver> filter_solvers(std::span<const Solver> solvers, std::size_t num_var,
                                   const std::map<std::string, std::size_t>& num_qubits_by_topology) {
  std::vector<Solver> kept;
  for (const auto& solver : solvers) {
    if (solver.kind == SolverKind::Qpu) {
      auto it = num_qubits_by_topology.find(solver.topology);
      if (it == num_qubits_by_topology.end()) throw UnknownTopology(solver.id, solver.topology);
      if (it->second <= solver.max_qubits) kept.push_back(solver);
    } else if (num_var <= solver.max_variables) {
      kept.push_back(solver);
    }
  }
  return kept;
}

std::optional<BenchmarkMatch> nearest_benchmark(const BenchmarkSet& set, std::uint64_t n) {
  auto distance = [n](std::uint64_t w) { return w > n ? w - n : n - w; };
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < set.rows.size(); ++j) {
    if (!best || distance(set.rows[j].main_param) < distance(set.rows[*best].main_param)) best = j;
  }
  if (!best) return std::nullopt;
  // |w - n| <= n / 10, kept in integers so the boundary is exact.
  if (10 * distance(set.rows[*best].main_param) > n) return std::nullopt;
  return BenchmarkMatch{set.rows[*best], *best};
}

std::vector<RankedSolver> assign_quality(const BenchmarkRow& row, std::span<const std::string> solver_names,
                                         std::span<const Solver> candidates) {
  std::vector<RankedSolver> drafts;
  drafts.reserve(candidates.size());
  for (const auto& solver : candidates) {
    RankedSolver draft{solver, std::nullopt, 0};
    auto it = std::find(solver_names.begin(), solver_names.end(), solver.name);
    if (it != solver_names.end()) {
      const auto column = static_cast<std::size_t>(it - solver_names.begin());
      if (column < row.scores.size()) draft.solution_quality = row.scores[column];
    }
    drafts.push_back(std::move(draft));
  }
  return drafts;
}

namespace {

auto capacity_key(const Solver& s) { return std::make_tuple(s.max_variables, s.max_qubits); }

void stable_sort_by_capacity(std::vector<RankedSolver>& list) {
  std::stable_sort(list.begin(), list.end(), [](const RankedSolver& a, const RankedSolver& b) {
    return capacity_key(a.solver) > capacity_key(b.solver);
  });
}

void assign_ranks(std::vector<RankedSolver>& list) {
  for (std::size_t i = 0; i < list.size(); ++i) list[i].rank = i + 1;
}

}  // namespace

std::vector<RankedSolver> sort_benchmarked(std::vector<RankedSolver> drafts) {
  auto unscored_begin = std::stable_partition(drafts.begin(), drafts.end(),
                                              [](const RankedSolver& d) { return d.solution_quality.has_value(); });
  std::stable_sort(drafts.begin(), unscored_begin, [](const RankedSolver& a, const RankedSolver& b) {
    return std::make_tuple(*a.solution_quality, a.solver.max_variables, a.solver.max_qubits) >
           std::make_tuple(*b.solution_quality, b.solver.max_variables, b.solver.max_qubits);
  });
  std::vector<RankedSolver> unscored(std::make_move_iterator(unscored_begin),
                                     std::make_move_iterator(drafts.end()));
  drafts.erase(unscored_begin, drafts.end());
  stable_sort_by_capacity(unscored);
  drafts.insert(drafts.end(), std::make_move_iterator(unscored.begin()), std::make_move_iterator(unscored.end()));
  assign_ranks(drafts);
  return drafts;
}

std::vector<RankedSolver> sort_default(std::span<const Solver> candidates) {
  std::vector<RankedSolver> list;
  list.reserve(candidates.size());
  for (const auto& solver : candidates) list.push_back(RankedSolver{solver, std::nullopt, 0});
  stable_sort_by_capacity(list);
  assign_ranks(list);
  return list;
}

Recommendation recommend(const ProblemInstance& instance, const RegistrySnapshot& snapshot,
                         const Catalog& catalog) {
  Recommendation result;
  result.num_var = catalog.variable_count(instance);

  std::map<std::string, std::size_t> qubits_by_topology;
  for (const auto& [name, topology] : snapshot.topologies) {
    const std::size_t qubits = estimate_qubits(result.num_var, topology);
    result.estimates.emplace(name, ResourceEstimate{result.num_var, qubits});
    qubits_by_topology.emplace(name, qubits);
  }

  const auto candidates = filter_solvers(snapshot.solvers, result.num_var, qubits_by_topology);
  if (candidates.empty()) throw NoCandidates();

  if (auto set = snapshot.benchmarks.find(instance.problem_id); set != snapshot.benchmarks.end()) {
    if (auto match = nearest_benchmark(set->second, instance.n)) {
      result.sort_mode = SortMode::Benchmarked;
      result.ranked = sort_benchmarked(assign_quality(match->row, set->second.solver_names, candidates));
      result.benchmark = std::move(match);
      return result;
    }
  }
  result.sort_mode = SortMode::Default;
  result.ranked = sort_default(candidates);
  return result;
}

}  // namespace qcadviser
