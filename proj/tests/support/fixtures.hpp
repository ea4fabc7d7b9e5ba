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

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "qcadviser/advisor.hpp"
#include "qcadviser/registry.hpp"

namespace qcadviser::testing {

inline Solver qpu(std::string id, std::uint64_t max_qubits, std::string topology = "chimera") {
  Solver s;
  s.id = id;
  s.name = std::move(id);
  s.kind = SolverKind::Qpu;
  s.max_qubits = max_qubits;
  s.topology = std::move(topology);
  return s;
}

inline Solver hybrid(std::string id, std::uint64_t max_variables) {
  Solver s;
  s.id = id;
  s.name = std::move(id);
  s.kind = SolverKind::Hybrid;
  s.max_variables = max_variables;
  return s;
}

inline RegistrySnapshot snapshot_of(std::vector<Solver> solvers, std::vector<BenchmarkSet> benchmarks = {}) {
  RegistrySnapshot snap;
  for (auto& t : default_topologies()) snap.topologies.emplace(t.name, t);
  snap.solvers = std::move(solvers);
  for (auto& b : benchmarks) snap.benchmarks.emplace(b.problem_id, std::move(b));
  return snap;
}

/// A random registry for ranking-law checks. Capacities come from small
/// pools so that ties on (v, q) and on quality are common.
struct RandomRegistry {
  RegistrySnapshot snapshot;
  std::size_t nodes = 0;
};

inline RandomRegistry random_registry(std::mt19937_64& rng) {
  auto pick = [&](auto const& pool) { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  const std::vector<std::uint64_t> qubit_pool{8, 64, 500, 2048, 5000, 5760};
  const std::vector<std::uint64_t> variable_pool{10, 100, 5000, 1000000};
  const std::vector<std::string> topology_pool{"chimera", "pegasus", "zephyr"};
  const std::vector<int> score_pool{0, 40, 60, 80, 80, 100};

  RandomRegistry out;
  out.nodes = std::uniform_int_distribution<std::size_t>(2, 30)(rng);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
  std::vector<Solver> solvers;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string id = "s" + std::to_string(i);
    Solver s = coin(0.55) ? qpu(id, pick(qubit_pool), pick(topology_pool)) : hybrid(id, pick(variable_pool));
    if (coin(0.3)) s.max_variables = pick(variable_pool);  // QPUs may carry a variable cap too
    solvers.push_back(std::move(s));
  }

  std::vector<BenchmarkSet> sets;
  if (coin(0.75)) {
    BenchmarkSet set;
    set.problem_id = "tsp";
    for (const auto& s : solvers) {
      if (coin(0.7)) set.solver_names.push_back(s.name);
    }
    if (coin(0.3)) set.solver_names.push_back("retired-solver");
    std::shuffle(set.solver_names.begin(), set.solver_names.end(), rng);
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    std::vector<std::uint64_t> params;
    for (std::size_t r = 0; r < rows; ++r) {
      // Near n often enough to exercise the 10% gate and its boundary.
      const auto n = static_cast<std::int64_t>(out.nodes);
      const std::int64_t w = coin(0.5) ? std::uniform_int_distribution<std::int64_t>(1, 40)(rng)
                                       : n + std::uniform_int_distribution<std::int64_t>(-n / 10 - 1, n / 10 + 1)(rng);
      params.push_back(static_cast<std::uint64_t>(std::max<std::int64_t>(w, 1)));
    }
    std::sort(params.begin(), params.end());
    for (auto p : params) {
      BenchmarkRow row{p, {}};
      for (std::size_t k = 0; k < set.solver_names.size(); ++k) row.scores.push_back(pick(score_pool));
      set.rows.push_back(std::move(row));
    }
    sets.push_back(std::move(set));
  }
  out.snapshot = snapshot_of(std::move(solvers), std::move(sets));
  return out;
}

}  // namespace qcadviser::testing
