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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcadviser/advisor.hpp"
#include "qcadviser/errors.hpp"
#include "qcadviser/qubo.hpp"
#include "qcadviser/registry.hpp"

namespace qcadviser {

/// Invalid evaluation setup (bad node count, unknown selector, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kEvaluateMinNodes = 3;
inline constexpr std::size_t kEvaluateMaxNodes = 8;

struct EvaluationOptions {
  std::string problem_id = "tsp";
  std::size_t nodes = 0;
  std::uint64_t seed = 0;
  /// "top", "second", "last", a 1-based rank, or a solver id.
  std::vector<std::string> selectors{"top", "second"};
  /// Overrides the seeded random matrix.
  std::optional<DistanceMatrix> distances;
  /// Sweeps granted to a solver of quality 100; unscored solvers also get it.
  std::size_t full_sweeps = 200;
  std::size_t restarts = 4;
};

struct SolverRun {
  RankedSolver solver;
  std::size_t sweeps = 0;
  SampleResult sample;
  std::optional<double> deviation_pct;  // absent when the sample is not a tour
};

struct EvaluationReport {
  ProblemInstance instance;
  Tour optimum;
  SortMode sort_mode = SortMode::Default;
  std::optional<BenchmarkMatch> benchmark;
  std::vector<SolverRun> runs;  // ascending rank
  /// Whether deviation is non-decreasing down the ranking; absent with fewer
  /// than two runs.
  std::optional<bool> verdict;
};

/// Symmetric matrix with integer lengths in 1..99 drawn from `seed`.
DistanceMatrix random_distances(std::size_t n, std::uint64_t seed);

/// Compares the classical optimum with the annealing stand-in run once per
/// selected ranked solver, with a sweep budget proportional to its
/// benchmark score. Throws ConfigError, NoCandidates, NoFormula.
EvaluationReport run_evaluation(const Catalog& catalog, const RegistrySnapshot& snapshot,
                                const EvaluationOptions& options);

std::string format_report(const EvaluationReport& report);

}  // namespace qcadviser
