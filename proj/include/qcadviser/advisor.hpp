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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcadviser/catalog.hpp"
#include "qcadviser/estimator.hpp"

namespace qcadviser {

struct RegistrySnapshot;

enum class SolverKind { Qpu, Hybrid };

std::string to_string(SolverKind kind);

struct Solver {
  std::string id;
  std::string name;  // display name, matched against benchmark headers
  SolverKind kind = SolverKind::Qpu;
  std::uint64_t max_qubits = 0;
  std::uint64_t max_variables = 0;
  std::string topology;  // QPU only
  std::optional<std::string> price_ref;
  std::string description;

  bool operator==(const Solver&) const = default;
};

struct BenchmarkRow {
  std::uint64_t main_param = 0;  // problem size the row was measured at
  std::vector<int> scores;       // success percentage per header column

  bool operator==(const BenchmarkRow&) const = default;
};

struct BenchmarkSet {
  std::string problem_id;
  std::vector<std::string> solver_names;
  std::vector<BenchmarkRow> rows;  // ascending by main_param

  bool operator==(const BenchmarkSet&) const = default;
};

struct BenchmarkMatch {
  BenchmarkRow row;
  std::size_t index = 0;

  bool operator==(const BenchmarkMatch&) const = default;
};

struct RankedSolver {
  Solver solver;
  std::optional<int> solution_quality;
  std::size_t rank = 0;  // 1-based once sorted

  bool operator==(const RankedSolver&) const = default;
};

enum class SortMode { Benchmarked, Default };

std::string to_string(SortMode mode);

struct Recommendation {
  std::size_t num_var = 0;
  std::map<std::string, ResourceEstimate> estimates;  // keyed by topology name
  std::vector<RankedSolver> ranked;
  SortMode sort_mode = SortMode::Default;
  std::optional<BenchmarkMatch> benchmark;

  bool operator==(const Recommendation&) const = default;
};

/// Keeps QPU solvers whose topology estimate fits in maxQubits and hybrid
/// solvers whose maxVariables covers num_var. Input order is preserved.
/// Throws UnknownTopology for a QPU whose topology has no estimate.
std::vector<Solver> filter_solvers(std::span<const Solver> solvers, std::size_t num_var,
                                   const std::map<std::string, std::size_t>& num_qubits_by_topology);

/// Row whose mainParam is closest to n, first occurrence on ties. Returned
/// only when |mainParam - n| <= 10% of n (inclusive).
std::optional<BenchmarkMatch> nearest_benchmark(const BenchmarkSet& set, std::uint64_t n);

/// Candidates named in `solver_names` get the score at the same column;
/// the others stay unscored. Output is in candidate order, unranked.
std::vector<RankedSolver> assign_quality(const BenchmarkRow& row, std::span<const std::string> solver_names,
                                         std::span<const Solver> candidates);

/// Descending by (solutionQuality, maxVariables, maxQubits); unscored drafts
/// follow in default order. Stable. Assigns ranks from 1.
std::vector<RankedSolver> sort_benchmarked(std::vector<RankedSolver> drafts);

/// Descending by (maxVariables, maxQubits). Stable. Assigns ranks from 1.
std::vector<RankedSolver> sort_default(std::span<const Solver> candidates);

/// Estimate, filter and rank. Throws NoFormula, UnknownTopology, or
/// NoCandidates when nothing survives the filter.
Recommendation recommend(const ProblemInstance& instance, const RegistrySnapshot& snapshot,
                         const Catalog& catalog);

}  // namespace qcadviser
