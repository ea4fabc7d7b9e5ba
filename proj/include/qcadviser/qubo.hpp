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
#include <utility>
#include <vector>

#include "qcadviser/catalog.hpp"

namespace qcadviser {

using Bits = std::vector<std::uint8_t>;

/// Quadratic unconstrained binary objective
///   offset + sum_{i <= j} coeff(i, j) * x_i * x_j
/// stored upper-triangular; diagonal entries are the linear terms.
class Qubo {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  Qubo() = default;
  explicit Qubo(std::size_t size) : size_(size) {}

  std::size_t size() const noexcept { return size_; }
  const std::map<Index, double>& coeffs() const noexcept { return coeffs_; }
  double offset() const noexcept { return offset_; }

  /// Accumulates into the (min(i,j), max(i,j)) entry.
  void add(std::size_t i, std::size_t j, double value);
  void add_offset(double value) { offset_ += value; }
  double coeff(std::size_t i, std::size_t j) const;
  double max_abs_coeff() const;

  bool operator==(const Qubo&) const = default;

 private:
  std::size_t size_ = 0;
  std::map<Index, double> coeffs_;
  double offset_ = 0.0;
};

/// Objective value at `bits`, including the constant offset.
/// Throws LengthMismatch when bits.size() != qubo.size().
double evaluate(const Qubo& qubo, std::span<const std::uint8_t> bits);

struct TspPenalties {
  double constraint = 0.0;  // weight of the one-hot and missing-edge terms
  double cost = 1.0;        // weight of the tour-length term

  /// constraint = 2 * n * max finite distance (at least 2 * n), cost = 1.
  static TspPenalties defaults(const ProblemInstance& instance);
};

/// Bit index of "node v sits at tour position p".
constexpr std::size_t tsp_index(std::size_t node, std::size_t position, std::size_t n) {
  return node * n + position;
}

/// One-hot TSP formulation over n^2 variables. The node-exactly-once and
/// position-exactly-once penalties expand to -2c1 on every diagonal, +2c1 on
/// every same-node and same-position pair, and a 2n*c1 offset, so any valid
/// tour evaluates to exactly c2 times its length. Missing edges (+infinity in
/// the distance matrix) cost c1 per use instead of their length.
Qubo build_tsp_qubo(const ProblemInstance& instance, const TspPenalties& penalties);
Qubo build_tsp_qubo(const ProblemInstance& instance);

struct Tour {
  std::vector<std::size_t> order;
  double cost = 0.0;

  bool operator==(const Tour&) const = default;
};

/// Length of the closed tour, including the edge back to order.front().
double tour_cost(std::span<const std::size_t> order, const DistanceMatrix& distances);

/// Exact optimum by enumerating every tour with node 0 fixed first. Ties go
/// to the lexicographically smallest order. Throws TooLarge for n > 10.
Tour brute_force_tsp(const ProblemInstance& instance);
inline constexpr std::size_t kBruteForceLimit = 10;

/// The tour encoded by an n x n assignment, or nullopt unless every node row
/// and every position column holds exactly one set bit.
std::optional<Tour> decode_tour(std::span<const std::uint8_t> bits, const ProblemInstance& instance);
/// Same, priced on the complete unit graph.
std::optional<Tour> decode_tour(std::span<const std::uint8_t> bits, std::size_t n);

Bits encode_tour(std::span<const std::size_t> order);

/// 100 * (candidate - optimum) / optimum. Throws ZeroOptimum.
double deviation_pct(const Tour& candidate, const Tour& optimum);

struct SampleResult {
  Bits bits;
  double energy = 0.0;
  std::optional<Tour> decoded;

  bool operator==(const SampleResult&) const = default;
};

struct AnnealOptions {
  std::uint64_t seed = 0;
  std::size_t sweeps = 1000;
  std::size_t restarts = 1;
  double final_temperature = 0.01;
  /// When nonzero the QUBO is read as a grid x grid one-hot layout (index
  /// row * grid + column) and every sweep also proposes exchanging the
  /// columns held by two rows, a four-bit move that keeps one-hot rows and
  /// columns intact. Zero means single-bit moves only.
  std::size_t grid = 0;
};

/// Simulated annealing with single-bit Metropolis moves (plus optional grid
/// exchanges) and a geometric schedule from 10 * max|coeff| down to
/// `final_temperature`. Returns the lowest-energy state seen over all
/// restarts; ties keep the earliest restart. Deterministic for a fixed seed.
/// `decoded` is left empty.
SampleResult sample(const Qubo& qubo, const AnnealOptions& options);

/// `sample` with grid exchanges enabled (grid = n), followed by tour decoding
/// against the instance.
SampleResult sample_tour(const ProblemInstance& instance, const Qubo& qubo, const AnnealOptions& options);

}  // namespace qcadviser
