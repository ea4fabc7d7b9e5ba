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

#include "qcadviser/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qcadviser/errors.hpp"

namespace qcadviser {

void Qubo::add(std::size_t i, std::size_t j, double value) {
  if (i > j) std::swap(i, j);
  if (j >= size_) throw InvalidInstance("QUBO index out of range");
  coeffs_[{i, j}] += value;
}

double Qubo::coeff(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? 0.0 : it->second;
}

double Qubo::max_abs_coeff() const {
  double best = 0.0;
  for (const auto& [index, value] : coeffs_) best = std::max(best, std::abs(value));
  return best;
}

double evaluate(const Qubo& qubo, std::span<const std::uint8_t> bits) {
  if (bits.size() != qubo.size()) throw LengthMismatch(qubo.size(), bits.size());
  double energy = qubo.offset();
  for (const auto& [index, value] : qubo.coeffs()) {
    if (bits[index.first] && bits[index.second]) energy += value;
  }
  return energy;
}

TspPenalties TspPenalties::defaults(const ProblemInstance& instance) {
  double max_distance = instance.distances ? instance.distances->max_finite() : 1.0;
  if (max_distance <= 0.0) max_distance = 1.0;
  return TspPenalties{2.0 * static_cast<double>(instance.n) * max_distance, 1.0};
}

Qubo build_tsp_qubo(const ProblemInstance& instance, const TspPenalties& penalties) {
  instance.validate();
  if (!(penalties.constraint > 0.0) || !(penalties.cost > 0.0)) {
    throw InvalidInstance("penalty weights must be positive");
  }
  const std::size_t n = instance.n;
  const double c1 = penalties.constraint;
  const double c2 = penalties.cost;
  const DistanceMatrix distances = instance.effective_distances();

  Qubo qubo(n * n);
  // (1 - sum x)^2 over binaries is 1 - sum x + 2 sum_{a<b} x_a x_b; each
  // variable sits in one node row and one position column.
  qubo.add_offset(2.0 * static_cast<double>(n) * c1);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t i = tsp_index(v, p, n);
      qubo.add(i, i, -2.0 * c1);
      for (std::size_t other = p + 1; other < n; ++other) {
        qubo.add(i, tsp_index(v, other, n), 2.0 * c1);
      }
      for (std::size_t other = v + 1; other < n; ++other) {
        qubo.add(i, tsp_index(other, p, n), 2.0 * c1);
      }
    }
  }

  // Edge from position p to p+1, wrapping to close the tour.
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t next = (p + 1) % n;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const double weight = distances.has_edge(u, v) ? c2 * distances(u, v) : c1;
        if (weight != 0.0) qubo.add(tsp_index(u, p, n), tsp_index(v, next, n), weight);
      }
    }
  }
  return qubo;
}

Qubo build_tsp_qubo(const ProblemInstance& instance) {
  return build_tsp_qubo(instance, TspPenalties::defaults(instance));
}

double tour_cost(std::span<const std::size_t> order, const DistanceMatrix& distances) {
  double cost = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    cost += distances(order[i], order[(i + 1) % order.size()]);
  }
  return cost;
}

Tour brute_force_tsp(const ProblemInstance& instance) {
  instance.validate();
  if (instance.n > kBruteForceLimit) throw TooLarge(instance.n, kBruteForceLimit);
  const DistanceMatrix distances = instance.effective_distances();

  std::vector<std::size_t> order(instance.n);
  std::iota(order.begin(), order.end(), 0);
  Tour best{order, tour_cost(order, distances)};
  while (std::next_permutation(order.begin() + 1, order.end())) {
    const double cost = tour_cost(order, distances);
    if (cost < best.cost) best = Tour{order, cost};
  }
  return best;
}

namespace {

std::optional<std::vector<std::size_t>> decode_order(std::span<const std::uint8_t> bits, std::size_t n) {
  if (bits.size() != n * n) throw LengthMismatch(n * n, bits.size());
  std::vector<std::size_t> order(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t set = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (!bits[tsp_index(v, p, n)]) continue;
      ++set;
      if (order[p] != n) return std::nullopt;  // position already taken
      order[p] = v;
    }
    if (set != 1) return std::nullopt;
  }
  // n nodes each in exactly one distinct position fill every column.
  return order;
}

}  // namespace

std::optional<Tour> decode_tour(std::span<const std::uint8_t> bits, const ProblemInstance& instance) {
  auto order = decode_order(bits, instance.n);
  if (!order) return std::nullopt;
  const double cost = tour_cost(*order, instance.effective_distances());
  return Tour{std::move(*order), cost};
}

std::optional<Tour> decode_tour(std::span<const std::uint8_t> bits, std::size_t n) {
  return decode_tour(bits, ProblemInstance::tsp(n));
}

Bits encode_tour(std::span<const std::size_t> order) {
  const std::size_t n = order.size();
  Bits bits(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) bits[tsp_index(order[p], p, n)] = 1;
  return bits;
}

double deviation_pct(const Tour& candidate, const Tour& optimum) {
  if (optimum.cost == 0.0) throw ZeroOptimum();
  return 100.0 * (candidate.cost - optimum.cost) / optimum.cost;
}

namespace {

struct Neighbor {
  std::size_t index;
  double weight;
};

/// Adjacency view of a QUBO for incremental flip energies.
struct Couplings {
  std::vector<double> linear;
  std::vector<std::vector<Neighbor>> neighbors;

  explicit Couplings(const Qubo& qubo) : linear(qubo.size(), 0.0), neighbors(qubo.size()) {
    for (const auto& [index, value] : qubo.coeffs()) {
      const auto [i, j] = index;
      if (i == j) {
        linear[i] += value;
      } else {
        neighbors[i].push_back({j, value});
        neighbors[j].push_back({i, value});
      }
    }
  }
};

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

SampleResult sample(const Qubo& qubo, const AnnealOptions& options) {
  const std::size_t size = qubo.size();
  const std::size_t sweeps = std::max<std::size_t>(options.sweeps, 1);
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  const Couplings couplings(qubo);
  const std::size_t grid = options.grid;
  if (grid != 0 && grid * grid != size) {
    throw InvalidInstance("grid " + std::to_string(grid) + " does not match QUBO size " + std::to_string(size));
  }

  const double t_end = options.final_temperature;
  const double t_start = std::max(10.0 * qubo.max_abs_coeff(), t_end);
  const double ratio = sweeps > 1 ? std::pow(t_end / t_start, 1.0 / static_cast<double>(sweeps - 1)) : 1.0;

  SampleResult best;
  bool have_best = false;
  for (std::size_t restart = 0; restart < restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(options.seed >> 32), static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);

    Bits state(size);
    for (auto& bit : state) bit = static_cast<std::uint8_t>(rng() >> 63);
    std::vector<double> field = couplings.linear;
    for (std::size_t k = 0; k < size; ++k) {
      if (!state[k]) continue;
      for (const auto& nb : couplings.neighbors[k]) field[nb.index] += nb.weight;
    }
    double energy = evaluate(qubo, state);
    Bits run_best = state;
    double run_best_energy = energy;

    auto flip = [&](std::size_t k) {
      const double delta = state[k] ? -field[k] : field[k];
      const double sign = state[k] ? -1.0 : 1.0;
      state[k] ^= 1u;
      energy += delta;
      for (const auto& nb : couplings.neighbors[k]) field[nb.index] += sign * nb.weight;
    };
    auto keep_if_best = [&] {
      if (energy < run_best_energy) {
        run_best_energy = energy;
        run_best = state;
      }
    };
    // Column of the single set bit in `row`, or grid when the row is not one-hot.
    auto held_column = [&](std::size_t row) {
      std::size_t column = grid;
      for (std::size_t c = 0; c < grid; ++c) {
        if (!state[row * grid + c]) continue;
        if (column != grid) return grid;
        column = c;
      }
      return column;
    };

    double temperature = sweeps > 1 ? t_start : t_end;
    for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
      for (std::size_t k = 0; k < size; ++k) {
        const double delta = state[k] ? -field[k] : field[k];
        if (delta > 0.0 && unit_real(rng) >= std::exp(-delta / temperature)) continue;
        flip(k);
        keep_if_best();
      }
      for (std::size_t r1 = 0; r1 < grid; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < grid; ++r2) {
          const std::size_t c1 = held_column(r1);
          const std::size_t c2 = held_column(r2);
          if (c1 == grid || c2 == grid || c1 == c2) continue;
          const std::size_t move[] = {r1 * grid + c1, r2 * grid + c2, r1 * grid + c2, r2 * grid + c1};
          const double before = energy;
          for (auto k : move) flip(k);
          const double delta = energy - before;
          if (delta > 0.0 && unit_real(rng) >= std::exp(-delta / temperature)) {
            for (auto k : move) flip(k);
            energy = before;  // drop rounding drift from the round trip
            continue;
          }
          keep_if_best();
        }
      }
      temperature *= ratio;
    }

    const double exact = evaluate(qubo, run_best);
    if (!have_best || exact < best.energy) {
      best.bits = std::move(run_best);
      best.energy = exact;
      have_best = true;
    }
  }
  return best;
}

SampleResult sample_tour(const ProblemInstance& instance, const Qubo& qubo, const AnnealOptions& options) {
  AnnealOptions with_grid = options;
  with_grid.grid = instance.n;
  SampleResult result = sample(qubo, with_grid);
  result.decoded = decode_tour(result.bits, instance);
  return result;
}

}  // namespace qcadviser
