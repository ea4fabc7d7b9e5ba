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
#include <string>
#include <vector>

#include "qcadviser/catalog.hpp"

namespace qcadviser {

/// QPU connectivity family. `clique_divisor` is how many logical variables a
/// single chain of physical qubits can serve in a clique embedding.
struct Topology {
  std::string name;
  std::size_t clique_divisor = 1;
  std::string description;

  bool operator==(const Topology&) const = default;
};

struct ResourceEstimate {
  std::size_t num_var = 0;
  std::size_t num_qubits = 0;

  bool operator==(const ResourceEstimate&) const = default;
};

/// chimera (4), pegasus (12), zephyr (16).
std::vector<Topology> default_topologies();

/// Clique-embedding heuristic: every variable becomes a chain of
/// floor((numVar - 1) / D) + 1 qubits.
std::size_t estimate_qubits(std::size_t num_var, const Topology& topology);

ResourceEstimate estimate(const ProblemInstance& instance, const Topology& topology, const Catalog& catalog);

}  // namespace qcadviser
