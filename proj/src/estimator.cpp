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

#include "qcadviser/estimator.hpp"

#include "qcadviser/errors.hpp"

namespace qcadviser {

std::vector<Topology> default_topologies() {
  return {
      {"chimera", 4, "Bipartite K4,4 unit cells in a square grid"},
      {"pegasus", 12, "Degree-15 lattice with odd couplers"},
      {"zephyr", 16, "Degree-20 lattice with doubled unit-cell connectivity"},
  };
}

std::size_t estimate_qubits(std::size_t num_var, const Topology& topology) {
  if (num_var == 0) throw InvalidInstance("numVar must be at least 1");
  if (topology.clique_divisor == 0) throw InvalidInstance("clique divisor must be at least 1");
  const std::size_t chain_length = (num_var - 1) / topology.clique_divisor + 1;
  return num_var * chain_length;
}

ResourceEstimate estimate(const ProblemInstance& instance, const Topology& topology, const Catalog& catalog) {
  const std::size_t num_var = catalog.variable_count(instance);
  return ResourceEstimate{num_var, estimate_qubits(num_var, topology)};
}

}  // namespace qcadviser
