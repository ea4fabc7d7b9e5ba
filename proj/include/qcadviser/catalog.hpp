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
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcadviser {

struct ProblemClass {
  std::string id;
  std::string name;
  std::string description;

  bool operator==(const ProblemClass&) const = default;
};

enum class ParamKind { PositiveInteger, DistanceMatrix };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::PositiveInteger;
  bool required = true;
  long long min = 1;  // lower bound, PositiveInteger only

  bool operator==(const ParamSpec&) const = default;
};

struct ProblemDescriptor {
  std::string id;
  std::string class_id;
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;

  bool operator==(const ProblemDescriptor&) const = default;
};

/// Square matrix of non-negative edge lengths. An entry of +infinity marks an
/// edge that does not exist in the graph.
class DistanceMatrix {
 public:
  static constexpr double kMissing = std::numeric_limits<double>::infinity();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order, double fill = 0.0);
  /// Takes rows as given; shape is checked by `validate`.
  explicit DistanceMatrix(const std::vector<std::vector<double>>& rows);

  /// Complete graph with every off-diagonal edge of length 1.
  static DistanceMatrix unit(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t from, std::size_t to) const { return values_[from * order_ + to]; }
  double& operator()(std::size_t from, std::size_t to) { return values_[from * order_ + to]; }

  bool has_edge(std::size_t from, std::size_t to) const {
    return (*this)(from, to) != kMissing;
  }
  /// Largest finite off-diagonal entry, 0 for order < 2.
  double max_finite() const;

  /// Throws InvalidInstance unless square, symmetric, zero-diagonal and non-negative.
  void validate() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> values_;
};

struct ProblemInstance {
  std::string problem_id;
  std::size_t n = 0;                        // node count for TSP
  std::optional<DistanceMatrix> distances;  // absent: complete unit graph

  /// Throws InvalidInstance on n < 2 or a malformed distance matrix.
  void validate() const;
  /// The explicit matrix, or the unit matrix of order n.
  DistanceMatrix effective_distances() const;

  static ProblemInstance tsp(std::size_t n);
  static ProblemInstance tsp(DistanceMatrix distances);
};

using VariableCountFormula = std::function<std::size_t(const ProblemInstance&)>;

/// Problem classes, problem descriptors and the per-problem logical variable
/// count formulas. Mutated only during startup; reads are const and
/// thread-safe afterwards.
class Catalog {
 public:
  /// Catalog with the built-in classes (routing, sequencing, general), the
  /// TSP descriptor and the TSP n^2 formula.
  static Catalog with_builtins();

  void register_class(ProblemClass cls);
  /// Replaces an existing descriptor with the same id. Throws UnknownClass
  /// when the class is not registered and InvalidInstance on duplicate
  /// parameter names.
  void register_problem(ProblemDescriptor descriptor);
  void register_formula(const std::string& problem_id, VariableCountFormula formula);

  /// Merges a `problems.json` document (array of descriptors); file entries
  /// win over existing ones with the same id.
  void merge_problems(const nlohmann::json& doc);

  std::vector<ProblemClass> list_classes() const;
  std::vector<ProblemDescriptor> list_problems(const std::string& class_id) const;
  const ProblemDescriptor& problem(const std::string& problem_id) const;
  bool has_formula(const std::string& problem_id) const;

  std::size_t variable_count(const ProblemInstance& instance) const;

  /// Builds an instance from request parameters checked against the
  /// descriptor's schema. Throws SchemaError naming the offending parameter.
  ProblemInstance instance_from_params(const std::string& problem_id,
                                       const nlohmann::json& params) const;

 private:
  std::map<std::string, ProblemClass> classes_;
  std::map<std::string, ProblemDescriptor> problems_;
  std::map<std::string, VariableCountFormula> formulas_;
};

std::string to_string(ParamKind kind);
ParamKind param_kind_from_string(const std::string& text);

nlohmann::json to_json(const ProblemClass& cls);
nlohmann::json to_json(const ProblemDescriptor& descriptor);

}  // namespace qcadviser
