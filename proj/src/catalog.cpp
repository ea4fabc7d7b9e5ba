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

#include "qcadviser/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qcadviser/errors.hpp"

namespace qcadviser {

using nlohmann::json;

DistanceMatrix::DistanceMatrix(std::size_t order, double fill)
    : order_(order), values_(order * order, fill) {
  for (std::size_t i = 0; i < order_; ++i) values_[i * order_ + i] = 0.0;
}

DistanceMatrix::DistanceMatrix(const std::vector<std::vector<double>>& rows) : order_(rows.size()) {
  values_.reserve(order_ * order_);
  for (const auto& row : rows) {
    if (row.size() != order_) {
      throw InvalidInstance("distance matrix is not square");
    }
    values_.insert(values_.end(), row.begin(), row.end());
  }
}

DistanceMatrix DistanceMatrix::unit(std::size_t order) { return DistanceMatrix(order, 1.0); }

double DistanceMatrix::max_finite() const {
  double best = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      const double d = (*this)(i, j);
      if (i != j && d != kMissing) best = std::max(best, d);
    }
  }
  return best;
}

void DistanceMatrix::validate() const {
  if (values_.size() != order_ * order_) throw InvalidInstance("distance matrix is not square");
  for (std::size_t i = 0; i < order_; ++i) {
    if ((*this)(i, i) != 0.0) {
      throw InvalidInstance("distance matrix diagonal must be zero (row " + std::to_string(i) + ")");
    }
    for (std::size_t j = 0; j < order_; ++j) {
      const double d = (*this)(i, j);
      if (std::isnan(d) || d < 0.0) {
        throw InvalidInstance("distance matrix entries must be non-negative");
      }
      if (d != (*this)(j, i)) {
        throw InvalidInstance("distance matrix must be symmetric (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
}

void ProblemInstance::validate() const {
  if (n < 2) throw InvalidInstance("instance needs at least 2 nodes, got " + std::to_string(n));
  if (distances) {
    if (distances->order() != n) {
      throw InvalidInstance("distance matrix order " + std::to_string(distances->order()) +
                            " does not match n = " + std::to_string(n));
    }
    distances->validate();
  }
}

DistanceMatrix ProblemInstance::effective_distances() const {
  return distances ? *distances : DistanceMatrix::unit(n);
}

ProblemInstance ProblemInstance::tsp(std::size_t n) { return ProblemInstance{"tsp", n, std::nullopt}; }

ProblemInstance ProblemInstance::tsp(DistanceMatrix distances) {
  const std::size_t n = distances.order();
  return ProblemInstance{"tsp", n, std::move(distances)};
}

std::string to_string(ParamKind kind) {
  switch (kind) {
    case ParamKind::PositiveInteger:
      return "positive-integer";
    case ParamKind::DistanceMatrix:
      return "distance-matrix";
  }
  return "unknown";
}

ParamKind param_kind_from_string(const std::string& text) {
  if (text == "positive-integer") return ParamKind::PositiveInteger;
  if (text == "distance-matrix") return ParamKind::DistanceMatrix;
  throw SchemaError("/kind", "unknown parameter kind '" + text + "'");
}

json to_json(const ProblemClass& cls) {
  return json{{"id", cls.id}, {"name", cls.name}, {"description", cls.description}};
}

json to_json(const ProblemDescriptor& descriptor) {
  json params = json::array();
  for (const auto& p : descriptor.params) {
    params.push_back(
        json{{"name", p.name}, {"kind", to_string(p.kind)}, {"required", p.required}, {"min", p.min}});
  }
  return json{{"id", descriptor.id},
              {"classId", descriptor.class_id},
              {"name", descriptor.name},
              {"description", descriptor.description},
              {"params", std::move(params)}};
}

Catalog Catalog::with_builtins() {
  Catalog catalog;
  catalog.register_class({"routing", "Routing Problems",
                          "Problems that search for an optimal route or tour through a graph."});
  catalog.register_class({"sequencing", "Sequencing Problems",
                          "Problems that order jobs or operations, such as job shop scheduling."});
  catalog.register_class({"general", "General Problems",
                          "Basic problems without additional constraints beyond the implicit ones."});

  catalog.register_problem(ProblemDescriptor{
      "tsp",
      "routing",
      "Travelling Salesman Problem",
      "Find the shortest tour that visits every node exactly once and returns to the start. "
      "Without a distance matrix the graph is complete with unit edge lengths.",
      {ParamSpec{"n", ParamKind::PositiveInteger, true, 2},
       ParamSpec{"distances", ParamKind::DistanceMatrix, false, 0}}});
  // One binary variable per (node, position) pair.
  catalog.register_formula("tsp", [](const ProblemInstance& instance) { return instance.n * instance.n; });
  return catalog;
}

void Catalog::register_class(ProblemClass cls) {
  auto id = cls.id;
  classes_.insert_or_assign(std::move(id), std::move(cls));
}

void Catalog::register_problem(ProblemDescriptor descriptor) {
  if (!classes_.count(descriptor.class_id)) throw UnknownClass(descriptor.class_id);
  std::set<std::string> names;
  for (const auto& p : descriptor.params) {
    if (!names.insert(p.name).second) {
      throw InvalidInstance("duplicate parameter '" + p.name + "' in problem '" + descriptor.id + "'");
    }
  }
  auto id = descriptor.id;
  problems_.insert_or_assign(std::move(id), std::move(descriptor));
}

void Catalog::register_formula(const std::string& problem_id, VariableCountFormula formula) {
  formulas_.insert_or_assign(problem_id, std::move(formula));
}

namespace {

const json& require_field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "/" + key, "missing required field");
  return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require_field(obj, key, path);
  if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
    throw SchemaError(path + "/" + key, "expected a non-empty string");
  }
  return v.get<std::string>();
}

std::string optional_string(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) throw SchemaError(path + "/" + key, "expected a string");
  return it->get<std::string>();
}

}  // namespace

void Catalog::merge_problems(const json& doc) {
  if (!doc.is_array()) throw SchemaError("", "problems document must be an array");
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "/" + std::to_string(i);
    const auto& entry = doc[i];
    ProblemDescriptor d;
    d.id = require_string(entry, "id", path);
    d.class_id = require_string(entry, "classId", path);
    d.name = require_string(entry, "name", path);
    d.description = optional_string(entry, "description", path);
    if (auto it = entry.find("params"); it != entry.end()) {
      if (!it->is_array()) throw SchemaError(path + "/params", "expected an array");
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string ppath = path + "/params/" + std::to_string(k);
        const auto& p = (*it)[k];
        ParamSpec spec;
        spec.name = require_string(p, "name", ppath);
        try {
          spec.kind = param_kind_from_string(require_string(p, "kind", ppath));
        } catch (const SchemaError& e) {
          throw SchemaError(ppath + "/kind", e.reason());
        }
        if (auto r = p.find("required"); r != p.end()) {
          if (!r->is_boolean()) throw SchemaError(ppath + "/required", "expected a boolean");
          spec.required = r->get<bool>();
        }
        if (auto m = p.find("min"); m != p.end()) {
          if (!m->is_number_integer()) throw SchemaError(ppath + "/min", "expected an integer");
          spec.min = m->get<long long>();
        } else {
          spec.min = spec.kind == ParamKind::PositiveInteger ? 1 : 0;
        }
        d.params.push_back(std::move(spec));
      }
    }
    if (!classes_.count(d.class_id)) {
      throw SchemaError(path + "/classId", "unknown class '" + d.class_id + "'");
    }
    try {
      register_problem(std::move(d));
    } catch (const InvalidInstance& e) {
      throw SchemaError(path + "/params", e.what());
    }
  }
}

std::vector<ProblemClass> Catalog::list_classes() const {
  std::vector<ProblemClass> out;
  out.reserve(classes_.size());
  for (const auto& [id, cls] : classes_) out.push_back(cls);
  return out;
}

std::vector<ProblemDescriptor> Catalog::list_problems(const std::string& class_id) const {
  if (!classes_.count(class_id)) throw UnknownClass(class_id);
  std::vector<ProblemDescriptor> out;
  for (const auto& [id, descriptor] : problems_) {
    if (descriptor.class_id == class_id) out.push_back(descriptor);
  }
  return out;
}

const ProblemDescriptor& Catalog::problem(const std::string& problem_id) const {
  auto it = problems_.find(problem_id);
  if (it == problems_.end()) throw UnknownProblem(problem_id);
  return it->second;
}

bool Catalog::has_formula(const std::string& problem_id) const { return formulas_.count(problem_id) > 0; }

std::size_t Catalog::variable_count(const ProblemInstance& instance) const {
  auto it = formulas_.find(instance.problem_id);
  if (it == formulas_.end()) throw NoFormula(instance.problem_id);
  instance.validate();
  return it->second(instance);
}

ProblemInstance Catalog::instance_from_params(const std::string& problem_id, const json& params) const {
  const auto& descriptor = problem(problem_id);
  if (!params.is_object()) throw SchemaError("/params", "expected an object");

  for (const auto& [key, value] : params.items()) {
    const bool known = std::any_of(descriptor.params.begin(), descriptor.params.end(),
                                   [&](const ParamSpec& p) { return p.name == key; });
    if (!known) throw SchemaError("/params/" + key, "unknown parameter");
  }

  ProblemInstance instance;
  instance.problem_id = problem_id;
  for (const auto& spec : descriptor.params) {
    const std::string path = "/params/" + spec.name;
    auto it = params.find(spec.name);
    if (it == params.end() || it->is_null()) {
      if (spec.required) throw SchemaError(path, "missing required parameter");
      continue;
    }
    switch (spec.kind) {
      case ParamKind::PositiveInteger: {
        if (!it->is_number_integer()) throw SchemaError(path, "expected an integer");
        const auto value = it->get<long long>();
        if (value < std::max<long long>(spec.min, 1)) {
          throw SchemaError(path, "must be at least " + std::to_string(std::max<long long>(spec.min, 1)));
        }
        // The first positive-integer parameter is the main size parameter.
        if (instance.n == 0) instance.n = static_cast<std::size_t>(value);
        break;
      }
      case ParamKind::DistanceMatrix: {
        if (!it->is_array()) throw SchemaError(path, "expected an array of rows");
        std::vector<std::vector<double>> rows;
        for (std::size_t r = 0; r < it->size(); ++r) {
          const auto& row = (*it)[r];
          if (!row.is_array()) throw SchemaError(path + "/" + std::to_string(r), "expected an array");
          std::vector<double> values;
          for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& cell = row[c];
            if (cell.is_null()) {
              values.push_back(DistanceMatrix::kMissing);
            } else if (cell.is_number()) {
              values.push_back(cell.get<double>());
            } else {
              throw SchemaError(path + "/" + std::to_string(r) + "/" + std::to_string(c),
                                "expected a number or null");
            }
          }
          rows.push_back(std::move(values));
        }
        try {
          instance.distances = DistanceMatrix(rows);
        } catch (const InvalidInstance& e) {
          throw SchemaError(path, e.what());
        }
        break;
      }
    }
  }
  try {
    instance.validate();
  } catch (const InvalidInstance& e) {
    throw SchemaError("/params", e.what());
  }
  return instance;
}

}  // namespace qcadviser
