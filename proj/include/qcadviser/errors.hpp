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
#include <stdexcept>
#include <string>

namespace qcadviser {

/// Base of every error raised by the library. Subclasses carry the
/// structured fields callers need to build a response.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownClass : public Error {
 public:
  explicit UnknownClass(std::string class_id)
      : Error("unknown problem class '" + class_id + "'"), class_id_(std::move(class_id)) {}
  const std::string& class_id() const noexcept { return class_id_; }

 private:
  std::string class_id_;
};

class UnknownProblem : public Error {
 public:
  explicit UnknownProblem(std::string problem_id)
      : Error("unknown problem '" + problem_id + "'"), problem_id_(std::move(problem_id)) {}
  const std::string& problem_id() const noexcept { return problem_id_; }

 private:
  std::string problem_id_;
};

class NoFormula : public Error {
 public:
  explicit NoFormula(std::string problem_id)
      : Error("no variable-count formula registered for '" + problem_id + "'"),
        problem_id_(std::move(problem_id)) {}
  const std::string& problem_id() const noexcept { return problem_id_; }

 private:
  std::string problem_id_;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n, std::size_t limit)
      : Error("instance with " + std::to_string(n) + " nodes exceeds the enumeration bound of " +
              std::to_string(limit)),
        n_(n) {}
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual)
      : Error("expected " + std::to_string(expected) + " bits, got " + std::to_string(actual)) {}
};

class ZeroOptimum : public Error {
 public:
  ZeroOptimum() : Error("deviation is undefined for an optimum of cost 0") {}
};

class UnknownTopology : public Error {
 public:
  UnknownTopology(std::string solver_id, std::string topology)
      : Error("solver '" + solver_id + "' references unknown topology '" + topology + "'"),
        solver_id_(std::move(solver_id)) {}
  const std::string& solver_id() const noexcept { return solver_id_; }

 private:
  std::string solver_id_;
};

class NoCandidates : public Error {
 public:
  NoCandidates() : Error("no solver satisfies the resource requirements") {}
};

/// A document failed validation. `path` is a JSON pointer into the document.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::string reason)
      : Error(path + ": " + reason), path_(std::move(path)), reason_(std::move(reason)) {}
  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

class DuplicateId : public Error {
 public:
  DuplicateId(std::string kind, std::string id)
      : Error("duplicate " + kind + " id '" + id + "'"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class UnsortedBenchmark : public Error {
 public:
  UnsortedBenchmark(std::string problem_id, std::size_t row_index)
      : Error("benchmark rows for '" + problem_id + "' are not ascending by mainParam at row " +
              std::to_string(row_index)),
        problem_id_(std::move(problem_id)),
        row_index_(row_index) {}
  const std::string& problem_id() const noexcept { return problem_id_; }
  std::size_t row_index() const noexcept { return row_index_; }

 private:
  std::string problem_id_;
  std::size_t row_index_;
};

class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace qcadviser
