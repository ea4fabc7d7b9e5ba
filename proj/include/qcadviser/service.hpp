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

#include <memory>
#include <string>

#include <json.hpp>

#include "qcadviser/advisor.hpp"
#include "qcadviser/catalog.hpp"
#include "qcadviser/registry.hpp"

namespace qcadviser {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Recommendation payload shared by the HTTP API and `recommend --json`.
/// A NoCandidates outcome yields an empty `rankedSolvers` with
/// `noCandidates: true`; other errors propagate.
nlohmann::json recommend_payload(const Catalog& catalog, const RegistrySnapshot& snapshot,
                                 const ProblemInstance& instance);

/// Canonical text form of a payload: two-space indent, trailing newline.
std::string render_json(const nlohmann::json& payload);

/// problem+json error body.
ApiResponse problem_response(int status, const std::string& detail, nlohmann::json extra = nlohmann::json::object());

/// Request handlers behind the HTTP routes, independent of the transport.
/// Stateless per request apart from price refreshes, which swap in a new
/// snapshot atomically.
class AdviserService {
 public:
  AdviserService(Catalog catalog, RegistrySnapshot snapshot, std::shared_ptr<PriceProvider> prices = nullptr);

  ApiResponse list_classes() const;
  ApiResponse list_problems(const std::string& class_id) const;
  ApiResponse recommend(const std::string& request_body) const;
  ApiResponse price(const std::string& solver_id);

  const Catalog& catalog() const noexcept { return catalog_; }
  SnapshotStore& store() noexcept { return store_; }

 private:
  Catalog catalog_;
  SnapshotStore store_;
  std::shared_ptr<PriceProvider> prices_;
};

}  // namespace qcadviser
