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

#include "qcadviser/service.hpp"

#include "qcadviser/errors.hpp"

namespace qcadviser {

using nlohmann::json;

namespace {

const char* reason_phrase(int status) {
  switch (status) {
    case 400:
      return "Bad Request";
    case 404:
      return "Not Found";
    case 422:
      return "Unprocessable Entity";
    case 503:
      return "Service Unavailable";
    default:
      return "Internal Server Error";
  }
}

json ranked_entry(const RankedSolver& entry, const std::map<std::string, ResourceEstimate>& estimates) {
  const auto& s = entry.solver;
  json out{{"rank", entry.rank},
           {"id", s.id},
           {"name", s.name},
           {"kind", to_string(s.kind)},
           {"maxQubits", s.max_qubits},
           {"maxVariables", s.max_variables}};
  if (s.kind == SolverKind::Qpu) {
    out["topology"] = s.topology;
    if (auto it = estimates.find(s.topology); it != estimates.end()) out["estimatedQubits"] = it->second.num_qubits;
  }
  if (entry.solution_quality) out["solutionQuality"] = *entry.solution_quality;
  if (s.price_ref) out["priceRef"] = *s.price_ref;
  return out;
}

}  // namespace

json recommend_payload(const Catalog& catalog, const RegistrySnapshot& snapshot, const ProblemInstance& instance) {
  json payload{{"problemId", instance.problem_id}, {"n", instance.n}};
  try {
    const Recommendation rec = recommend(instance, snapshot, catalog);
    json qubits = json::object();
    for (const auto& [name, e] : rec.estimates) qubits[name] = e.num_qubits;
    json ranked = json::array();
    for (const auto& entry : rec.ranked) ranked.push_back(ranked_entry(entry, rec.estimates));

    payload["numVar"] = rec.num_var;
    payload["numQubits"] = std::move(qubits);
    payload["sortMode"] = to_string(rec.sort_mode);
    payload["benchmark"] = nullptr;
    if (rec.benchmark) {
      const auto& set = snapshot.benchmarks.at(instance.problem_id);
      payload["benchmark"] = json{{"index", rec.benchmark->index},
                                  {"mainParam", rec.benchmark->row.main_param},
                                  {"solverNames", set.solver_names},
                                  {"scores", rec.benchmark->row.scores}};
    }
    payload["noCandidates"] = false;
    payload["rankedSolvers"] = std::move(ranked);
  } catch (const NoCandidates&) {
    const std::size_t num_var = catalog.variable_count(instance);
    json qubits = json::object();
    for (const auto& [name, topology] : snapshot.topologies) qubits[name] = estimate_qubits(num_var, topology);
    payload["numVar"] = num_var;
    payload["numQubits"] = std::move(qubits);
    payload["sortMode"] = to_string(SortMode::Default);
    payload["benchmark"] = nullptr;
    payload["noCandidates"] = true;
    payload["rankedSolvers"] = json::array();
  }
  return payload;
}

std::string render_json(const json& payload) { return payload.dump(2) + "\n"; }

ApiResponse problem_response(int status, const std::string& detail, json extra) {
  json body{{"type", "about:blank"}, {"title", reason_phrase(status)}, {"status", status}, {"detail", detail}};
  for (auto& [key, value] : extra.items()) body[key] = value;
  return ApiResponse{status, render_json(body), "application/problem+json"};
}

AdviserService::AdviserService(Catalog catalog, RegistrySnapshot snapshot, std::shared_ptr<PriceProvider> prices)
    : catalog_(std::move(catalog)), store_(std::move(snapshot)), prices_(std::move(prices)) {}

ApiResponse AdviserService::list_classes() const {
  json out = json::array();
  for (const auto& cls : catalog_.list_classes()) out.push_back(to_json(cls));
  return ApiResponse{200, render_json(out)};
}

ApiResponse AdviserService::list_problems(const std::string& class_id) const {
  try {
    json out = json::array();
    for (const auto& d : catalog_.list_problems(class_id)) out.push_back(to_json(d));
    return ApiResponse{200, render_json(out)};
  } catch (const UnknownClass& e) {
    return problem_response(404, e.what());
  }
}

ApiResponse AdviserService::recommend(const std::string& request_body) const {
  json request;
  try {
    request = json::parse(request_body);
  } catch (const json::parse_error&) {
    return problem_response(400, "request body is not valid JSON");
  }
  if (!request.is_object()) return problem_response(400, "request body must be an object");
  auto problem_id = request.find("problemId");
  if (problem_id == request.end() || !problem_id->is_string()) {
    return problem_response(400, "problemId must be a string", json{{"path", "/problemId"}});
  }
  const json params = request.contains("params") ? request["params"] : json::object();

  auto snapshot = store_.get();
  try {
    const auto instance = catalog_.instance_from_params(problem_id->get<std::string>(), params);
    return ApiResponse{200, render_json(recommend_payload(catalog_, *snapshot, instance))};
  } catch (const SchemaError& e) {
    return problem_response(400, e.what(), json{{"path", e.path()}});
  } catch (const UnknownProblem& e) {
    return problem_response(400, e.what(), json{{"path", "/problemId"}});
  } catch (const NoFormula& e) {
    return problem_response(422, e.what());
  } catch (const InvalidInstance& e) {
    return problem_response(400, e.what());
  }
}

ApiResponse AdviserService::price(const std::string& solver_id) {
  auto snapshot = store_.get();
  const Solver* solver = snapshot->find_solver(solver_id);
  if (!solver) return problem_response(404, "unknown solver '" + solver_id + "'");
  if (!solver->price_ref) return problem_response(404, "solver '" + solver_id + "' has no price reference");
  const std::string ref = *solver->price_ref;

  if (prices_) {
    try {
      const std::string refs[] = {ref};
      store_.refresh_prices(*prices_, refs);
      snapshot = store_.get();
    } catch (const ProviderUnavailable& e) {
      json extra = json::object();
      if (auto it = snapshot->prices.find(ref); it != snapshot->prices.end()) extra["stale"] = to_json(it->second);
      return problem_response(503, e.what(), std::move(extra));
    }
  }
  auto it = snapshot->prices.find(ref);
  if (it == snapshot->prices.end()) return problem_response(404, "no price available for '" + ref + "'");
  return ApiResponse{200, render_json(to_json(it->second))};
}

}  // namespace qcadviser
