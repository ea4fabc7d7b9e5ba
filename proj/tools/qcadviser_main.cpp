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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qcadviser/errors.hpp"
#include "qcadviser/evaluation.hpp"
#include "qcadviser/http_server.hpp"
#include "qcadviser/registry.hpp"
#include "qcadviser/service.hpp"

namespace {

using namespace qcadviser;
using nlohmann::json;

constexpr int kExitVerdictFail = 1;
constexpr int kExitConfig = 2;

struct Loaded {
  Catalog catalog;
  RegistrySnapshot snapshot;
};

std::string env_or(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : std::move(fallback);
}

Loaded load(const std::string& registry_flag) {
  const std::string dir = registry_flag.empty() ? env_or("QCADVISER_REGISTRY", "") : registry_flag;
  if (dir.empty()) throw ConfigError("no registry: pass --registry DIR or set QCADVISER_REGISTRY");
  auto loaded = load_registry_dir(dir);
  for (const auto& warning : loaded.snapshot.warnings) std::cerr << "warning: " << warning << "\n";
  Catalog catalog = Catalog::with_builtins();
  if (loaded.problems) catalog.merge_problems(*loaded.problems);
  return Loaded{std::move(catalog), std::move(loaded.snapshot)};
}

std::optional<DistanceMatrix> read_distances(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open distance file " + path);
  const json doc = json::parse(in);
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc) {
    std::vector<double> values;
    for (const auto& cell : row) values.push_back(cell.is_null() ? DistanceMatrix::kMissing : cell.get<double>());
    rows.push_back(std::move(values));
  }
  return DistanceMatrix(rows);
}

void print_table(const json& payload) {
  std::cout << fmt::format("problem {}  nodes {}\n", payload["problemId"].get<std::string>(),
                           payload["n"].get<std::size_t>());
  std::cout << fmt::format("estimated logical variables (numVar): {}\n", payload["numVar"].get<std::size_t>());
  std::cout << "estimated physical qubits (numQubits) by topology:";
  for (const auto& [name, qubits] : payload["numQubits"].items()) {
    std::cout << fmt::format(" {} {}", name, qubits.get<std::size_t>());
  }
  std::cout << "\n";
  if (payload["noCandidates"].get<bool>()) {
    std::cout << "no suitable solver: every solver in the registry is too small for this instance\n";
    return;
  }
  std::cout << fmt::format("sort mode: {}\n\n", payload["sortMode"].get<std::string>());
  std::cout << fmt::format("{:<5} {:<40} {:<7} {:>10} {:>13} {:>10} {:>6}\n", "rank", "solver", "kind",
                           "maxQubits", "maxVariables", "estQubits", "score");
  for (const auto& row : payload["rankedSolvers"]) {
    const std::string est = row.contains("estimatedQubits") ? row["estimatedQubits"].dump() : "-";
    const std::string score = row.contains("solutionQuality") ? row["solutionQuality"].dump() : "";
    std::cout << fmt::format("{:<5} {:<40} {:<7} {:>10} {:>13} {:>10} {:>6}\n", row["rank"].get<std::size_t>(),
                             row["name"].get<std::string>(), row["kind"].get<std::string>(),
                             row["maxQubits"].get<std::uint64_t>(), row["maxVariables"].get<std::uint64_t>(), est,
                             score);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum annealer solver recommendation"};
  app.require_subcommand(1);

  std::string registry;
  std::string problem = "tsp";
  std::size_t nodes = 0;
  std::string distances_file;
  bool as_json = false;

  auto* recommend_cmd = app.add_subcommand("recommend", "Estimate resources and rank suitable solvers");
  recommend_cmd->add_option("--problem", problem, "Problem id")->capture_default_str();
  recommend_cmd->add_option("--nodes", nodes, "Number of nodes")->required();
  recommend_cmd->add_option("--distances", distances_file, "JSON file with an n x n distance matrix");
  recommend_cmd->add_option("--registry", registry, "Registry directory (default: $QCADVISER_REGISTRY)");
  recommend_cmd->add_flag("--json", as_json, "Print the API payload instead of a table");

  std::uint64_t seed = 0;
  std::vector<std::string> selectors{"top", "second"};
  EvaluationOptions eval_defaults;
  std::size_t sweeps = eval_defaults.full_sweeps;
  std::size_t restarts = eval_defaults.restarts;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Check the ranking against a classical optimum");
  evaluate_cmd->add_option("--problem", problem, "Problem id")->capture_default_str();
  evaluate_cmd->add_option("--nodes", nodes, "Number of nodes (3..8)")->required();
  evaluate_cmd->add_option("--seed", seed, "Seed for the instance and the annealer")->capture_default_str();
  evaluate_cmd->add_option("--solvers", selectors, "Comma-separated: top, second, last, a rank, or a solver id")
      ->delimiter(',');
  evaluate_cmd->add_option("--distances", distances_file, "JSON file with an n x n distance matrix");
  evaluate_cmd->add_option("--sweeps", sweeps, "Sweeps for a solver with benchmark score 100")->capture_default_str();
  evaluate_cmd->add_option("--restarts", restarts, "Annealing restarts per solver")->capture_default_str();
  evaluate_cmd->add_option("--registry", registry, "Registry directory (default: $QCADVISER_REGISTRY)");

  std::string host = "0.0.0.0";
  int port = std::atoi(env_or("QCADVISER_PORT", "8080").c_str());
  std::string price_feed;
  std::string cors_origin = env_or("QCADVISER_CORS_ORIGIN", "*");
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--host", host, "Listen address")->capture_default_str();
  serve_cmd->add_option("--port", port, "Listen port (default: $QCADVISER_PORT or 8080)")->capture_default_str();
  serve_cmd->add_option("--registry", registry, "Registry directory (default: $QCADVISER_REGISTRY)");
  serve_cmd->add_option("--price-feed", price_feed, "prices.json-shaped file polled for live prices");
  serve_cmd->add_option("--cors-origin", cors_origin, "Allowed CORS origin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*recommend_cmd) {
      auto loaded = load(registry);
      auto distances = read_distances(distances_file);
      json params{{"n", nodes}};
      if (distances) {
        json rows = json::array();
        for (std::size_t i = 0; i < distances->order(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < distances->order(); ++j) {
            if (distances->has_edge(i, j)) {
              row.push_back((*distances)(i, j));
            } else {
              row.push_back(nullptr);
            }
          }
          rows.push_back(std::move(row));
        }
        params["distances"] = std::move(rows);
      }
      const auto instance = loaded.catalog.instance_from_params(problem, params);
      const json payload = recommend_payload(loaded.catalog, loaded.snapshot, instance);
      if (as_json) {
        std::cout << render_json(payload);
      } else {
        print_table(payload);
      }
      return 0;
    }

    if (*evaluate_cmd) {
      EvaluationOptions options;
      options.problem_id = problem;
      options.nodes = nodes;
      options.seed = seed;
      options.selectors = selectors;
      options.full_sweeps = sweeps;
      options.restarts = restarts;
      if (nodes < kEvaluateMinNodes || nodes > kEvaluateMaxNodes) {
        throw ConfigError(fmt::format("--nodes must be within {}..{}, got {}", kEvaluateMinNodes,
                                      kEvaluateMaxNodes, nodes));
      }
      options.distances = read_distances(distances_file);
      auto loaded = load(registry);
      const auto report = run_evaluation(loaded.catalog, loaded.snapshot, options);
      std::cout << format_report(report);
      return report.verdict.value_or(true) ? 0 : kExitVerdictFail;
    }

    if (*serve_cmd) {
      auto loaded = load(registry);
      std::shared_ptr<PriceProvider> provider;
      if (!price_feed.empty()) provider = std::make_shared<FilePriceProvider>(price_feed);
      AdviserService service(std::move(loaded.catalog), std::move(loaded.snapshot), provider);
      HttpServer server(service, HttpOptions{host, port, cors_origin});
      const int bound = server.bind();
      std::cerr << "listening on " << host << ":" << bound << "\n";
      server.listen();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
