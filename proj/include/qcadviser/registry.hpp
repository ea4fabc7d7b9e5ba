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

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcadviser/advisor.hpp"
#include "qcadviser/estimator.hpp"

namespace qcadviser {

struct PriceEntry {
  std::string price_ref;
  double amount = 0.0;
  std::string currency;  // ISO 4217
  std::string unit;
  std::optional<std::string> fetched_at;  // set by a provider refresh

  bool operator==(const PriceEntry&) const = default;
};

/// Immutable, validated view of the solver collection.
struct RegistrySnapshot {
  std::vector<Solver> solvers;
  std::map<std::string, BenchmarkSet> benchmarks;  // by problem id
  std::map<std::string, Topology> topologies;      // by name
  std::map<std::string, PriceEntry> prices;        // by priceRef
  std::vector<std::string> warnings;

  const Solver* find_solver(const std::string& id) const;

  bool operator==(const RegistrySnapshot&) const = default;
};

/// Validates and assembles a snapshot. A null `benchmarks` or `prices`
/// document means empty; a null `topologies` document means the defaults.
/// Throws SchemaError, DuplicateId, UnsortedBenchmark or UnknownTopology.
/// Benchmark headers naming unknown solvers only add a warning.
RegistrySnapshot load_snapshot(const nlohmann::json& solvers, const nlohmann::json& benchmarks,
                               const nlohmann::json& topologies, const nlohmann::json& prices);

struct RegistryDocuments {
  nlohmann::json solvers;
  nlohmann::json benchmarks;
  nlohmann::json topologies;
  nlohmann::json prices;
};

RegistryDocuments to_documents(const RegistrySnapshot& snapshot);

nlohmann::json to_json(const Solver& solver);
nlohmann::json to_json(const BenchmarkSet& set);
nlohmann::json to_json(const Topology& topology);
nlohmann::json to_json(const PriceEntry& price);

/// Reads solvers.json (required) plus benchmarks.json, topologies.json,
/// prices.json and problems.json when present.
struct RegistryDirectory {
  RegistrySnapshot snapshot;
  std::optional<nlohmann::json> problems;
};

RegistryDirectory load_registry_dir(const std::filesystem::path& dir);

/// Source of fast-changing price data. Implementations throw
/// ProviderUnavailable when the backing service cannot be reached.
class PriceProvider {
 public:
  virtual ~PriceProvider() = default;
  virtual std::vector<PriceEntry> fetch(std::span<const std::string> refs) = 0;
};

/// Reads a prices.json-shaped file on every fetch and stamps entries with
/// the injected clock.
class FilePriceProvider : public PriceProvider {
 public:
  using Clock = std::function<std::string()>;

  explicit FilePriceProvider(std::filesystem::path path, Clock clock = {});
  std::vector<PriceEntry> fetch(std::span<const std::string> refs) override;

 private:
  std::filesystem::path path_;
  Clock clock_;
};

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

/// `current` with the refs the provider returned replaced. Refs the provider
/// does not know keep their old entry. Throws ProviderUnavailable, leaving
/// callers' data untouched.
std::map<std::string, PriceEntry> fetch_prices(PriceProvider& provider, std::span<const std::string> refs,
                                               const std::map<std::string, PriceEntry>& current);

/// Holds the live snapshot; readers take a shared_ptr and never see a
/// partially applied update.
class SnapshotStore {
 public:
  explicit SnapshotStore(RegistrySnapshot initial);

  std::shared_ptr<const RegistrySnapshot> get() const;
  void replace(RegistrySnapshot next);
  /// Copy-on-write price refresh, swapped in only on success.
  void refresh_prices(PriceProvider& provider, std::span<const std::string> refs);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const RegistrySnapshot> current_;
};

}  // namespace qcadviser
