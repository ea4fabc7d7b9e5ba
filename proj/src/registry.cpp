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

#include "qcadviser/registry.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

#include "qcadviser/errors.hpp"

namespace qcadviser {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void expect_array(const json& doc, const std::string& path) {
  if (!doc.is_array()) throw SchemaError(path.empty() ? "/" : path, "expected an array");
}

void expect_object(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw SchemaError(path, "expected an object");
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(path, key), "missing required field");
  if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
    throw SchemaError(child(path, key), "expected a non-empty string");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaError(child(path, key), "expected a string");
  return it->get<std::string>();
}

std::uint64_t unsigned_value(const json& value, const std::string& path) {
  if (!value.is_number_integer() || (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
    throw SchemaError(path, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

std::uint64_t unsigned_field(const json& obj, const std::string& key, const std::string& path,
                             std::optional<std::uint64_t> fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    if (fallback) return *fallback;
    throw SchemaError(child(path, key), "missing required field");
  }
  return unsigned_value(*it, child(path, key));
}

std::map<std::string, Topology> parse_topologies(const json& doc) {
  std::map<std::string, Topology> out;
  if (doc.is_null()) {
    for (auto& t : default_topologies()) {
      auto name = t.name;
      out.emplace(std::move(name), std::move(t));
    }
    return out;
  }
  const std::string root = "/topologies";
  expect_array(doc, root);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto path = child(root, i);
    expect_object(doc[i], path);
    Topology t;
    t.name = string_field(doc[i], "name", path);
    t.clique_divisor = unsigned_field(doc[i], "cliqueDivisor", path, std::nullopt);
    if (t.clique_divisor < 1) throw SchemaError(child(path, "cliqueDivisor"), "must be at least 1");
    t.description = optional_string(doc[i], "description", path).value_or("");
    if (out.count(t.name)) throw DuplicateId("topology", t.name);
    auto name = t.name;
    out.emplace(std::move(name), std::move(t));
  }
  return out;
}

std::vector<Solver> parse_solvers(const json& doc, const std::map<std::string, Topology>& topologies) {
  const std::string root = "/solvers";
  expect_array(doc, root);
  std::vector<Solver> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto path = child(root, i);
    expect_object(doc[i], path);
    const auto& entry = doc[i];
    Solver s;
    s.id = string_field(entry, "id", path);
    s.name = string_field(entry, "name", path);
    const auto kind = string_field(entry, "kind", path);
    if (kind == "qpu") {
      s.kind = SolverKind::Qpu;
    } else if (kind == "hybrid") {
      s.kind = SolverKind::Hybrid;
    } else {
      throw SchemaError(child(path, "kind"), "expected \"qpu\" or \"hybrid\"");
    }
    s.max_qubits = unsigned_field(entry, "maxQubits", path, 0);
    s.max_variables = unsigned_field(entry, "maxVariables", path, 0);
    s.topology = optional_string(entry, "topology", path).value_or("");
    s.price_ref = optional_string(entry, "priceRef", path);
    s.description = optional_string(entry, "description", path).value_or("");

    if (s.kind == SolverKind::Qpu) {
      if (s.max_qubits == 0) throw SchemaError(child(path, "maxQubits"), "QPU solvers need maxQubits > 0");
      if (s.topology.empty()) throw SchemaError(child(path, "topology"), "QPU solvers need a topology");
    } else if (s.max_variables == 0) {
      throw SchemaError(child(path, "maxVariables"), "hybrid solvers need maxVariables > 0");
    }
    if (!ids.insert(s.id).second) throw DuplicateId("solver", s.id);
    if (s.kind == SolverKind::Qpu && !topologies.count(s.topology)) throw UnknownTopology(s.id, s.topology);
    out.push_back(std::move(s));
  }
  return out;
}

std::map<std::string, BenchmarkSet> parse_benchmarks(const json& doc, const std::vector<Solver>& solvers,
                                                     std::vector<std::string>& warnings) {
  std::map<std::string, BenchmarkSet> out;
  if (doc.is_null()) return out;
  const std::string root = "/benchmarks";
  expect_array(doc, root);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto path = child(root, i);
    expect_object(doc[i], path);
    const auto& entry = doc[i];
    BenchmarkSet set;
    set.problem_id = string_field(entry, "problemId", path);

    auto names = entry.find("solverNames");
    if (names == entry.end()) throw SchemaError(child(path, "solverNames"), "missing required field");
    expect_array(*names, child(path, "solverNames"));
    for (std::size_t k = 0; k < names->size(); ++k) {
      const auto& name = (*names)[k];
      if (!name.is_string()) throw SchemaError(child(child(path, "solverNames"), k), "expected a string");
      set.solver_names.push_back(name.get<std::string>());
    }

    auto rows = entry.find("rows");
    if (rows == entry.end()) throw SchemaError(child(path, "rows"), "missing required field");
    expect_array(*rows, child(path, "rows"));
    for (std::size_t r = 0; r < rows->size(); ++r) {
      const auto rpath = child(child(path, "rows"), r);
      expect_object((*rows)[r], rpath);
      BenchmarkRow row;
      row.main_param = unsigned_field((*rows)[r], "mainParam", rpath, std::nullopt);
      if (row.main_param == 0) throw SchemaError(child(rpath, "mainParam"), "must be positive");
      auto scores = (*rows)[r].find("scores");
      if (scores == (*rows)[r].end()) throw SchemaError(child(rpath, "scores"), "missing required field");
      expect_array(*scores, child(rpath, "scores"));
      if (scores->size() != set.solver_names.size()) {
        throw SchemaError(child(rpath, "scores"), "expected one score per solver name");
      }
      for (std::size_t k = 0; k < scores->size(); ++k) {
        const auto value = unsigned_value((*scores)[k], child(child(rpath, "scores"), k));
        if (value > 100) throw SchemaError(child(child(rpath, "scores"), k), "score must be within 0..100");
        row.scores.push_back(static_cast<int>(value));
      }
      if (!set.rows.empty() && row.main_param < set.rows.back().main_param) {
        throw UnsortedBenchmark(set.problem_id, r);
      }
      set.rows.push_back(std::move(row));
    }

    for (const auto& name : set.solver_names) {
      const bool known = std::any_of(solvers.begin(), solvers.end(), [&](const Solver& s) { return s.name == name; });
      if (!known) {
        warnings.push_back("benchmark for '" + set.problem_id + "' names unknown solver '" + name + "'");
      }
    }
    if (out.count(set.problem_id)) throw DuplicateId("benchmark", set.problem_id);
    auto id = set.problem_id;
    out.emplace(std::move(id), std::move(set));
  }
  return out;
}

PriceEntry parse_price(const json& entry, const std::string& path) {
  expect_object(entry, path);
  PriceEntry p;
  p.price_ref = string_field(entry, "priceRef", path);
  auto amount = entry.find("amount");
  if (amount == entry.end() || !amount->is_number()) {
    throw SchemaError(child(path, "amount"), "expected a number");
  }
  p.amount = amount->get<double>();
  if (!(p.amount >= 0.0)) throw SchemaError(child(path, "amount"), "must be non-negative");
  p.currency = string_field(entry, "currency", path);
  if (p.currency.size() != 3 ||
      !std::all_of(p.currency.begin(), p.currency.end(), [](unsigned char c) { return std::isupper(c); })) {
    throw SchemaError(child(path, "currency"), "expected an ISO 4217 code");
  }
  p.unit = string_field(entry, "unit", path);
  p.fetched_at = optional_string(entry, "fetchedAt", path);
  return p;
}

std::map<std::string, PriceEntry> parse_prices(const json& doc, const std::string& root) {
  std::map<std::string, PriceEntry> out;
  if (doc.is_null()) return out;
  expect_array(doc, root);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto p = parse_price(doc[i], child(root, i));
    if (out.count(p.price_ref)) throw DuplicateId("price", p.price_ref);
    auto ref = p.price_ref;
    out.emplace(std::move(ref), std::move(p));
  }
  return out;
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(file.filename().string(), e.what());
  }
}

}  // namespace

const Solver* RegistrySnapshot::find_solver(const std::string& id) const {
  auto it = std::find_if(solvers.begin(), solvers.end(), [&](const Solver& s) { return s.id == id; });
  return it == solvers.end() ? nullptr : &*it;
}

RegistrySnapshot load_snapshot(const json& solvers, const json& benchmarks, const json& topologies,
                               const json& prices) {
  RegistrySnapshot snapshot;
  snapshot.topologies = parse_topologies(topologies);
  snapshot.solvers = parse_solvers(solvers, snapshot.topologies);
  snapshot.benchmarks = parse_benchmarks(benchmarks, snapshot.solvers, snapshot.warnings);
  snapshot.prices = parse_prices(prices, "/prices");
  return snapshot;
}

json to_json(const Solver& solver) {
  json out{{"id", solver.id},
           {"name", solver.name},
           {"kind", to_string(solver.kind)},
           {"maxQubits", solver.max_qubits},
           {"maxVariables", solver.max_variables},
           {"description", solver.description}};
  if (!solver.topology.empty()) out["topology"] = solver.topology;
  if (solver.price_ref) out["priceRef"] = *solver.price_ref;
  return out;
}

json to_json(const BenchmarkSet& set) {
  json rows = json::array();
  for (const auto& row : set.rows) rows.push_back(json{{"mainParam", row.main_param}, {"scores", row.scores}});
  return json{{"problemId", set.problem_id}, {"solverNames", set.solver_names}, {"rows", std::move(rows)}};
}

json to_json(const Topology& topology) {
  return json{{"name", topology.name},
              {"cliqueDivisor", topology.clique_divisor},
              {"description", topology.description}};
}

json to_json(const PriceEntry& price) {
  json out{{"priceRef", price.price_ref},
           {"amount", price.amount},
           {"currency", price.currency},
           {"unit", price.unit}};
  if (price.fetched_at) out["fetchedAt"] = *price.fetched_at;
  return out;
}

RegistryDocuments to_documents(const RegistrySnapshot& snapshot) {
  RegistryDocuments docs{json::array(), json::array(), json::array(), json::array()};
  for (const auto& s : snapshot.solvers) docs.solvers.push_back(to_json(s));
  for (const auto& [id, set] : snapshot.benchmarks) docs.benchmarks.push_back(to_json(set));
  for (const auto& [name, t] : snapshot.topologies) docs.topologies.push_back(to_json(t));
  for (const auto& [ref, p] : snapshot.prices) docs.prices.push_back(to_json(p));
  return docs;
}

RegistryDirectory load_registry_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("registry directory not found: " + dir.string());
  auto optional_doc = [&](const char* name) -> json {
    const auto file = dir / name;
    return std::filesystem::exists(file) ? read_json_file(file) : json();
  };
  const auto solvers_file = dir / "solvers.json";
  if (!std::filesystem::exists(solvers_file)) throw Error("missing " + solvers_file.string());

  RegistryDirectory out;
  out.snapshot = load_snapshot(read_json_file(solvers_file), optional_doc("benchmarks.json"),
                               optional_doc("topologies.json"), optional_doc("prices.json"));
  if (auto problems = optional_doc("problems.json"); !problems.is_null()) out.problems = std::move(problems);
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

FilePriceProvider::FilePriceProvider(std::filesystem::path path, Clock clock)
    : path_(std::move(path)), clock_(clock ? std::move(clock) : Clock(utc_timestamp)) {}

std::vector<PriceEntry> FilePriceProvider::fetch(std::span<const std::string> refs) {
  std::ifstream in(path_);
  if (!in) throw ProviderUnavailable("price feed " + path_.string() + " is unavailable");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ProviderUnavailable(std::string("price feed is malformed: ") + e.what());
  }
  std::map<std::string, PriceEntry> feed;
  try {
    feed = parse_prices(doc, "/feed");
  } catch (const Error& e) {
    throw ProviderUnavailable(std::string("price feed is malformed: ") + e.what());
  }
  const auto stamp = clock_();
  std::vector<PriceEntry> out;
  for (const auto& ref : refs) {
    if (auto it = feed.find(ref); it != feed.end()) {
      auto entry = it->second;
      entry.fetched_at = stamp;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

std::map<std::string, PriceEntry> fetch_prices(PriceProvider& provider, std::span<const std::string> refs,
                                               const std::map<std::string, PriceEntry>& current) {
  if (refs.empty()) return current;
  auto updated = current;
  for (auto& entry : provider.fetch(refs)) {
    if (std::find(refs.begin(), refs.end(), entry.price_ref) == refs.end()) continue;
    auto ref = entry.price_ref;
    updated.insert_or_assign(std::move(ref), std::move(entry));
  }
  return updated;
}

SnapshotStore::SnapshotStore(RegistrySnapshot initial)
    : current_(std::make_shared<const RegistrySnapshot>(std::move(initial))) {}

std::shared_ptr<const RegistrySnapshot> SnapshotStore::get() const {
  std::lock_guard lock(mutex_);
  return current_;
}

void SnapshotStore::replace(RegistrySnapshot next) {
  auto fresh = std::make_shared<const RegistrySnapshot>(std::move(next));
  std::lock_guard lock(mutex_);
  current_ = std::move(fresh);
}

void SnapshotStore::refresh_prices(PriceProvider& provider, std::span<const std::string> refs) {
  auto base = get();
  RegistrySnapshot next = *base;
  next.prices = fetch_prices(provider, refs, base->prices);
  std::lock_guard lock(mutex_);
  // Only swap prices; a concurrent replace() must not be rolled back.
  if (current_ == base) {
    current_ = std::make_shared<const RegistrySnapshot>(std::move(next));
  } else {
    RegistrySnapshot merged = *current_;
    for (const auto& ref : refs) {
      if (auto it = next.prices.find(ref); it != next.prices.end()) merged.prices.insert_or_assign(ref, it->second);
    }
    current_ = std::make_shared<const RegistrySnapshot>(std::move(merged));
  }
}

}  // namespace qcadviser
