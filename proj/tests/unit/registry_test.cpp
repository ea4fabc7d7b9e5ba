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

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "qcadviser/errors.hpp"
#include "qcadviser/registry.hpp"

namespace qcadviser {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

const fs::path kFixtures{QCADVISER_FIXTURES};

json solvers_doc() {
  return json::parse(R"([
    {"id":"qpu","name":"QPU","kind":"qpu","maxQubits":5760,"topology":"chimera","priceRef":"qpu-time"},
    {"id":"hyb","name":"Hybrid","kind":"hybrid","maxVariables":1000000}
  ])");
}

/// Records calls; optionally fails.
class StubProvider : public PriceProvider {
 public:
  std::vector<PriceEntry> entries;
  bool fail = false;
  int calls = 0;

  std::vector<PriceEntry> fetch(std::span<const std::string>) override {
    ++calls;
    if (fail) throw ProviderUnavailable("stub outage");
    return entries;
  }
};

TEST(RegistryTest, MinimalDirectory) {
  const auto dir = load_registry_dir(kFixtures / "minimal");
  EXPECT_EQ(dir.snapshot.solvers.size(), 1u);
  EXPECT_TRUE(dir.snapshot.benchmarks.empty());
  EXPECT_TRUE(dir.snapshot.prices.empty());
  EXPECT_TRUE(dir.snapshot.warnings.empty());
  EXPECT_FALSE(dir.problems);
  // No topologies.json means the built-in table.
  EXPECT_EQ(dir.snapshot.topologies.size(), 3u);
  EXPECT_EQ(dir.snapshot.topologies.at("zephyr").clique_divisor, 16u);
}

TEST(RegistryTest, SolverFields) {
  const auto snap = load_snapshot(solvers_doc(), json(), json(), json());
  ASSERT_NE(snap.find_solver("qpu"), nullptr);
  const Solver& q = *snap.find_solver("qpu");
  EXPECT_EQ(q.kind, SolverKind::Qpu);
  EXPECT_EQ(q.max_qubits, 5760u);
  EXPECT_EQ(q.topology, "chimera");
  EXPECT_EQ(q.price_ref, "qpu-time");
  EXPECT_EQ(snap.find_solver("hyb")->max_variables, 1000000u);
  EXPECT_EQ(snap.find_solver("missing"), nullptr);
}

TEST(RegistryTest, UnsortedBenchmarkNamesRow) {
  try {
    load_registry_dir(kFixtures / "bad_unsorted");
    FAIL() << "expected UnsortedBenchmark";
  } catch (const UnsortedBenchmark& e) {
    EXPECT_EQ(e.problem_id(), "tsp");
    EXPECT_EQ(e.row_index(), 1u);
  }
}

TEST(RegistryTest, DuplicateSolverId) {
  try {
    load_registry_dir(kFixtures / "bad_duplicate");
    FAIL() << "expected DuplicateId";
  } catch (const DuplicateId& e) {
    EXPECT_EQ(e.id(), "hybrid_bqm");
  }
}

TEST(RegistryTest, UnknownTopology) {
  try {
    load_registry_dir(kFixtures / "bad_topology");
    FAIL() << "expected UnknownTopology";
  } catch (const UnknownTopology& e) {
    EXPECT_EQ(e.solver_id(), "mystery");
    EXPECT_NE(std::string(e.what()).find("foo"), std::string::npos);
  }
}

TEST(RegistryTest, SchemaErrorsCarryPaths) {
  try {
    load_registry_dir(kFixtures / "bad_schema");
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/solvers/0/maxVariables");
  }
  EXPECT_THROW(load_registry_dir(kFixtures / "bad_json"), SchemaError);
  EXPECT_THROW(load_registry_dir(kFixtures / "does_not_exist"), Error);

  EXPECT_THROW(load_snapshot(json::object(), json(), json(), json()), SchemaError);
  EXPECT_THROW(load_snapshot(json::parse(R"([{"id":"x","name":"X","kind":"annealer"}])"), json(), json(), json()),
               SchemaError);
  EXPECT_THROW(load_snapshot(json::parse(R"([{"id":"x","name":"X","kind":"qpu","maxQubits":10}])"), json(), json(),
                             json()),
               SchemaError);
  EXPECT_THROW(load_snapshot(json::parse(R"([{"id":"x","name":"X","kind":"hybrid"}])"), json(), json(), json()),
               SchemaError);
  // Row width must match the header.
  EXPECT_THROW(load_snapshot(solvers_doc(),
                             json::parse(R"([{"problemId":"tsp","solverNames":["QPU"],
                                 "rows":[{"mainParam":4,"scores":[1,2]}]}])"),
                             json(), json()),
               SchemaError);
  EXPECT_THROW(load_snapshot(solvers_doc(), json(), json(),
                             json::parse(R"([{"priceRef":"p","amount":-1,"currency":"USD","unit":"s"}])")),
               SchemaError);
  EXPECT_THROW(load_snapshot(solvers_doc(), json(), json::parse(R"([{"name":"chimera","cliqueDivisor":0}])"), json()),
               SchemaError);
}

TEST(RegistryTest, DuplicateBenchmarkAndPrice) {
  const auto set = json::parse(R"({"problemId":"tsp","solverNames":[],"rows":[]})");
  EXPECT_THROW(load_snapshot(solvers_doc(), json::array({set, set}), json(), json()), DuplicateId);
  const auto price = json::parse(R"({"priceRef":"p","amount":1,"currency":"USD","unit":"s"})");
  EXPECT_THROW(load_snapshot(solvers_doc(), json(), json(), json::array({price, price})), DuplicateId);
}

TEST(RegistryTest, EqualMainParamsAreSorted) {
  const auto snap = load_snapshot(solvers_doc(),
                                  json::parse(R"([{"problemId":"tsp","solverNames":["QPU"],
                                      "rows":[{"mainParam":4,"scores":[1]},{"mainParam":4,"scores":[2]}]}])"),
                                  json(), json());
  EXPECT_EQ(snap.benchmarks.at("tsp").rows.size(), 2u);
}

TEST(RegistryTest, UnknownBenchmarkNamesWarn) {
  const auto dir = load_registry_dir(kFixtures / "unknown_names");
  ASSERT_EQ(dir.snapshot.warnings.size(), 1u);
  EXPECT_NE(dir.snapshot.warnings[0].find("Retired QPU"), std::string::npos);
  // The column is kept, it just never matches a candidate.
  EXPECT_EQ(dir.snapshot.benchmarks.at("tsp").solver_names.size(), 2u);
}

TEST(RegistryTest, RoundTrip) {
  const auto original = load_registry_dir(kFixtures / "golden").snapshot;
  const auto docs = to_documents(original);
  const auto reloaded = load_snapshot(docs.solvers, docs.benchmarks, docs.topologies, docs.prices);
  EXPECT_EQ(reloaded, original);
  EXPECT_EQ(to_documents(reloaded).solvers, docs.solvers);
}

TEST(RegistryTest, RandomRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto snap = testing::random_registry(rng).snapshot;
    const auto docs = to_documents(snap);
    auto reloaded = load_snapshot(docs.solvers, docs.benchmarks, docs.topologies, docs.prices);
    snap.warnings = reloaded.warnings;  // generated fixtures may name retired solvers
    EXPECT_EQ(reloaded, snap);
  }
}

TEST(PriceTest, FetchMergesRequestedRefsOnly) {
  StubProvider stub;
  stub.entries = {PriceEntry{"a", 2.0, "USD", "s", "t1"}, PriceEntry{"z", 9.0, "USD", "s", "t1"}};
  const std::map<std::string, PriceEntry> current{{"a", PriceEntry{"a", 1.0, "USD", "s", {}}},
                                                  {"b", PriceEntry{"b", 5.0, "EUR", "s", {}}}};
  const std::vector<std::string> refs{"a"};
  const auto updated = fetch_prices(stub, refs, current);
  EXPECT_EQ(updated.at("a").amount, 2.0);
  EXPECT_EQ(updated.at("a").fetched_at, "t1");
  EXPECT_EQ(updated.at("b"), current.at("b"));
  EXPECT_FALSE(updated.count("z"));
}

TEST(PriceTest, EmptyRefsDoNotCallProvider) {
  StubProvider stub;
  const std::map<std::string, PriceEntry> current{{"a", PriceEntry{"a", 1.0, "USD", "s", {}}}};
  EXPECT_EQ(fetch_prices(stub, {}, current), current);
  EXPECT_EQ(stub.calls, 0);
}

TEST(PriceTest, OutagePropagatesAndLeavesStoreUntouched) {
  StubProvider stub;
  stub.fail = true;
  SnapshotStore store(load_registry_dir(kFixtures / "golden").snapshot);
  const auto before = store.get();
  const std::vector<std::string> refs{"qpu-access"};
  EXPECT_THROW(store.refresh_prices(stub, refs), ProviderUnavailable);
  EXPECT_EQ(store.get(), before);
}

TEST(PriceTest, FileProviderStampsEntries) {
  const auto feed = fs::temp_directory_path() / "qcadviser_price_feed.json";
  {
    std::ofstream out(feed);
    out << R"([{"priceRef":"qpu-access","amount":0.0002,"currency":"USD","unit":"microsecond"}])";
  }
  FilePriceProvider provider(feed, [] { return std::string("2026-02-01T00:00:00Z"); });
  const std::vector<std::string> refs{"qpu-access", "unknown"};
  const auto entries = provider.fetch(refs);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].amount, 0.0002);
  EXPECT_EQ(entries[0].fetched_at, "2026-02-01T00:00:00Z");

  fs::remove(feed);
  EXPECT_THROW(provider.fetch(refs), ProviderUnavailable);
  {
    std::ofstream out(feed);
    out << "not json";
  }
  EXPECT_THROW(provider.fetch(refs), ProviderUnavailable);
  fs::remove(feed);
}

TEST(PriceTest, UtcTimestampShape) {
  const auto stamp = utc_timestamp();
  ASSERT_EQ(stamp.size(), 20u);
  EXPECT_EQ(stamp[10], 'T');
  EXPECT_EQ(stamp.back(), 'Z');
}

TEST(SnapshotStoreTest, ReadersKeepTheirSnapshot) {
  SnapshotStore store(testing::snapshot_of({testing::hybrid("old", 10)}));
  const auto held = store.get();
  store.replace(testing::snapshot_of({testing::hybrid("new", 10)}));
  EXPECT_EQ(held->solvers[0].id, "old");
  EXPECT_EQ(store.get()->solvers[0].id, "new");
}

TEST(SnapshotStoreTest, RefreshSwapsPrices) {
  StubProvider stub;
  stub.entries = {PriceEntry{"qpu-access", 0.5, "USD", "microsecond", "now"}};
  SnapshotStore store(load_registry_dir(kFixtures / "golden").snapshot);
  const std::vector<std::string> refs{"qpu-access"};
  store.refresh_prices(stub, refs);
  EXPECT_EQ(store.get()->prices.at("qpu-access").amount, 0.5);
  EXPECT_EQ(store.get()->solvers.size(), 4u);
}

TEST(SnapshotStoreTest, ConcurrentReadsAndWrites) {
  SnapshotStore store(testing::snapshot_of({testing::hybrid("s", 10)}));
  std::atomic<bool> torn{false};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 2000; ++i) {
        const auto snap = store.get();
        if (snap->solvers.size() != 1 || snap->solvers[0].max_variables != 10) torn = true;
      }
    });
  }
  threads.emplace_back([&] {
    for (int i = 0; i < 200; ++i) store.replace(testing::snapshot_of({testing::hybrid("s" + std::to_string(i), 10)}));
  });
  for (auto& t : threads) t.join();
  EXPECT_FALSE(torn);
}

}  // namespace
}  // namespace qcadviser
