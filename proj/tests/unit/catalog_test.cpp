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

#include <gtest/gtest.h>

#include "qcadviser/catalog.hpp"
#include "qcadviser/errors.hpp"
#include "qcadviser/qubo.hpp"

namespace qcadviser {
namespace {

using nlohmann::json;

std::vector<std::string> ids(const std::vector<ProblemClass>& classes) {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(c.id);
  return out;
}

TEST(CatalogTest, BuiltinClassesSortedById) {
  const auto catalog = Catalog::with_builtins();
  EXPECT_EQ(ids(catalog.list_classes()), (std::vector<std::string>{"general", "routing", "sequencing"}));
}

TEST(CatalogTest, EmptyExtensionKeepsBuiltins) {
  auto catalog = Catalog::with_builtins();
  catalog.merge_problems(json::array());
  EXPECT_EQ(ids(catalog.list_classes()), (std::vector<std::string>{"general", "routing", "sequencing"}));
}

TEST(CatalogTest, RegisteredClassIsListedInOrder) {
  auto catalog = Catalog::with_builtins();
  catalog.register_class({"scheduling", "Scheduling", ""});
  EXPECT_EQ(ids(catalog.list_classes()),
            (std::vector<std::string>{"general", "routing", "scheduling", "sequencing"}));
}

TEST(CatalogTest, RoutingContainsTsp) {
  const auto catalog = Catalog::with_builtins();
  const auto problems = catalog.list_problems("routing");
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_EQ(problems[0].id, "tsp");
  EXPECT_EQ(problems[0].params[0].name, "n");
}

TEST(CatalogTest, GeneralMayBeEmpty) {
  EXPECT_TRUE(Catalog::with_builtins().list_problems("general").empty());
}

TEST(CatalogTest, UnknownClassThrows) {
  EXPECT_THROW(Catalog::with_builtins().list_problems("bogus"), UnknownClass);
}

TEST(CatalogTest, ListingIsPure) {
  const auto catalog = Catalog::with_builtins();
  EXPECT_EQ(catalog.list_classes(), catalog.list_classes());
  EXPECT_EQ(catalog.list_problems("routing"), catalog.list_problems("routing"));
}

TEST(CatalogTest, TspVariableCount) {
  const auto catalog = Catalog::with_builtins();
  EXPECT_EQ(catalog.variable_count(ProblemInstance::tsp(4)), 16u);
  EXPECT_EQ(catalog.variable_count(ProblemInstance::tsp(2)), 4u);
  EXPECT_EQ(catalog.variable_count(ProblemInstance::tsp(10)), 100u);
}

TEST(CatalogTest, VariableCountMatchesQuboSize) {
  const auto catalog = Catalog::with_builtins();
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto instance = ProblemInstance::tsp(n);
    EXPECT_EQ(catalog.variable_count(instance), n * n);
    EXPECT_EQ(catalog.variable_count(instance), build_tsp_qubo(instance).size()) << "n=" << n;
  }
}

TEST(CatalogTest, NoFormulaForDescriptorWithoutOne) {
  auto catalog = Catalog::with_builtins();
  catalog.merge_problems(json::parse(R"([{"id":"vrp","classId":"routing","name":"Vehicle Routing",
      "params":[{"name":"n","kind":"positive-integer","required":true,"min":2}]}])"));
  EXPECT_EQ(catalog.list_problems("routing").size(), 2u);
  EXPECT_THROW(catalog.variable_count(ProblemInstance{"vrp", 4, std::nullopt}), NoFormula);
  catalog.register_formula("vrp", [](const ProblemInstance& i) { return i.n * i.n * 2; });
  EXPECT_EQ(catalog.variable_count(ProblemInstance{"vrp", 4, std::nullopt}), 32u);
}

TEST(CatalogTest, FileEntriesWinById) {
  auto catalog = Catalog::with_builtins();
  catalog.merge_problems(json::parse(R"js([{"id":"tsp","classId":"routing","name":"TSP (custom)",
      "description":"replaced","params":[{"name":"n","kind":"positive-integer","required":true,"min":3}]}])js"));
  EXPECT_EQ(catalog.problem("tsp").name, "TSP (custom)");
  EXPECT_EQ(catalog.problem("tsp").params.size(), 1u);
}

TEST(CatalogTest, MergeRejectsBadDocuments) {
  auto catalog = Catalog::with_builtins();
  EXPECT_THROW(catalog.merge_problems(json::object()), SchemaError);
  EXPECT_THROW(catalog.merge_problems(json::parse(R"([{"id":"x","classId":"nope","name":"X"}])")), SchemaError);
  EXPECT_THROW(catalog.merge_problems(json::parse(
                   R"([{"id":"x","classId":"general","name":"X","params":[{"name":"a","kind":"matrix"}]}])")),
               SchemaError);
  EXPECT_THROW(catalog.merge_problems(json::parse(R"([{"id":"x","classId":"general","name":"X",
      "params":[{"name":"a","kind":"positive-integer"},{"name":"a","kind":"positive-integer"}]}])")),
               SchemaError);
}

TEST(InstanceTest, Validation) {
  EXPECT_NO_THROW(ProblemInstance::tsp(2).validate());
  EXPECT_THROW(ProblemInstance::tsp(1).validate(), InvalidInstance);

  DistanceMatrix asym(3, 1.0);
  asym(0, 1) = 2.0;
  EXPECT_THROW(ProblemInstance::tsp(asym).validate(), InvalidInstance);

  DistanceMatrix diag(3, 1.0);
  diag(1, 1) = 1.0;
  EXPECT_THROW(ProblemInstance::tsp(diag).validate(), InvalidInstance);

  DistanceMatrix negative(3, 1.0);
  negative(0, 2) = negative(2, 0) = -1.0;
  EXPECT_THROW(ProblemInstance::tsp(negative).validate(), InvalidInstance);

  ProblemInstance mismatch = ProblemInstance::tsp(4);
  mismatch.distances = DistanceMatrix(3, 1.0);
  EXPECT_THROW(mismatch.validate(), InvalidInstance);

  EXPECT_THROW(DistanceMatrix(std::vector<std::vector<double>>{{0, 1}, {1}}), InvalidInstance);
}

TEST(InstanceTest, AbsentDistancesMeanUnitGraph) {
  const auto d = ProblemInstance::tsp(3).effective_distances();
  EXPECT_EQ(d, DistanceMatrix::unit(3));
  EXPECT_EQ(d(0, 1), 1.0);
  EXPECT_EQ(d(2, 2), 0.0);
}

TEST(InstanceTest, FromParams) {
  const auto catalog = Catalog::with_builtins();
  const auto instance = catalog.instance_from_params("tsp", json{{"n", 4}});
  EXPECT_EQ(instance.n, 4u);
  EXPECT_FALSE(instance.distances);

  const auto with_matrix =
      catalog.instance_from_params("tsp", json::parse(R"({"n":3,"distances":[[0,1,null],[1,0,2],[null,2,0]]})"));
  ASSERT_TRUE(with_matrix.distances);
  EXPECT_FALSE(with_matrix.distances->has_edge(0, 2));

  try {
    catalog.instance_from_params("tsp", json{{"n", 0}});
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/params/n");
  }
  EXPECT_THROW(catalog.instance_from_params("tsp", json{{"n", 1}}), SchemaError);
  EXPECT_THROW(catalog.instance_from_params("tsp", json::object()), SchemaError);
  EXPECT_THROW(catalog.instance_from_params("tsp", json{{"n", "four"}}), SchemaError);
  EXPECT_THROW(catalog.instance_from_params("tsp", json{{"n", 4}, {"colour", 1}}), SchemaError);
  EXPECT_THROW(catalog.instance_from_params("tsp", json::parse(R"({"n":3,"distances":[[0,1],[1,0]]})")),
               SchemaError);
  EXPECT_THROW(catalog.instance_from_params("nope", json{{"n", 4}}), UnknownProblem);
}

}  // namespace
}  // namespace qcadviser
