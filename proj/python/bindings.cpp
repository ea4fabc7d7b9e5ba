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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qcadviser/advisor.hpp"
#include "qcadviser/catalog.hpp"
#include "qcadviser/errors.hpp"
#include "qcadviser/estimator.hpp"
#include "qcadviser/evaluation.hpp"
#include "qcadviser/qubo.hpp"
#include "qcadviser/registry.hpp"
#include "qcadviser/service.hpp"

namespace py = pybind11;
using namespace qcadviser;

namespace {

using Rows = std::vector<std::vector<double>>;

ProblemInstance make_tsp(std::size_t n, const std::optional<Rows>& distances) {
  ProblemInstance instance = ProblemInstance::tsp(n);
  if (distances) instance.distances = DistanceMatrix(*distances);
  instance.validate();
  return instance;
}

struct Registry {
  Catalog catalog;
  RegistrySnapshot snapshot;
};

Registry open_registry(const std::filesystem::path& dir) {
  auto loaded = load_registry_dir(dir);
  Catalog catalog = Catalog::with_builtins();
  if (loaded.problems) catalog.merge_problems(*loaded.problems);
  return Registry{std::move(catalog), std::move(loaded.snapshot)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Solver recommendation for quantum annealers: resource estimation, ranking and TSP QUBO oracles";

  // Translators run newest first, so subclasses registered below win over Error.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NoCandidates>(m, "NoCandidates", base.ptr());
  py::register_exception<NoFormula>(m, "NoFormula", base.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<ZeroOptimum>(m, "ZeroOptimum", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());

  py::class_<Topology>(m, "Topology")
      .def(py::init([](std::string name, std::size_t divisor) { return Topology{std::move(name), divisor, ""}; }),
           py::arg("name"), py::arg("clique_divisor"))
      .def_readonly("name", &Topology::name)
      .def_readonly("clique_divisor", &Topology::clique_divisor);
  m.def("default_topologies", &default_topologies);
  m.def("estimate_qubits", &estimate_qubits, py::arg("num_var"), py::arg("topology"));

  m.def(
      "variable_count",
      [](const std::string& problem_id, std::size_t n) {
        ProblemInstance instance{problem_id, n, std::nullopt};
        return Catalog::with_builtins().variable_count(instance);
      },
      py::arg("problem_id"), py::arg("n"));

  py::class_<Qubo>(m, "Qubo")
      .def_property_readonly("size", &Qubo::size)
      .def_property_readonly("offset", &Qubo::offset)
      .def_property_readonly("coeffs", &Qubo::coeffs)
      .def("coeff", &Qubo::coeff)
      .def("evaluate", [](const Qubo& q, const Bits& bits) { return evaluate(q, bits); });

  m.def(
      "build_tsp_qubo",
      [](std::size_t n, const std::optional<Rows>& distances, std::optional<double> c1, std::optional<double> c2) {
        const auto instance = make_tsp(n, distances);
        auto penalties = TspPenalties::defaults(instance);
        if (c1) penalties.constraint = *c1;
        if (c2) penalties.cost = *c2;
        return build_tsp_qubo(instance, penalties);
      },
      py::arg("n"), py::arg("distances") = py::none(), py::arg("c1") = py::none(), py::arg("c2") = py::none());

  py::class_<Tour>(m, "Tour")
      .def_readonly("order", &Tour::order)
      .def_readonly("cost", &Tour::cost)
      .def("__repr__", [](const Tour& t) { return "Tour(cost=" + std::to_string(t.cost) + ")"; });

  m.def(
      "brute_force_tsp",
      [](std::size_t n, const std::optional<Rows>& distances) { return brute_force_tsp(make_tsp(n, distances)); },
      py::arg("n"), py::arg("distances") = py::none());
  m.def(
      "decode_tour",
      [](const Bits& bits, std::size_t n, const std::optional<Rows>& distances) {
        return decode_tour(bits, make_tsp(n, distances));
      },
      py::arg("bits"), py::arg("n"), py::arg("distances") = py::none());
  m.def("deviation_pct", &deviation_pct, py::arg("candidate"), py::arg("optimum"));

  py::class_<SampleResult>(m, "SampleResult")
      .def_readonly("bits", &SampleResult::bits)
      .def_readonly("energy", &SampleResult::energy);
  m.def(
      "sample",
      [](const Qubo& qubo, std::uint64_t seed, std::size_t sweeps, std::size_t restarts) {
        return sample(qubo, AnnealOptions{seed, sweeps, restarts});
      },
      py::arg("qubo"), py::arg("seed") = 0, py::arg("sweeps") = 1000, py::arg("restarts") = 1);

  py::class_<BenchmarkRow>(m, "BenchmarkRow")
      .def(py::init([](std::uint64_t main_param, std::vector<int> scores) {
             return BenchmarkRow{main_param, std::move(scores)};
           }),
           py::arg("main_param"), py::arg("scores"))
      .def_readonly("main_param", &BenchmarkRow::main_param)
      .def_readonly("scores", &BenchmarkRow::scores);
  m.def(
      "nearest_benchmark",
      [](const std::vector<BenchmarkRow>& rows, std::uint64_t n) -> std::optional<std::size_t> {
        BenchmarkSet set{"", {}, rows};
        auto match = nearest_benchmark(set, n);
        return match ? std::optional<std::size_t>(match->index) : std::nullopt;
      },
      py::arg("rows"), py::arg("n"), "Index of the accepted benchmark row, or None.");

  py::class_<Registry>(m, "Registry")
      .def(py::init(&open_registry), py::arg("directory"))
      .def_property_readonly("solver_ids",
                             [](const Registry& r) {
                               std::vector<std::string> ids;
                               for (const auto& s : r.snapshot.solvers) ids.push_back(s.id);
                               return ids;
                             })
      .def_property_readonly("warnings", [](const Registry& r) { return r.snapshot.warnings; })
      .def(
          "recommend_json",
          [](const Registry& r, const std::string& problem_id, std::size_t n) {
            ProblemInstance instance{problem_id, n, std::nullopt};
            return render_json(recommend_payload(r.catalog, r.snapshot, instance));
          },
          py::arg("problem_id"), py::arg("n"), "Payload text identical to POST /api/recommend.")
      .def(
          "evaluate",
          [](const Registry& r, std::size_t nodes, std::uint64_t seed, std::vector<std::string> selectors) {
            EvaluationOptions options;
            options.nodes = nodes;
            options.seed = seed;
            options.selectors = std::move(selectors);
            return format_report(run_evaluation(r.catalog, r.snapshot, options));
          },
          py::arg("nodes"), py::arg("seed") = 0,
          py::arg("selectors") = std::vector<std::string>{"top", "second"});
}
