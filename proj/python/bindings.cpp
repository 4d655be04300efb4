// Copyright 2026 The mlpareto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <tuple>

#include "mlpareto/analysis.hpp"
#include "mlpareto/errors.hpp"
#include "mlpareto/graph.hpp"
#include "mlpareto/layers.hpp"
#include "mlpareto/pareto.hpp"
#include "mlpareto/spectral.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace mlpareto;

namespace {

using EdgeTuple = std::tuple<std::size_t, std::size_t, double>;

Layer make_layer(std::string name, std::size_t node_count, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [i, j, w] : edges) converted.push_back({i, j, w});
  return Layer(std::move(name), node_count, converted);
}

std::vector<EdgeTuple> layer_edges(const Layer& layer) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : layer.edges()) out.emplace_back(e.i, e.j, e.w);
  return out;
}

Eigen::MatrixXd ari_values(const AriMatrix& m) {
  const auto d = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index s = 0; s < d; ++s) {
    for (Eigen::Index t = 0; t < d; ++t) out(s, t) = m(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-layer community detection via Pareto-front walks between spectral bisections.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DegeneratePartitionError>(m, "DegeneratePartitionError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<EmptyInputError>(m, "EmptyInputError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InsufficientHistoryError>(m, "InsufficientHistoryError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());

  py::class_<Layer>(m, "Layer")
      .def(py::init(&make_layer), py::arg("name"), py::arg("node_count"), py::arg("edges"),
           "Edges are (i, j, w) tuples; self-loops and zero weights are dropped.")
      .def_property_readonly("name", &Layer::name)
      .def_property_readonly("node_count", &Layer::node_count)
      .def_property_readonly("edge_count", &Layer::edge_count)
      .def_property_readonly("edges", &layer_edges)
      .def("degree", &Layer::degree)
      .def("weight", &Layer::weight);

  py::class_<MultiLayerGraph>(m, "MultiLayerGraph")
      .def(py::init<std::size_t, std::vector<Layer>, std::optional<std::vector<std::string>>>(),
           py::arg("node_count"), py::arg("layers"), py::arg("node_names") = std::nullopt)
      .def_property_readonly("node_count", &MultiLayerGraph::node_count)
      .def_property_readonly("layer_count", &MultiLayerGraph::layer_count)
      .def("layer", &MultiLayerGraph::layer, py::return_value_policy::copy)
      .def_property_readonly("node_names", &MultiLayerGraph::node_names);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>(), py::arg("labels"))
      .def_property_readonly("labels",
                             [](const Partition& p) { return std::vector<int>(p.labels().begin(), p.labels().end()); })
      .def_property_readonly("part_count", &Partition::part_count)
      .def("part_sizes", &Partition::part_sizes)
      .def("is_bisection", &Partition::is_bisection)
      .def("__len__", &Partition::size)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });

  m.def("degree_vector", &degree_vector, py::arg("graph"), py::arg("node"));
  m.def("laplacian", [](const Layer& layer) { return Eigen::MatrixXd(laplacian(layer)); },
        py::arg("layer"), "Dense L = D - A.");
  m.def("connected_components", &connected_components, py::arg("layer"));

  m.def("cut_value", &cut_value, py::arg("layer"), py::arg("partition"));
  m.def("ratio_cut", &ratio_cut, py::arg("layer"), py::arg("partition"));
  m.def(
      "fiedler_vector",
      [](const Layer& layer, double tol, std::size_t max_iter) {
        const FiedlerPair f = fiedler_vector(layer, {tol, max_iter});
        return py::make_tuple(f.value, f.vector);
      },
      py::arg("layer"), py::arg("tol") = 1e-8, py::arg("max_iter") = 0);

  py::class_<BisectionResult>(m, "BisectionResult")
      .def_readonly("partition", &BisectionResult::partition)
      .def_readonly("objective_value", &BisectionResult::objective_value)
      .def_readonly("fiedler_value", &BisectionResult::fiedler_value)
      .def_property_readonly("method", [](const BisectionResult& r) { return std::string(to_string(r.method)); });
  m.def("spectral_bisect", [](const Layer& layer) { return spectral_bisect(layer); }, py::arg("layer"));

  py::class_<Objectives>(m, "Objectives")
      .def(py::init([](double f1, double f2) { return Objectives{f1, f2}; }), py::arg("f1"), py::arg("f2"))
      .def_readonly("f1", &Objectives::f1)
      .def_readonly("f2", &Objectives::f2)
      .def("__iter__", [](const Objectives& o) { return py::iter(py::make_tuple(o.f1, o.f2)); });

  py::class_<FrontCandidate>(m, "FrontCandidate")
      .def(py::init([](Partition p, Objectives o, std::size_t step) { return FrontCandidate{std::move(p), o, step}; }),
           py::arg("partition"), py::arg("objectives"), py::arg("step_index"))
      .def_readonly("partition", &FrontCandidate::partition)
      .def_readonly("objectives", &FrontCandidate::objectives)
      .def_readonly("step_index", &FrontCandidate::step_index);

  py::class_<ParetoFront>(m, "ParetoFront")
      .def_readonly("candidates", &ParetoFront::candidates)
      .def_readonly("selected", &ParetoFront::selected)
      .def("selected_candidate", &ParetoFront::selected_candidate, py::return_value_policy::copy);

  py::class_<WalkResult>(m, "WalkResult")
      .def_readonly("start", &WalkResult::start)
      .def_readonly("target", &WalkResult::target)
      .def_readonly("aligned_target", &WalkResult::aligned_target)
      .def_readonly("hamming_distance", &WalkResult::hamming_distance)
      .def_readonly("visited", &WalkResult::visited)
      .def_readonly("front", &WalkResult::front);

  m.def("dominates", &dominates, py::arg("a"), py::arg("b"));
  m.def("nondominated_filter", [](const std::vector<FrontCandidate>& pts) { return nondominated_filter(pts); },
        py::arg("points"));
  m.def("select_midpoint", [](const std::vector<FrontCandidate>& front) { return select_midpoint(front); },
        py::arg("front"));
  m.def("pareto_walk", [](const MultiLayerGraph& g) { return pareto_walk(g); }, py::arg("graph"));
  m.def(
      "recursive_communities",
      [](const MultiLayerGraph& g, int max_depth, std::size_t min_size) {
        RecursionOptions options;
        options.max_depth = max_depth;
        options.min_size = min_size;
        return recursive_communities(g, options);
      },
      py::arg("graph"), py::arg("max_depth") = 1, py::arg("min_size") = 1);

  py::class_<EventRecord>(m, "EventRecord")
      .def(py::init([](int day, std::string user, std::string tag) {
             return EventRecord{day, std::move(user), std::move(tag)};
           }),
           py::arg("day"), py::arg("user"), py::arg("tag"))
      .def_readonly("day", &EventRecord::day)
      .def_readonly("user", &EventRecord::user)
      .def_readonly("tag", &EventRecord::tag);

  py::class_<VolumeSeries>(m, "VolumeSeries")
      .def(py::init([](std::string tag, std::vector<std::int64_t> counts) {
             return VolumeSeries{std::move(tag), std::move(counts)};
           }),
           py::arg("tag"), py::arg("counts"))
      .def_readonly("tag", &VolumeSeries::tag)
      .def_readonly("counts", &VolumeSeries::counts);

  m.def("build_user_layer",
        [](const std::vector<EventRecord>& ev, int day, const std::vector<std::string>& tags) {
          return build_user_layer(ev, day, tags);
        },
        py::arg("events"), py::arg("day"), py::arg("tags"));
  m.def("pearson_window", &pearson_window, py::arg("x"), py::arg("y"), py::arg("day"),
        py::arg("window") = kDefaultWindow);
  m.def("fisher_z", &fisher_z, py::arg("r"));
  m.def("build_volume_layer",
        [](const std::vector<VolumeSeries>& s, int day, int window, double z) {
          return build_volume_layer(s, day, window, z);
        },
        py::arg("series"), py::arg("day"), py::arg("window") = kDefaultWindow,
        py::arg("z_threshold") = kDefaultZThreshold);
  m.def(
      "ingest_events",
      [](const std::filesystem::path& path, double max_error_rate) {
        IngestResult r = ingest_events(path, max_error_rate);
        return py::make_tuple(r.events, r.volumes, r.tags);
      },
      py::arg("path"), py::arg("max_error_rate") = 0.01);

  m.def("adjusted_rand_index", &adjusted_rand_index, py::arg("a"), py::arg("b"));
  m.def(
      "ari_matrix",
      [](const std::vector<Partition>& parts) { return ari_values(ari_matrix(parts)); },
      py::arg("partitions"));
  m.def(
      "generate_synthetic",
      [](const Partition& planted, double p_in, double p_out, std::optional<double> p_in2,
         std::optional<double> p_out2, std::uint64_t seed) {
        SyntheticSpec spec;
        spec.p = planted.size();
        spec.planted = planted;
        spec.layers[0] = {p_in, p_out};
        spec.layers[1] = {p_in2.value_or(p_in), p_out2.value_or(p_out)};
        spec.seed = seed;
        return generate_synthetic(spec);
      },
      py::arg("planted"), py::arg("p_in"), py::arg("p_out"), py::arg("p_in2") = std::nullopt,
      py::arg("p_out2") = std::nullopt, py::arg("seed") = 0);
  m.def("block_partition", &block_partition, py::arg("p"), py::arg("k"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
