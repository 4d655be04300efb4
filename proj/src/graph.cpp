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

#include "mlpareto/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mlpareto/errors.hpp"

namespace mlpareto {

namespace {

void check_node(NodeIndex node, std::size_t node_count) {
  if (node >= node_count) {
    throw std::out_of_range("node index " + std::to_string(node) +
                            " out of range for " + std::to_string(node_count) +
                            " nodes");
  }
}

}  // namespace

Layer::Layer(std::string name, std::size_t node_count, std::span<const Edge> edges)
    : name_(std::move(name)), node_count_(node_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_node(e.i, node_count_);
    check_node(e.j, node_count_);
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw InvalidArgumentError("edge (" + std::to_string(e.i) + "," +
                                 std::to_string(e.j) +
                                 ") has a negative or non-finite weight");
    }
    if (e.i == e.j || e.w == 0.0) continue;
    edges_.push_back({std::min(e.i, e.j), std::max(e.i, e.j), e.w});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw InvalidArgumentError("duplicate edge (" + std::to_string(edges_[k].i) +
                                 "," + std::to_string(edges_[k].j) + ") in layer '" +
                                 name_ + "'");
    }
  }

  // CSR adjacency, both directions.
  std::vector<std::size_t> counts(node_count_, 0);
  for (const Edge& e : edges_) {
    ++counts[e.i];
    ++counts[e.j];
  }
  offsets_.assign(node_count_ + 1, 0);
  std::partial_sum(counts.begin(), counts.end(), offsets_.begin() + 1);
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.i]++] = {e.j, e.w};
    adjacency_[cursor[e.j]++] = {e.i, e.w};
  }
  degrees_.assign(node_count_, 0.0);
  for (NodeIndex v = 0; v < node_count_; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    for (auto it = first; it != last; ++it) degrees_[v] += it->weight;
  }
}

std::span<const Neighbor> Layer::neighbors(NodeIndex node) const {
  check_node(node, node_count_);
  return std::span<const Neighbor>(adjacency_).subspan(offsets_[node],
                                                        offsets_[node + 1] - offsets_[node]);
}

double Layer::degree(NodeIndex node) const {
  check_node(node, node_count_);
  return degrees_[node];
}

double Layer::weight(NodeIndex i, NodeIndex j) const {
  check_node(j, node_count_);
  auto row = neighbors(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& n, NodeIndex target) { return n.node < target; });
  return (it != row.end() && it->node == j) ? it->weight : 0.0;
}

MultiLayerGraph::MultiLayerGraph(std::size_t node_count, std::vector<Layer> layers,
                                 std::optional<std::vector<std::string>> node_names)
    : node_count_(node_count), layers_(std::move(layers)), node_names_(std::move(node_names)) {
  for (const Layer& layer : layers_) {
    if (layer.node_count() != node_count_) {
      throw DimensionError("layer '" + layer.name() + "' has " +
                           std::to_string(layer.node_count()) + " nodes, expected " +
                           std::to_string(node_count_));
    }
  }
  if (node_names_ && node_names_->size() != node_count_) {
    throw DimensionError("node name table has " + std::to_string(node_names_->size()) +
                         " entries, expected " + std::to_string(node_count_));
  }
}

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int label : labels_) {
    if (label < 1) throw InvalidArgumentError("partition labels must be >= 1");
    part_count_ = std::max(part_count_, label);
  }
}

std::vector<std::size_t> Partition::part_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(part_count_), 0);
  for (int label : labels_) ++sizes[static_cast<std::size_t>(label - 1)];
  return sizes;
}

bool Partition::is_bisection() const {
  if (part_count_ != 2) return false;
  auto sizes = part_sizes();
  return sizes[0] > 0 && sizes[1] > 0;
}

std::vector<double> degree_vector(const MultiLayerGraph& g, NodeIndex node) {
  check_node(node, g.node_count());
  std::vector<double> out;
  out.reserve(g.layer_count());
  for (const Layer& layer : g.layers()) out.push_back(layer.degree(node));
  return out;
}

Eigen::SparseMatrix<double> laplacian(const Layer& layer) {
  const auto p = static_cast<Eigen::Index>(layer.node_count());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * layer.edge_count() + layer.node_count());
  for (NodeIndex v = 0; v < layer.node_count(); ++v) {
    const auto row = static_cast<Eigen::Index>(v);
    triplets.emplace_back(row, row, layer.degree(v));
  }
  for (const Edge& e : layer.edges()) {
    const auto i = static_cast<Eigen::Index>(e.i);
    const auto j = static_cast<Eigen::Index>(e.j);
    triplets.emplace_back(i, j, -e.w);
    triplets.emplace_back(j, i, -e.w);
  }
  Eigen::SparseMatrix<double> l(p, p);
  l.setFromTriplets(triplets.begin(), triplets.end());
  return l;
}

std::vector<std::vector<NodeIndex>> connected_components(const Layer& layer) {
  const std::size_t p = layer.node_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(p, kUnvisited);
  std::vector<std::vector<NodeIndex>> out;
  std::vector<NodeIndex> stack;
  for (NodeIndex root = 0; root < p; ++root) {
    if (component[root] != kUnvisited) continue;
    const std::size_t id = out.size();
    out.emplace_back();
    component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (const Neighbor& n : layer.neighbors(v)) {
        if (component[n.node] == kUnvisited) {
          component[n.node] = id;
          stack.push_back(n.node);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Layer& layer) {
  return layer.node_count() <= 1 || connected_components(layer).size() == 1;
}

MultiLayerGraph induced_subgraph(const MultiLayerGraph& g, std::span<const NodeIndex> nodes) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(g.node_count(), kAbsent);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    check_node(nodes[k], g.node_count());
    if (local[nodes[k]] != kAbsent) throw InvalidArgumentError("repeated node in subgraph selection");
    local[nodes[k]] = k;
  }
  std::vector<Layer> layers;
  layers.reserve(g.layer_count());
  for (const Layer& layer : g.layers()) {
    std::vector<Edge> kept;
    for (const Edge& e : layer.edges()) {
      if (local[e.i] != kAbsent && local[e.j] != kAbsent) {
        kept.push_back({local[e.i], local[e.j], e.w});
      }
    }
    layers.emplace_back(layer.name(), nodes.size(), kept);
  }
  std::optional<std::vector<std::string>> names;
  if (g.node_names()) {
    names.emplace();
    for (NodeIndex v : nodes) names->push_back((*g.node_names())[v]);
  }
  return MultiLayerGraph(nodes.size(), std::move(layers), std::move(names));
}

}  // namespace mlpareto
