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

#ifndef MLPARETO_GRAPH_HPP
#define MLPARETO_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

namespace mlpareto {

using NodeIndex = std::size_t;

struct Edge {
  NodeIndex i = 0;
  NodeIndex j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeIndex node;
  double weight;
};

// One undirected, weighted edge set over the node indices 0..p-1.
//
// Construction canonicalizes each edge to i < j, drops self-loops and
// zero-weight entries, and rejects negative or non-finite weights and
// duplicate pairs. The layer is immutable afterwards.
class Layer {
 public:
  Layer() = default;
  Layer(std::string name, std::size_t node_count, std::span<const Edge> edges);

  const std::string& name() const noexcept { return name_; }
  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted by (i, j), i < j.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted by neighbor index.
  std::span<const Neighbor> neighbors(NodeIndex node) const;

  double degree(NodeIndex node) const;
  std::span<const double> degrees() const noexcept { return degrees_; }

  // Adjacency entry A[i][j]; zero for absent edges and for i == j.
  double weight(NodeIndex i, NodeIndex j) const;

 private:
  std::string name_;
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
};

class MultiLayerGraph {
 public:
  MultiLayerGraph() = default;
  MultiLayerGraph(std::size_t node_count, std::vector<Layer> layers,
                  std::optional<std::vector<std::string>> node_names = std::nullopt);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  const Layer& layer(std::size_t k) const { return layers_.at(k); }
  std::span<const Layer> layers() const noexcept { return layers_; }
  const std::optional<std::vector<std::string>>& node_names() const noexcept {
    return node_names_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Layer> layers_;
  std::optional<std::vector<std::string>> node_names_;
};

// Node labelling C with C(i) in 1..K.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  int operator[](NodeIndex i) const { return labels_[i]; }
  int at(NodeIndex i) const { return labels_.at(i); }
  std::span<const int> labels() const noexcept { return labels_; }

  // Largest label in use (0 for an empty partition).
  int part_count() const noexcept { return part_count_; }

  // Entry k-1 counts the nodes labelled k.
  std::vector<std::size_t> part_sizes() const;

  // True when every label is 1 or 2 and both parts are nonempty.
  bool is_bisection() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> labels_;
  int part_count_ = 0;
};

// Weighted degree of `node` in every layer.
std::vector<double> degree_vector(const MultiLayerGraph& g, NodeIndex node);

// L = D - A.
Eigen::SparseMatrix<double> laplacian(const Layer& layer);

// Components over positive-weight edges; each component is sorted and the
// list is ordered by smallest contained index.
std::vector<std::vector<NodeIndex>> connected_components(const Layer& layer);

bool is_connected(const Layer& layer);

// Restriction of every layer to `nodes` (renumbered in the given order).
MultiLayerGraph induced_subgraph(const MultiLayerGraph& g,
                                 std::span<const NodeIndex> nodes);

}  // namespace mlpareto

#endif  // MLPARETO_GRAPH_HPP
