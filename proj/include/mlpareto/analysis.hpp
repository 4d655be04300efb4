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

#ifndef MLPARETO_ANALYSIS_HPP
#define MLPARETO_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mlpareto/graph.hpp"

namespace mlpareto {

// Hubert-Arabie adjusted Rand index over arbitrary labelings.
// When the index is undefined (expected == maximum) it is 1 for partitions
// that agree up to relabelling and 0 otherwise.
double adjusted_rand_index(const Partition& a, const Partition& b);

struct AriMatrix {
  // Row-major, day_ids.size() squared.
  std::vector<double> values;
  std::vector<int> day_ids;

  std::size_t size() const noexcept { return day_ids.size(); }
  double operator()(std::size_t s, std::size_t t) const { return values[s * day_ids.size() + t]; }
};

// Pairwise ARI; day_ids defaults to 0..D-1.
AriMatrix ari_matrix(std::span<const Partition> partitions, std::vector<int> day_ids = {});

struct EdgeProbabilities {
  double p_in = 0.0;
  double p_out = 0.0;
};

struct SyntheticSpec {
  std::size_t p = 0;
  Partition planted;
  std::array<EdgeProbabilities, 2> layers;
  std::uint64_t seed = 0;
};

// Uniform draw in [0, 1) determined only by (seed, layer, i, j).
double counter_uniform(std::uint64_t seed, std::uint64_t layer, std::uint64_t i, std::uint64_t j);

// Planted-partition two-layer graph: each pair i < j is linked in layer k
// with probability p_in when the planted labels agree and p_out otherwise.
// Throws InvalidArgumentError unless 0 <= p_out <= p_in <= 1 per layer.
MultiLayerGraph generate_synthetic(const SyntheticSpec& spec);

// k contiguous blocks of near-equal size, labels 1..k.
Partition block_partition(std::size_t p, int k);

// Node i gets label (i mod k) + 1.
Partition interleaved_partition(std::size_t p, int k);

// Per-day seed for synthetic day sequences.
std::uint64_t day_seed(std::uint64_t seed, int day);

}  // namespace mlpareto

#endif  // MLPARETO_ANALYSIS_HPP
