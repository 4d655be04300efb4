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

#include "mlpareto/analysis.hpp"

#include <map>
#include <string>
#include <utility>

#include "mlpareto/errors.hpp"

namespace mlpareto {

namespace {

std::int64_t pairs(std::int64_t n) { return n * (n - 1) / 2; }

// splitmix64 finaliser.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_probabilities(const EdgeProbabilities& e, int layer) {
  if (!(0.0 <= e.p_out && e.p_out <= e.p_in && e.p_in <= 1.0)) {
    throw InvalidArgumentError("layer " + std::to_string(layer) +
                               ": need 0 <= p_out <= p_in <= 1, got p_in=" +
                               std::to_string(e.p_in) + " p_out=" + std::to_string(e.p_out));
  }
}

}  // namespace

double adjusted_rand_index(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw DimensionError("partitions have different lengths (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
  std::map<std::pair<int, int>, std::int64_t> table;
  std::map<int, std::int64_t> rows, cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++table[{a[i], b[i]}];
    ++rows[a[i]];
    ++cols[b[i]];
  }
  const bool same_up_to_relabel = table.size() == rows.size() && table.size() == cols.size();

  std::int64_t index = 0, sum_rows = 0, sum_cols = 0;
  for (const auto& [cell, n] : table) index += pairs(n);
  for (const auto& [label, n] : rows) sum_rows += pairs(n);
  for (const auto& [label, n] : cols) sum_cols += pairs(n);
  const std::int64_t total = pairs(static_cast<std::int64_t>(a.size()));
  if (total == 0) return same_up_to_relabel ? 1.0 : 0.0;

  const double expected = static_cast<double>(sum_rows) * static_cast<double>(sum_cols) /
                          static_cast<double>(total);
  const double maximum = 0.5 * static_cast<double>(sum_rows + sum_cols);
  if (maximum == expected) return same_up_to_relabel ? 1.0 : 0.0;
  return (static_cast<double>(index) - expected) / (maximum - expected);
}

AriMatrix ari_matrix(std::span<const Partition> partitions, std::vector<int> day_ids) {
  if (partitions.empty()) throw EmptyInputError("ARI matrix of zero partitions");
  const std::size_t d = partitions.size();
  for (const Partition& part : partitions) {
    if (part.size() != partitions.front().size()) {
      throw DimensionError("partitions cover different node counts");
    }
  }
  if (day_ids.empty()) {
    for (std::size_t s = 0; s < d; ++s) day_ids.push_back(static_cast<int>(s));
  } else if (day_ids.size() != d) {
    throw DimensionError("day id count does not match partition count");
  }
  AriMatrix out;
  out.day_ids = std::move(day_ids);
  out.values.assign(d * d, 1.0);
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = s + 1; t < d; ++t) {
      const double v = adjusted_rand_index(partitions[s], partitions[t]);
      out.values[s * d + t] = v;
      out.values[t * d + s] = v;
    }
  }
  return out;
}

double counter_uniform(std::uint64_t seed, std::uint64_t layer, std::uint64_t i, std::uint64_t j) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ layer);
  h = mix(h ^ i);
  h = mix(h ^ j);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

MultiLayerGraph generate_synthetic(const SyntheticSpec& spec) {
  if (spec.planted.size() != spec.p) {
    throw DimensionError("planted partition has " + std::to_string(spec.planted.size()) +
                         " labels, expected " + std::to_string(spec.p));
  }
  check_probabilities(spec.layers[0], 1);
  check_probabilities(spec.layers[1], 2);

  std::vector<Layer> layers;
  for (std::size_t k = 0; k < 2; ++k) {
    const EdgeProbabilities& prob = spec.layers[k];
    std::vector<Edge> edges;
    for (NodeIndex i = 0; i < spec.p; ++i) {
      for (NodeIndex j = i + 1; j < spec.p; ++j) {
        const double threshold = spec.planted[i] == spec.planted[j] ? prob.p_in : prob.p_out;
        if (counter_uniform(spec.seed, k, i, j) < threshold) edges.push_back({i, j, 1.0});
      }
    }
    layers.emplace_back("layer" + std::to_string(k + 1), spec.p, edges);
  }
  return MultiLayerGraph(spec.p, std::move(layers));
}

Partition block_partition(std::size_t p, int k) {
  if (k < 1) throw InvalidArgumentError("block count must be positive");
  std::vector<int> labels(p);
  const auto parts = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < p; ++i) labels[i] = static_cast<int>(i * parts / p) + 1;
  return Partition(std::move(labels));
}

Partition interleaved_partition(std::size_t p, int k) {
  if (k < 1) throw InvalidArgumentError("block count must be positive");
  std::vector<int> labels(p);
  for (std::size_t i = 0; i < p; ++i) labels[i] = static_cast<int>(i % static_cast<std::size_t>(k)) + 1;
  return Partition(std::move(labels));
}

std::uint64_t day_seed(std::uint64_t seed, int day) {
  return mix(seed ^ mix(static_cast<std::uint64_t>(day) + 0x5eedULL));
}

}  // namespace mlpareto
