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

#ifndef MLPARETO_PARETO_HPP
#define MLPARETO_PARETO_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mlpareto/graph.hpp"
#include "mlpareto/spectral.hpp"

namespace mlpareto {

// Ratio-cut values on layer 1 and layer 2. Degenerate partitions carry +inf
// in both coordinates.
struct Objectives {
  double f1 = 0.0;
  double f2 = 0.0;

  friend bool operator==(const Objectives&, const Objectives&) = default;
};

struct FrontCandidate {
  Partition partition;
  Objectives objectives;
  // Position along the walk; 0 is the layer-1 optimum.
  std::size_t step_index = 0;
};

struct ParetoFront {
  std::vector<FrontCandidate> candidates;
  std::size_t selected = 0;

  const FrontCandidate& selected_candidate() const { return candidates.at(selected); }
};

// a dominates b: no worse in both objectives and strictly better in one.
bool dominates(const Objectives& a, const Objectives& b) noexcept;

// First front of `points`: every candidate no other candidate dominates.
// Equal objective vectors are all kept. Output is ordered by f1, then f2,
// then step_index. O(n log n). Throws EmptyInputError on empty input and
// DomainError on NaN objectives.
std::vector<FrontCandidate> nondominated_filter(std::span<const FrontCandidate> points);

// Compromise choice: min-max normalise both objectives over the front
// (a constant coordinate maps to 0) and take the candidate with the smallest
// Chebyshev distance to (0.5, 0.5). Ties prefer smaller normalised f1, then
// smaller step_index.
std::size_t select_midpoint(std::span<const FrontCandidate> front);
std::size_t select_midpoint(const ParetoFront& front);

// Evaluates (f1, f2) for a partition of a two-layer graph, mapping an empty
// part to +inf.
Objectives evaluate_objectives(const MultiLayerGraph& g, const Partition& partition);

struct WalkResult {
  BisectionResult start;   // C1*, optimum of layer 1
  BisectionResult target;  // C2*, optimum of layer 2 as computed
  // C2* relabelled to agree with C1* on as many nodes as possible.
  Partition aligned_target;
  std::size_t hamming_distance = 0;
  // Every partition the walk visited, step 0 through hamming_distance.
  std::vector<FrontCandidate> visited;
  ParetoFront front;
};

// Walks from the layer-1 optimum to the layer-2 optimum one node at a time.
// Each step moves the disagreeing node whose flip most lowers f2 (smallest
// index on ties; flips that empty a part cost +inf). Every visited partition
// is recorded, the visited set is filtered to its first front, and the
// midpoint is marked as selected. Requires exactly two layers.
WalkResult pareto_walk(const MultiLayerGraph& g, const FiedlerOptions& options = {});

// Relabels `target` (two parts) by swapping 1 and 2 when that increases its
// agreement with `reference`. Exact ties keep the original labels.
Partition align_labels(const Partition& reference, const Partition& target);

struct RecursionOptions {
  int max_depth = 1;
  std::size_t min_size = 1;
  FiedlerOptions fiedler;
};

// Repeated midpoint bisection. A part is split again while its size is at
// least 2 * min_size and the depth budget allows; a branch whose bisection
// fails stays whole. Labels are numbered 1..K in depth-first order with the
// label-1 side first, so max_depth = 1 reproduces the walk's selection.
Partition recursive_communities(const MultiLayerGraph& g, const RecursionOptions& options = {});

}  // namespace mlpareto

#endif  // MLPARETO_PARETO_HPP
