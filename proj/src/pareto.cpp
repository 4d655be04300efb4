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

#include "mlpareto/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mlpareto/errors.hpp"

namespace mlpareto {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool front_order(const FrontCandidate& a, const FrontCandidate& b) {
  if (a.objectives.f1 != b.objectives.f1) return a.objectives.f1 < b.objectives.f1;
  if (a.objectives.f2 != b.objectives.f2) return a.objectives.f2 < b.objectives.f2;
  return a.step_index < b.step_index;
}

void check_two_layers(const MultiLayerGraph& g) {
  if (g.layer_count() != 2) {
    throw InvalidArgumentError("expected a two-layer graph, got " + std::to_string(g.layer_count()) +
                               " layers");
  }
}

}  // namespace

bool dominates(const Objectives& a, const Objectives& b) noexcept {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

std::vector<FrontCandidate> nondominated_filter(std::span<const FrontCandidate> points) {
  if (points.empty()) throw EmptyInputError("non-dominated filter of an empty candidate set");
  for (const FrontCandidate& c : points) {
    if (std::isnan(c.objectives.f1) || std::isnan(c.objectives.f2)) {
      throw DomainError("NaN objective at step " + std::to_string(c.step_index));
    }
  }
  std::vector<FrontCandidate> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), front_order);

  // Two objectives: after sorting on f1, a point survives iff its f2 is the
  // minimum of its equal-f1 group and strictly below every f2 seen at a
  // smaller f1.
  std::vector<FrontCandidate> out;
  double best_f2 = kInf;
  bool any_before = false;
  std::size_t g = 0;
  while (g < sorted.size()) {
    std::size_t end = g;
    while (end < sorted.size() && sorted[end].objectives.f1 == sorted[g].objectives.f1) ++end;
    const double group_f2 = sorted[g].objectives.f2;
    if (!any_before || group_f2 < best_f2) {
      for (std::size_t k = g; k < end && sorted[k].objectives.f2 == group_f2; ++k) {
        out.push_back(std::move(sorted[k]));
      }
    }
    best_f2 = any_before ? std::min(best_f2, group_f2) : group_f2;
    any_before = true;
    g = end;
  }
  return out;
}

std::size_t select_midpoint(std::span<const FrontCandidate> front) {
  if (front.empty()) throw EmptyInputError("midpoint of an empty front");
  double lo1 = kInf, hi1 = -kInf, lo2 = kInf, hi2 = -kInf;
  for (const FrontCandidate& c : front) {
    lo1 = std::min(lo1, c.objectives.f1);
    hi1 = std::max(hi1, c.objectives.f1);
    lo2 = std::min(lo2, c.objectives.f2);
    hi2 = std::max(hi2, c.objectives.f2);
  }
  auto normalise = [](double x, double lo, double hi) {
    const double span = hi - lo;
    if (!(span > 0.0) || !std::isfinite(span)) return 0.0;
    return (x - lo) / span;
  };

  std::size_t best = 0;
  double best_dist = kInf;
  double best_n1 = kInf;
  for (std::size_t k = 0; k < front.size(); ++k) {
    const double n1 = normalise(front[k].objectives.f1, lo1, hi1);
    const double n2 = normalise(front[k].objectives.f2, lo2, hi2);
    const double dist = std::max(std::abs(n1 - 0.5), std::abs(n2 - 0.5));
    bool better = false;
    if (dist != best_dist) {
      better = dist < best_dist;
    } else if (n1 != best_n1) {
      better = n1 < best_n1;
    } else {
      better = front[k].step_index < front[best].step_index;
    }
    if (better) {
      best = k;
      best_dist = dist;
      best_n1 = n1;
    }
  }
  return best;
}

std::size_t select_midpoint(const ParetoFront& front) { return select_midpoint(front.candidates); }

Objectives evaluate_objectives(const MultiLayerGraph& g, const Partition& partition) {
  check_two_layers(g);
  if (partition.size() != g.node_count()) {
    throw DimensionError("partition has " + std::to_string(partition.size()) + " labels, graph has " +
                         std::to_string(g.node_count()) + " nodes");
  }
  if (!partition.is_bisection()) {
    if (partition.part_count() > 2) throw InvalidArgumentError("expected a two-part partition");
    return {kInf, kInf};
  }
  return {ratio_cut(g.layer(0), partition), ratio_cut(g.layer(1), partition)};
}

Partition align_labels(const Partition& reference, const Partition& target) {
  if (reference.size() != target.size()) throw DimensionError("partitions differ in length");
  std::size_t agree = 0;
  for (std::size_t i = 0; i < target.size(); ++i) agree += reference[i] == target[i] ? 1 : 0;
  if (agree * 2 >= target.size()) return target;
  std::vector<int> swapped(target.labels().begin(), target.labels().end());
  for (int& label : swapped) label = 3 - label;
  return Partition(std::move(swapped));
}

WalkResult pareto_walk(const MultiLayerGraph& g, const FiedlerOptions& options) {
  check_two_layers(g);
  const std::size_t p = g.node_count();
  const Layer& second = g.layer(1);

  WalkResult result;
  result.start = spectral_bisect(g.layer(0), options);
  result.target = spectral_bisect(second, options);
  result.aligned_target = align_labels(result.start.partition, result.target.partition);
  const Partition& goal = result.aligned_target;

  std::vector<int> current(result.start.partition.labels().begin(), result.start.partition.labels().end());
  std::vector<NodeIndex> pending;
  for (NodeIndex i = 0; i < p; ++i) {
    if (current[i] != goal[i]) pending.push_back(i);
  }
  result.hamming_distance = pending.size();
  result.visited.reserve(pending.size() + 1);

  auto record = [&](std::size_t step) {
    Partition snapshot(current);
    Objectives obj = evaluate_objectives(g, snapshot);
    result.visited.push_back({std::move(snapshot), obj, step});
  };
  record(0);

  for (std::size_t step = 1; !pending.empty(); ++step) {
    const auto n1 = static_cast<std::size_t>(std::count(current.begin(), current.end(), 1));
    double cut = 0.0;
    for (const Edge& e : second.edges()) {
      if (current[e.i] != current[e.j]) cut += e.w;
    }
    const double f2_now = result.visited.back().objectives.f2;

    // cost(i) from the cut delta of moving i across: edges to its current
    // part become cut, edges to the other part stop being cut.
    std::size_t best_pos = 0;
    double best_cost = kInf;
    for (std::size_t pos = 0; pos < pending.size(); ++pos) {
      const NodeIndex i = pending[pos];
      const bool from_one = current[i] == 1;
      const std::size_t m1 = from_one ? n1 - 1 : n1 + 1;
      const std::size_t m2 = p - m1;
      double cost = kInf;
      if (m1 > 0 && m2 > 0) {
        double delta = 0.0;
        for (const Neighbor& nb : second.neighbors(i)) {
          delta += current[nb.node] == current[i] ? nb.weight : -nb.weight;
        }
        const double new_cut = std::max(0.0, cut + delta);
        const double f2_new =
            0.5 * (new_cut / static_cast<double>(m1) + new_cut / static_cast<double>(m2));
        cost = std::isfinite(f2_now) ? f2_new - f2_now : f2_new;
      }
      if (pos == 0 || cost < best_cost) {
        best_cost = cost;
        best_pos = pos;
      }
    }
    const NodeIndex chosen = pending[best_pos];
    current[chosen] = goal[chosen];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best_pos));
    record(step);
  }

  result.front.candidates = nondominated_filter(result.visited);
  result.front.selected = select_midpoint(result.front);
  return result;
}

namespace {

void split_recursively(const MultiLayerGraph& g, const std::vector<NodeIndex>& global, int depth,
                       const RecursionOptions& options, std::vector<std::vector<NodeIndex>>& leaves) {
  const WalkResult walk = pareto_walk(g, options.fiedler);
  const Partition& chosen = walk.front.selected_candidate().partition;
  std::vector<NodeIndex> parts[2];
  for (NodeIndex v = 0; v < g.node_count(); ++v) parts[chosen[v] - 1].push_back(v);

  for (const auto& local : parts) {
    std::vector<NodeIndex> ids;
    ids.reserve(local.size());
    for (NodeIndex v : local) ids.push_back(global[v]);
    if (depth < options.max_depth && local.size() >= 2 * options.min_size) {
      std::vector<std::vector<NodeIndex>> sub_leaves;
      try {
        split_recursively(induced_subgraph(g, local), ids, depth + 1, options, sub_leaves);
        for (auto& leaf : sub_leaves) leaves.push_back(std::move(leaf));
        continue;
      } catch (const Error&) {
        // This branch stays whole.
      }
    }
    leaves.push_back(std::move(ids));
  }
}

}  // namespace

Partition recursive_communities(const MultiLayerGraph& g, const RecursionOptions& options) {
  check_two_layers(g);
  if (options.max_depth < 1) throw InvalidArgumentError("max_depth must be at least 1");
  if (options.min_size < 1) throw InvalidArgumentError("min_size must be at least 1");
  const std::size_t p = g.node_count();
  if (p < 2 * options.min_size) {
    throw SizeError("graph of " + std::to_string(p) + " nodes is smaller than 2 * min_size");
  }
  std::vector<NodeIndex> global(p);
  for (NodeIndex v = 0; v < p; ++v) global[v] = v;
  std::vector<std::vector<NodeIndex>> leaves;
  split_recursively(g, global, 1, options, leaves);

  std::vector<int> labels(p, 0);
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    for (NodeIndex v : leaves[k]) labels[v] = static_cast<int>(k + 1);
  }
  return Partition(std::move(labels));
}

}  // namespace mlpareto
