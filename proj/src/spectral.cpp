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

#include "mlpareto/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "mlpareto/errors.hpp"

namespace mlpareto {

namespace {

void check_bisection_labels(const Layer& layer, const Partition& partition) {
  if (partition.size() != layer.node_count()) {
    throw DimensionError("partition has " + std::to_string(partition.size()) +
                         " labels, layer has " + std::to_string(layer.node_count()) + " nodes");
  }
  if (partition.part_count() > 2) {
    throw InvalidArgumentError("expected a two-part partition, got labels up to " +
                               std::to_string(partition.part_count()));
  }
}

double ratio_from_cut(double cut, std::size_t n1, std::size_t n2) {
  return 0.5 * (cut / static_cast<double>(n1) + cut / static_cast<double>(n2));
}

using Vec = Eigen::VectorXd;

// y = L x, with the result projected back onto the complement of 1.
void apply_laplacian(const Layer& layer, const Vec& x, Vec& y) {
  const auto p = static_cast<Eigen::Index>(layer.node_count());
  for (Eigen::Index v = 0; v < p; ++v) {
    const auto node = static_cast<NodeIndex>(v);
    double acc = layer.degree(node) * x[v];
    for (const Neighbor& n : layer.neighbors(node)) acc -= n.weight * x[static_cast<Eigen::Index>(n.node)];
    y[v] = acc;
  }
  y.array() -= y.mean();
}

void project_out_ones(Vec& x) { x.array() -= x.mean(); }

// Deterministic vectors used to seed or extend the Krylov space.
Vec seed_vector(Eigen::Index p, int salt) {
  Vec v(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const double t = static_cast<double>(i + 1);
    v[i] = salt == 0 ? std::sin(t) : std::sin(t * (1.0 + 0.61803398875 * salt) + salt);
  }
  return v;
}

// Orthogonalises w against the first `k` columns of q (two passes).
void reorthogonalise(const Eigen::MatrixXd& q, Eigen::Index k, Vec& w) {
  for (int pass = 0; pass < 2; ++pass) {
    if (k > 0) w.noalias() -= q.leftCols(k) * (q.leftCols(k).transpose() * w);
    project_out_ones(w);
  }
}

}  // namespace

double cut_value(const Layer& layer, const Partition& partition) {
  check_bisection_labels(layer, partition);
  double cut = 0.0;
  for (const Edge& e : layer.edges()) {
    if (partition[e.i] != partition[e.j]) cut += e.w;
  }
  return cut;
}

double ratio_cut(const Layer& layer, const Partition& partition) {
  const double cut = cut_value(layer, partition);
  std::size_t n1 = 0;
  for (int label : partition.labels()) n1 += label == 1 ? 1 : 0;
  const std::size_t n2 = partition.size() - n1;
  if (n1 == 0 || n2 == 0) throw DegeneratePartitionError("ratio cut of a partition with an empty part");
  return ratio_from_cut(cut, n1, n2);
}

FiedlerPair fiedler_vector(const Layer& layer, const FiedlerOptions& options) {
  const std::size_t p = layer.node_count();
  if (p < 2) throw SizeError("Fiedler vector needs at least two nodes");
  if (!(options.tol > 0.0)) throw InvalidArgumentError("tolerance must be positive");
  const std::size_t budget =
      options.max_iter > 0
          ? options.max_iter
          : static_cast<std::size_t>(10.0 * static_cast<double>(p) * std::log(static_cast<double>(p))) + 1000;

  const auto n = static_cast<Eigen::Index>(p);
  // The operator lives on the (p-1)-dimensional complement of 1.
  const Eigen::Index krylov_dim = std::min<Eigen::Index>(n - 1, 80);
  double scale = 0.0;
  for (double d : layer.degrees()) scale = std::max(scale, 2.0 * d);
  const double breakdown = 1e-12 * std::max(1.0, scale);

  Vec start = seed_vector(n, 0);
  project_out_ones(start);
  start.normalize();

  Eigen::MatrixXd q(n, krylov_dim);
  Vec w(n);
  Vec ritz(n);
  Vec lr(n);
  std::size_t matvecs = 0;
  double residual = std::numeric_limits<double>::infinity();
  int salt = 0;

  while (true) {
    Vec alpha = Vec::Zero(krylov_dim);
    Vec beta = Vec::Zero(krylov_dim);
    q.col(0) = start;
    Eigen::Index m = 0;
    for (Eigen::Index k = 0; k < krylov_dim; ++k) {
      apply_laplacian(layer, q.col(k), w);
      ++matvecs;
      alpha[k] = q.col(k).dot(w);
      w -= alpha[k] * q.col(k);
      if (k > 0) w -= beta[k - 1] * q.col(k - 1);
      reorthogonalise(q, k + 1, w);
      m = k + 1;
      if (m == krylov_dim) break;
      double b = w.norm();
      if (b <= breakdown) {
        // Invariant subspace reached early: continue from a fresh direction
        // with a zero coupling so the tridiagonal matrix splits.
        b = 0.0;
        w = seed_vector(n, ++salt);
        reorthogonalise(q, k + 1, w);
        const double fresh = w.norm();
        if (fresh <= breakdown) break;
        w /= fresh;
      } else {
        w /= b;
      }
      beta[k] = b;
      q.col(k + 1) = w;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    Vec diag = alpha.head(m);
    Vec sub = m > 1 ? Vec(beta.head(m - 1)) : Vec();
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    ritz.noalias() = q.leftCols(m) * tri.eigenvectors().col(0);
    project_out_ones(ritz);
    ritz.normalize();

    apply_laplacian(layer, ritz, lr);
    ++matvecs;
    const double lambda = ritz.dot(lr);
    residual = (lr - lambda * ritz).norm();
    if (residual <= options.tol * std::max(1.0, lambda)) {
      FiedlerPair out;
      out.value = std::max(0.0, lambda);
      out.iterations = matvecs;
      out.residual = residual;
      Eigen::Index pivot = 0;
      const double cutoff = 1e-12 * ritz.cwiseAbs().maxCoeff();
      while (pivot < n && std::abs(ritz[pivot]) <= cutoff) ++pivot;
      if (pivot < n && ritz[pivot] < 0.0) ritz = -ritz;
      out.vector.assign(ritz.data(), ritz.data() + n);
      return out;
    }
    if (matvecs >= budget) {
      throw ConvergenceError("Fiedler iteration did not converge within " + std::to_string(budget) +
                                 " matrix-vector products (residual " + std::to_string(residual) + ")",
                             residual);
    }
    start = ritz;
  }
}

std::string_view to_string(BisectionMethod method) {
  switch (method) {
    case BisectionMethod::kSpectralSweep:
      return "spectral-sweep";
    case BisectionMethod::kComponentSplit:
      return "component-split";
  }
  return "unknown";
}

BisectionResult spectral_bisect(const Layer& layer, const FiedlerOptions& options) {
  const std::size_t p = layer.node_count();
  if (p < 2) throw SizeError("bisection needs at least two nodes, got " + std::to_string(p));

  auto components = connected_components(layer);
  if (components.size() > 1) {
    std::stable_sort(components.begin(), components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<int> labels(p, 1);
    std::size_t sizes[2] = {0, 0};
    for (const auto& comp : components) {
      const int part = sizes[1] < sizes[0] ? 1 : 0;
      for (NodeIndex v : comp) labels[v] = part + 1;
      sizes[part] += comp.size();
    }
    BisectionResult out;
    out.partition = Partition(std::move(labels));
    out.objective_value = ratio_cut(layer, out.partition);
    out.method = BisectionMethod::kComponentSplit;
    return out;
  }

  const FiedlerPair fiedler = fiedler_vector(layer, options);
  std::vector<NodeIndex> order(p);
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    return fiedler.vector[a] < fiedler.vector[b];
  });

  std::vector<char> in_prefix(p, 0);
  double cut = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_k = 1;
  auto imbalance = [p](std::size_t k) { return k * 2 > p ? k * 2 - p : p - k * 2; };
  for (std::size_t k = 1; k < p; ++k) {
    const NodeIndex v = order[k - 1];
    double to_prefix = 0.0;
    for (const Neighbor& nb : layer.neighbors(v)) {
      if (in_prefix[nb.node]) to_prefix += nb.weight;
    }
    cut += layer.degree(v) - 2.0 * to_prefix;
    in_prefix[v] = 1;
    const double value = ratio_from_cut(std::max(0.0, cut), k, p - k);
    const double slack = 1e-12 * std::max(1.0, std::abs(best));
    if (value < best - slack) {
      best = value;
      best_k = k;
    } else if (value <= best + slack && imbalance(k) < imbalance(best_k)) {
      best = std::min(best, value);
      best_k = k;
    }
  }

  std::vector<int> labels(p, 2);
  for (std::size_t k = 0; k < best_k; ++k) labels[order[k]] = 1;
  BisectionResult out;
  out.partition = Partition(std::move(labels));
  out.objective_value = ratio_cut(layer, out.partition);
  out.fiedler_value = fiedler.value;
  out.method = BisectionMethod::kSpectralSweep;
  return out;
}

}  // namespace mlpareto
