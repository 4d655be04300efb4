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

#ifndef MLPARETO_SPECTRAL_HPP
#define MLPARETO_SPECTRAL_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "mlpareto/graph.hpp"

namespace mlpareto {

// Sum of weights of edges whose endpoints carry different labels.
// Requires labels in {1, 2}; throws DimensionError on length mismatch.
double cut_value(const Layer& layer, const Partition& partition);

// (1/2) * (cut/|part 1| + cut/|part 2|). Throws DegeneratePartitionError
// when a part is empty.
double ratio_cut(const Layer& layer, const Partition& partition);

struct FiedlerOptions {
  double tol = 1e-8;
  // Matrix-vector product budget; 0 selects 10 p log(p) + 1000.
  std::size_t max_iter = 0;
};

struct FiedlerPair {
  double value = 0.0;
  std::vector<double> vector;
  // Matrix-vector products spent.
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Second-smallest eigenpair of L = D - A for a connected layer.
//
// Restarted Lanczos with full reorthogonalisation, run on the complement of
// the constant vector so the trivial null vector never enters the Krylov
// space. The start vector is sin(i + 1), projected and normalised, so results
// are reproducible bit for bit. The returned vector has unit norm, is
// orthogonal to the all-ones vector, and its first non-negligible entry is
// positive. Throws ConvergenceError when the residual
// ||Lv - lambda v|| <= tol * max(1, lambda) is not reached within the budget.
FiedlerPair fiedler_vector(const Layer& layer, const FiedlerOptions& options = {});

enum class BisectionMethod { kSpectralSweep, kComponentSplit };

std::string_view to_string(BisectionMethod method);

struct BisectionResult {
  Partition partition;
  double objective_value = 0.0;
  // Zero on the component-split path.
  double fiedler_value = 0.0;
  BisectionMethod method = BisectionMethod::kSpectralSweep;
};

// Ratio-cut bisection of a single layer.
//
// Connected layers: sweep cut over nodes sorted by Fiedler coordinate (stable
// on node index), best prefix wins, ties go to the more balanced split and
// then to the shorter prefix. The prefix is labelled 1.
// Disconnected layers: components, largest first, are dealt greedily into
// the currently smaller part, which yields a zero cut.
// Throws SizeError for fewer than two nodes.
BisectionResult spectral_bisect(const Layer& layer, const FiedlerOptions& options = {});

}  // namespace mlpareto

#endif  // MLPARETO_SPECTRAL_HPP
