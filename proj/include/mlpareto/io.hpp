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

#ifndef MLPARETO_IO_HPP
#define MLPARETO_IO_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlpareto/analysis.hpp"
#include "mlpareto/graph.hpp"
#include "mlpareto/pareto.hpp"

namespace mlpareto::io {

// Fixed six-digit decimal; "-0.000000" is printed as "0.000000" and
// infinities as "inf".
std::string format_fixed(double value);

// Edge list: `i<TAB>j<TAB>w` per line (w may be omitted, meaning 1). Lines
// starting with '#' are headers; `# nodes<TAB>p` declares the node count.
struct EdgeList {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared_nodes;
  // max endpoint + 1, or 0 without edges.
  std::size_t implied_nodes = 0;

  std::size_t node_count() const;
};

EdgeList read_edge_list(std::istream& in);
EdgeList read_edge_list(const std::filesystem::path& path);
void write_layer(std::ostream& out, const Layer& layer);

// `index<TAB>name`, indices 0..p-1 each exactly once.
std::vector<std::string> read_names(std::istream& in);
std::vector<std::string> read_names(const std::filesystem::path& path);
void write_names(std::ostream& out, std::span<const std::string> names);

// `index<TAB>label`, indices 0..p-1 each exactly once.
Partition read_partition(std::istream& in);
Partition read_partition(const std::filesystem::path& path);
void write_partition(std::ostream& out, const Partition& partition);

// `#step<TAB>f1<TAB>f2<TAB>selected` then one row per front candidate, with
// selected = 1 on the chosen row.
void write_front(std::ostream& out, const ParetoFront& front);

// D rows of D comma-separated fixed six-digit values.
void write_ari_csv(std::ostream& out, const AriMatrix& matrix);

// ASCII "P2" greymap, one pixel per cell, ARI -1 -> 0 and +1 -> 255.
void write_ari_pgm(std::ostream& out, const AriMatrix& matrix);

// Writes `content` to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace mlpareto::io

#endif  // MLPARETO_IO_HPP
