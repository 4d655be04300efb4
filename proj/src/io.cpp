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

#include "mlpareto/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "mlpareto/errors.hpp"

namespace mlpareto::io {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

void throw_malformed(std::string_view what, const std::vector<std::size_t>& bad) {
  std::ostringstream msg;
  msg << "malformed " << what << " (lines";
  for (std::size_t n : bad) msg << ' ' << n;
  msg << ')';
  throw FormatError(msg.str(), bad);
}

// Reads `index<TAB>value` rows into a dense table indexed 0..p-1.
std::vector<std::string> read_indexed(std::istream& in, std::string_view what, bool whole_rest) {
  std::vector<std::pair<std::size_t, std::string>> rows;
  std::vector<std::size_t> bad;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t index = 0;
    std::string value;
    if (whole_rest) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos || !parse_number(std::string_view(line).substr(0, tab), index) ||
          tab + 1 >= line.size()) {
        bad.push_back(line_no);
        continue;
      }
      value = line.substr(tab + 1);
    } else {
      const auto fields = split_ws(line);
      if (fields.size() != 2 || !parse_number(fields[0], index)) {
        bad.push_back(line_no);
        continue;
      }
      value = std::string(fields[1]);
    }
    rows.emplace_back(index, std::move(value));
  }
  if (in.bad()) throw IoError(std::string("error while reading ") + std::string(what));
  if (!bad.empty()) throw_malformed(what, bad);

  std::vector<std::string> table(rows.size());
  std::vector<char> seen(rows.size(), 0);
  for (auto& [index, value] : rows) {
    if (index >= rows.size() || seen[index]) {
      throw FormatError(std::string(what) + " indices must cover 0.." +
                        std::to_string(rows.size()) + "-1 exactly once");
    }
    seen[index] = 1;
    table[index] = std::move(value);
  }
  return table;
}

}  // namespace

std::string format_fixed(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::size_t EdgeList::node_count() const { return declared_nodes.value_or(implied_nodes); }

EdgeList read_edge_list(std::istream& in) {
  EdgeList out;
  std::vector<std::size_t> bad;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (fields.front().starts_with('#')) {
      std::size_t declared = 0;
      // "# nodes<TAB>p" or "#nodes<TAB>p"
      const bool spaced = fields.size() == 3 && fields[0] == "#" && fields[1] == "nodes";
      const bool joined = fields.size() == 2 && fields[0] == "#nodes";
      if ((spaced || joined) && parse_number(fields.back(), declared)) out.declared_nodes = declared;
      continue;
    }
    Edge e;
    bool ok = (fields.size() == 2 || fields.size() == 3) && parse_number(fields[0], e.i) &&
              parse_number(fields[1], e.j);
    if (ok && fields.size() == 3) ok = parse_number(fields[2], e.w);
    if (!ok) {
      bad.push_back(line_no);
      continue;
    }
    out.implied_nodes = std::max({out.implied_nodes, e.i + 1, e.j + 1});
    out.edges.push_back(e);
  }
  if (in.bad()) throw IoError("error while reading edge list");
  if (!bad.empty()) throw_malformed("edge list", bad);
  if (out.declared_nodes && *out.declared_nodes < out.implied_nodes) {
    throw FormatError("edge endpoint exceeds declared node count " +
                      std::to_string(*out.declared_nodes));
  }
  return out;
}

EdgeList read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_layer(std::ostream& out, const Layer& layer) {
  out << "# nodes\t" << layer.node_count() << '\n';
  out << "#i\tj\tw\n";
  for (const Edge& e : layer.edges()) {
    out << e.i << '\t' << e.j << '\t' << format_fixed(e.w) << '\n';
  }
}

std::vector<std::string> read_names(std::istream& in) { return read_indexed(in, "name map", true); }

std::vector<std::string> read_names(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_names(in);
}

void write_names(std::ostream& out, std::span<const std::string> names) {
  for (std::size_t k = 0; k < names.size(); ++k) out << k << '\t' << names[k] << '\n';
}

Partition read_partition(std::istream& in) {
  const auto raw = read_indexed(in, "partition", false);
  std::vector<int> labels;
  labels.reserve(raw.size());
  for (const std::string& text : raw) {
    int label = 0;
    if (!parse_number(std::string_view(text), label) || label < 1) {
      throw FormatError("partition label '" + text + "' is not a positive integer");
    }
    labels.push_back(label);
  }
  return Partition(std::move(labels));
}

Partition read_partition(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_partition(in);
}

void write_partition(std::ostream& out, const Partition& partition) {
  for (std::size_t i = 0; i < partition.size(); ++i) out << i << '\t' << partition[i] << '\n';
}

void write_front(std::ostream& out, const ParetoFront& front) {
  out << "#step\tf1\tf2\tselected\n";
  for (std::size_t k = 0; k < front.candidates.size(); ++k) {
    const FrontCandidate& c = front.candidates[k];
    out << c.step_index << '\t' << format_fixed(c.objectives.f1) << '\t'
        << format_fixed(c.objectives.f2) << '\t' << (k == front.selected ? 1 : 0) << '\n';
  }
}

void write_ari_csv(std::ostream& out, const AriMatrix& matrix) {
  const std::size_t d = matrix.size();
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      if (t > 0) out << ',';
      out << format_fixed(matrix(s, t));
    }
    out << '\n';
  }
}

void write_ari_pgm(std::ostream& out, const AriMatrix& matrix) {
  const std::size_t d = matrix.size();
  out << "P2\n" << d << ' ' << d << "\n255\n";
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      const double v = std::clamp(matrix(s, t), -1.0, 1.0);
      const long level = std::lround((v + 1.0) * 127.5);
      if (t > 0) out << ' ';
      out << level;
    }
    out << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + path.string());
  }
}

}  // namespace mlpareto::io
