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

#include "mlpareto/layers.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "mlpareto/errors.hpp"

namespace mlpareto {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
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

}  // namespace

Layer build_user_layer(std::span<const EventRecord> events, int day,
                       std::span<const std::string> tags) {
  if (tags.empty()) throw InvalidArgumentError("tag list is empty");
  std::unordered_map<std::string_view, NodeIndex> index;
  for (NodeIndex k = 0; k < tags.size(); ++k) {
    if (!index.emplace(tags[k], k).second) {
      throw InvalidArgumentError("duplicate tag '" + tags[k] + "'");
    }
  }

  std::map<std::string_view, std::set<NodeIndex>> by_user;
  for (const EventRecord& ev : events) {
    if (ev.day != day) continue;
    auto it = index.find(ev.tag);
    if (it == index.end()) continue;
    by_user[ev.user].insert(it->second);
  }

  std::set<std::pair<NodeIndex, NodeIndex>> pairs;
  for (const auto& [user, used] : by_user) {
    for (auto a = used.begin(); a != used.end(); ++a) {
      for (auto b = std::next(a); b != used.end(); ++b) pairs.emplace(*a, *b);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [i, j] : pairs) edges.push_back({i, j, 1.0});
  return Layer("user", tags.size(), edges);
}

std::optional<double> pearson_window(const VolumeSeries& x, const VolumeSeries& y, int day,
                                     int window) {
  if (window < 2) throw InvalidArgumentError("correlation window must be at least 2 days");
  if (day < window - 1) {
    throw InsufficientHistoryError("day " + std::to_string(day) + " has fewer than " +
                                   std::to_string(window) + " days of history");
  }
  const auto last = static_cast<std::size_t>(day);
  if (last >= x.counts.size() || last >= y.counts.size()) {
    throw DimensionError("day " + std::to_string(day) + " is past the end of the volume series");
  }
  const std::size_t first = last + 1 - static_cast<std::size_t>(window);
  const double n = static_cast<double>(window);

  double mx = 0.0, my = 0.0;
  for (std::size_t t = first; t <= last; ++t) {
    mx += static_cast<double>(x.counts[t]);
    my += static_cast<double>(y.counts[t]);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t t = first; t <= last; ++t) {
    const double dx = static_cast<double>(x.counts[t]) - mx;
    const double dy = static_cast<double>(y.counts[t]) - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double fisher_z(double r) {
  if (!(std::abs(r) < 1.0)) {
    throw DomainError("Fisher transform needs |r| < 1, got " + std::to_string(r));
  }
  return std::atanh(r);
}

Layer build_volume_layer(std::span<const VolumeSeries> series, int day, int window,
                         double z_threshold) {
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i < series.size(); ++i) {
    for (NodeIndex j = i + 1; j < series.size(); ++j) {
      const auto r = pearson_window(series[i], series[j], day, window);
      if (!r) continue;
      const double bounded = std::clamp(*r, -1.0 + kCorrelationClamp, 1.0 - kCorrelationClamp);
      if (fisher_z(bounded) > z_threshold) edges.push_back({i, j, 1.0});
    }
  }
  return Layer("volume", series.size(), edges);
}

IngestResult ingest_events(std::istream& in, double max_error_rate) {
  IngestResult out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().starts_with('#')) continue;
    ++out.data_lines;

    int day = -1;
    bool ok = fields.size() == 3;
    if (ok) {
      const auto text = fields[0];
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), day);
      ok = ec == std::errc() && ptr == text.data() + text.size() && day >= 0;
    }
    if (!ok) {
      out.malformed_lines.push_back(line_no);
      continue;
    }
    out.events.push_back({day, std::string(fields[1]), std::string(fields[2])});
  }
  if (in.bad()) throw IoError("error while reading events");

  if (!out.malformed_lines.empty() &&
      static_cast<double>(out.malformed_lines.size()) >
          max_error_rate * static_cast<double>(out.data_lines)) {
    std::ostringstream msg;
    msg << out.malformed_lines.size() << " of " << out.data_lines
        << " event lines are malformed (lines";
    for (std::size_t n : out.malformed_lines) msg << ' ' << n;
    msg << ')';
    throw FormatError(msg.str(), out.malformed_lines);
  }

  std::map<std::string, std::size_t> tag_index;
  for (const EventRecord& ev : out.events) {
    tag_index.emplace(ev.tag, 0);
    out.day_count = std::max(out.day_count, ev.day + 1);
  }
  std::size_t k = 0;
  for (auto& [tag, idx] : tag_index) {
    idx = k++;
    out.tags.push_back(tag);
    out.volumes.push_back({tag, std::vector<std::int64_t>(static_cast<std::size_t>(out.day_count), 0)});
  }
  for (const EventRecord& ev : out.events) {
    ++out.volumes[tag_index[ev.tag]].counts[static_cast<std::size_t>(ev.day)];
  }
  return out;
}

IngestResult ingest_events(const std::filesystem::path& path, double max_error_rate) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open events file " + path.string());
  return ingest_events(in, max_error_rate);
}

}  // namespace mlpareto
