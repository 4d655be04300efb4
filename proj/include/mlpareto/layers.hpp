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

#ifndef MLPARETO_LAYERS_HPP
#define MLPARETO_LAYERS_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlpareto/graph.hpp"

namespace mlpareto {

// Default moving-window length, in days.
inline constexpr int kDefaultWindow = 5;
// Default threshold on atanh(r). Equal to 1.95996 / sqrt(window - 3) for the
// default window: the standard-error scaling is folded into the constant.
inline constexpr double kDefaultZThreshold = 1.3859;
// Correlations are clamped to +-(1 - kCorrelationClamp) before atanh.
inline constexpr double kCorrelationClamp = 1e-12;

// One observed use of `tag` by `user` on `day`.
struct EventRecord {
  int day = 0;
  std::string user;
  std::string tag;
};

// Per-day occurrence counts of one tag.
struct VolumeSeries {
  std::string tag;
  std::vector<std::int64_t> counts;
};

// Co-usage layer for one day: tags i and j are linked when some user used
// both on that day. Node k is tags[k]; events for unknown tags are ignored.
Layer build_user_layer(std::span<const EventRecord> events, int day,
                       std::span<const std::string> tags);

// Sample Pearson correlation over days day-window+1 .. day. Empty when
// either series is constant on the window. Throws InsufficientHistoryError
// when day < window - 1.
std::optional<double> pearson_window(const VolumeSeries& x, const VolumeSeries& y, int day,
                                     int window);

// atanh(r); DomainError for |r| >= 1.
double fisher_z(double r);

// Volume-correlation layer for one day over `series` (node k is series[k]).
// Links i and j when the windowed correlation is defined and
// fisher_z(clamped r) exceeds z_threshold. With a positive threshold this is
// one-sided: negative correlations never link.
Layer build_volume_layer(std::span<const VolumeSeries> series, int day,
                         int window = kDefaultWindow, double z_threshold = kDefaultZThreshold);

struct IngestResult {
  std::vector<EventRecord> events;
  // One series per tag, aligned with `tags`, each of length day_count.
  std::vector<VolumeSeries> volumes;
  // Sorted lexicographically.
  std::vector<std::string> tags;
  // max day + 1; zero for empty input.
  int day_count = 0;
  std::size_t data_lines = 0;
  std::vector<std::size_t> malformed_lines;
};

// Reads `day<TAB>user<TAB>tag` lines; `#` starts a comment line and blank
// lines are skipped. Fields may be separated by any run of spaces or tabs.
// Malformed lines are collected; when they exceed max_error_rate of the data
// lines a FormatError listing their line numbers is thrown.
IngestResult ingest_events(std::istream& in, double max_error_rate = 0.01);
IngestResult ingest_events(const std::filesystem::path& path, double max_error_rate = 0.01);

}  // namespace mlpareto

#endif  // MLPARETO_LAYERS_HPP
