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

#ifndef MLPARETO_TOOLS_COMMANDS_HPP
#define MLPARETO_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "mlpareto/layers.hpp"

namespace mlpareto::cli {

struct RunConfig {
  std::string subcommand;

  // build-layers
  std::filesystem::path events;
  double max_error_rate = 0.01;
  int window = kDefaultWindow;
  double z_threshold = kDefaultZThreshold;

  // detect
  std::filesystem::path layer1;
  std::filesystem::path layer2;
  std::filesystem::path names;
  std::filesystem::path front;
  std::filesystem::path partition;
  std::string selection = "midpoint";
  int max_depth = 1;
  std::size_t min_size = 1;

  // sweep
  std::filesystem::path dir;
  std::optional<int> first_day;
  std::optional<int> last_day;

  // ari
  std::filesystem::path a;
  std::filesystem::path b;

  // synth
  std::size_t nodes = 40;
  int clusters = 2;
  double p_in = 0.9;
  double p_out = 0.05;
  std::optional<double> p_in2;
  std::optional<double> p_out2;
  std::uint64_t seed = 1;
  int days = 0;
  std::optional<int> switch_day;

  // build-layers, sweep and synth write here.
  std::filesystem::path out_dir;
};

// Each command writes summaries to `out` and diagnostics to `err` and
// returns the process exit status. Library errors propagate as exceptions;
// run() converts them into a message and status 1.
int cmd_build_layers(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ari(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mlpareto::cli

#endif  // MLPARETO_TOOLS_COMMANDS_HPP
