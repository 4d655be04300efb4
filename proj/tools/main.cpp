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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using mlpareto::cli::RunConfig;
  RunConfig config;

  CLI::App app{"Two-layer community detection via Pareto-front walks"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build-layers", "Build per-day user and volume layers from events");
  build->add_option("--events", config.events, "Events TSV (day, user, tag)")->required();
  build->add_option("--out", config.out_dir, "Output directory")->required();
  build->add_option("--window", config.window, "Correlation window in days")->capture_default_str();
  build->add_option("--z-threshold", config.z_threshold, "Threshold on atanh(r)")->capture_default_str();
  build->add_option("--max-error-rate", config.max_error_rate, "Tolerated malformed-line fraction")
      ->capture_default_str();

  auto* detect = app.add_subcommand("detect", "Walk the Pareto front between two layers");
  detect->add_option("--layer1", config.layer1, "First layer edge list")->required();
  detect->add_option("--layer2", config.layer2, "Second layer edge list")->required();
  detect->add_option("--names", config.names, "Node name map");
  detect->add_option("--front", config.front, "Front output file")->required();
  detect->add_option("--partition", config.partition, "Partition output file")->required();
  detect->add_option("--selection", config.selection, "Compromise rule")
      ->check(CLI::IsMember({"midpoint"}))
      ->capture_default_str();
  detect->add_option("--max-depth", config.max_depth, "Recursion depth (1 = single bisection)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect->add_option("--min-size", config.min_size, "Smallest part size after recursion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Partition every day and compare days by ARI");
  sweep->add_option("--dir", config.dir, "Directory of dayD.user.tsv / dayD.volume.tsv")->required();
  sweep->add_option("--out", config.out_dir, "Output directory")->required();
  sweep->add_option("--first-day", config.first_day, "First day to include");
  sweep->add_option("--last-day", config.last_day, "Last day to include");
  sweep->add_option("--selection", config.selection, "Compromise rule")
      ->check(CLI::IsMember({"midpoint"}))
      ->capture_default_str();
  sweep->add_option("--max-depth", config.max_depth, "Recursion depth for combined partitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--min-size", config.min_size, "Smallest part size after recursion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* ari = app.add_subcommand("ari", "Adjusted Rand index of two partition files");
  ari->add_option("a", config.a, "First partition file")->required();
  ari->add_option("b", config.b, "Second partition file")->required();

  auto* synth = app.add_subcommand("synth", "Generate planted-partition two-layer graphs");
  synth->add_option("--out", config.out_dir, "Output directory")->required();
  synth->add_option("--nodes", config.nodes, "Node count")->capture_default_str();
  synth->add_option("--clusters", config.clusters, "Planted cluster count")->capture_default_str();
  synth->add_option("--p-in", config.p_in, "Within-cluster edge probability")->capture_default_str();
  synth->add_option("--p-out", config.p_out, "Cross-cluster edge probability")->capture_default_str();
  synth->add_option("--p-in2", config.p_in2, "Layer-2 within probability (defaults to --p-in)");
  synth->add_option("--p-out2", config.p_out2, "Layer-2 cross probability (defaults to --p-out)");
  synth->add_option("--seed", config.seed, "Generator seed")->capture_default_str();
  synth->add_option("--days", config.days, "Emit a day sequence of this length instead");
  synth->add_option("--switch-day", config.switch_day, "First day of the second planted partition");

  CLI11_PARSE(app, argc, argv);
  config.subcommand = app.get_subcommands().front()->get_name();
  return mlpareto::cli::run(config, std::cout, std::cerr);
}
