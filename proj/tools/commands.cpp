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

#include "commands.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "mlpareto/analysis.hpp"
#include "mlpareto/errors.hpp"
#include "mlpareto/graph.hpp"
#include "mlpareto/io.hpp"
#include "mlpareto/pareto.hpp"
#include "mlpareto/spectral.hpp"

namespace mlpareto::cli {

namespace fs = std::filesystem;

namespace {

template <typename Writer>
void emit(const fs::path& path, Writer&& writer) {
  std::ostringstream buf;
  writer(buf);
  io::write_file_atomic(path, buf.str());
}

void require_path(const fs::path& path, const char* flag) {
  if (path.empty()) throw InvalidArgumentError(std::string("missing required ") + flag);
}

std::string day_file(int day, const char* kind) {
  return "day" + std::to_string(day) + "." + kind + ".tsv";
}

MultiLayerGraph load_pair(const fs::path& first, const fs::path& second,
                          std::optional<std::vector<std::string>> names) {
  const io::EdgeList e1 = io::read_edge_list(first);
  const io::EdgeList e2 = io::read_edge_list(second);
  if (e1.declared_nodes && e2.declared_nodes && *e1.declared_nodes != *e2.declared_nodes) {
    throw DimensionError("layer files declare different node counts (" +
                         std::to_string(*e1.declared_nodes) + " vs " +
                         std::to_string(*e2.declared_nodes) + ")");
  }
  std::size_t p = std::max(e1.node_count(), e2.node_count());
  if (names) {
    if (names->size() < p) {
      throw DimensionError("name map lists " + std::to_string(names->size()) +
                           " nodes but the layers use " + std::to_string(p));
    }
    p = names->size();
  }
  std::vector<Layer> layers;
  layers.emplace_back(first.stem().string(), p, e1.edges);
  layers.emplace_back(second.stem().string(), p, e2.edges);
  return MultiLayerGraph(p, std::move(layers), std::move(names));
}

Partition detect_partition(const MultiLayerGraph& g, const WalkResult& walk, const RunConfig& config) {
  if (config.max_depth <= 1) return walk.front.selected_candidate().partition;
  RecursionOptions options;
  options.max_depth = config.max_depth;
  options.min_size = config.min_size;
  return recursive_communities(g, options);
}

void check_selection(const RunConfig& config) {
  if (config.selection != "midpoint") {
    throw InvalidArgumentError("unknown selection rule '" + config.selection + "'");
  }
}

}  // namespace

int cmd_build_layers(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_path(config.events, "--events");
  require_path(config.out_dir, "--out");
  if (config.window < 2) throw InvalidArgumentError("--window must be at least 2");

  const IngestResult data = ingest_events(config.events, config.max_error_rate);
  if (!data.malformed_lines.empty()) {
    err << "warning: skipped " << data.malformed_lines.size() << " malformed line(s)\n";
  }
  fs::create_directories(config.out_dir);
  emit(config.out_dir / "tags.tsv", [&](std::ostream& os) { io::write_names(os, data.tags); });

  for (int day = 0; day < data.day_count; ++day) {
    const Layer user = build_user_layer(data.events, day, data.tags);
    emit(config.out_dir / day_file(day, "user"), [&](std::ostream& os) { io::write_layer(os, user); });
    out << "day " << day << "\tnodes " << data.tags.size() << "\tuser_edges " << user.edge_count();
    if (day >= config.window - 1) {
      const Layer volume = build_volume_layer(data.volumes, day, config.window, config.z_threshold);
      emit(config.out_dir / day_file(day, "volume"),
           [&](std::ostream& os) { io::write_layer(os, volume); });
      out << "\tvolume_edges " << volume.edge_count();
    } else {
      out << "\tvolume_edges -";
    }
    out << '\n';
  }
  out << data.day_count << " days\n";
  return 0;
}

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_path(config.layer1, "--layer1");
  require_path(config.layer2, "--layer2");
  require_path(config.front, "--front");
  require_path(config.partition, "--partition");
  check_selection(config);

  std::optional<std::vector<std::string>> names;
  if (!config.names.empty()) names = io::read_names(config.names);
  const MultiLayerGraph g = load_pair(config.layer1, config.layer2, std::move(names));
  const WalkResult walk = pareto_walk(g);
  const Partition chosen = detect_partition(g, walk, config);

  emit(config.front, [&](std::ostream& os) { io::write_front(os, walk.front); });
  emit(config.partition, [&](std::ostream& os) { io::write_partition(os, chosen); });

  const FrontCandidate& sel = walk.front.selected_candidate();
  out << "nodes " << g.node_count() << "\twalk " << walk.visited.size() << "\tfront "
      << walk.front.candidates.size() << "\tselected_step " << sel.step_index << "\tf1 "
      << io::format_fixed(sel.objectives.f1) << "\tf2 " << io::format_fixed(sel.objectives.f2)
      << "\tparts " << chosen.part_count() << '\n';
  return 0;
}

namespace {

struct DayResult {
  Partition user;
  Partition volume;
  Partition combined;
  std::size_t nodes = 0;
};

DayResult analyse_day(const fs::path& dir, int day, const RunConfig& config) {
  const MultiLayerGraph g =
      load_pair(dir / day_file(day, "user"), dir / day_file(day, "volume"), std::nullopt);
  DayResult r;
  r.nodes = g.node_count();
  r.user = spectral_bisect(g.layer(0)).partition;
  r.volume = spectral_bisect(g.layer(1)).partition;
  const WalkResult walk = pareto_walk(g);
  r.combined = detect_partition(g, walk, config);
  return r;
}

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_path(config.dir, "--dir");
  require_path(config.out_dir, "--out");
  check_selection(config);
  if (!fs::is_directory(config.dir)) throw IoError("not a directory: " + config.dir.string());

  std::map<int, std::set<std::string>> found;
  const std::regex pattern(R"(day(\d+)\.(user|volume)\.tsv)");
  for (const auto& entry : fs::directory_iterator(config.dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, m, pattern)) found[std::stoi(m[1].str())].insert(m[2].str());
  }

  int first = 0, last = -1;
  if (config.first_day) {
    first = *config.first_day;
  } else {
    auto it = std::find_if(found.begin(), found.end(), [](const auto& kv) { return kv.second.size() == 2; });
    if (it == found.end()) {
      err << "error: no day has both a user and a volume layer in " << config.dir.string() << '\n';
      return 1;
    }
    first = it->first;
  }
  last = config.last_day ? *config.last_day : (found.empty() ? -1 : found.rbegin()->first);
  if (last < first) {
    err << "error: empty day range\n";
    return 1;
  }

  std::vector<std::string> gaps;
  for (int day = first; day <= last; ++day) {
    for (const char* kind : {"user", "volume"}) {
      if (!found[day].contains(kind)) gaps.push_back(day_file(day, kind));
    }
  }
  if (!gaps.empty()) {
    err << "error: missing day files:";
    for (const auto& g : gaps) err << ' ' << g;
    err << '\n';
    return 1;
  }
  if (!found.empty() && found.begin()->first < first) {
    err << "note: skipping days before " << first << " (incomplete layer pairs)\n";
  }

  const int day_count = last - first + 1;
  std::vector<DayResult> results(static_cast<std::size_t>(day_count));
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  for (int base = 0; base < day_count; base += static_cast<int>(workers)) {
    std::vector<std::future<DayResult>> batch;
    const int stop = std::min(day_count, base + static_cast<int>(workers));
    for (int k = base; k < stop; ++k) {
      batch.push_back(std::async(std::launch::async, analyse_day, std::cref(config.dir), first + k,
                                 std::cref(config)));
    }
    for (int k = base; k < stop; ++k) results[static_cast<std::size_t>(k)] = batch[static_cast<std::size_t>(k - base)].get();
  }

  fs::create_directories(config.out_dir);
  std::vector<int> day_ids;
  std::vector<Partition> user, volume, combined;
  for (int k = 0; k < day_count; ++k) {
    const int day = first + k;
    const DayResult& r = results[static_cast<std::size_t>(k)];
    day_ids.push_back(day);
    user.push_back(r.user);
    volume.push_back(r.volume);
    combined.push_back(r.combined);
    const std::string stem = "day" + std::to_string(day);
    emit(config.out_dir / (stem + ".user.partition.tsv"), [&](std::ostream& os) { io::write_partition(os, r.user); });
    emit(config.out_dir / (stem + ".volume.partition.tsv"), [&](std::ostream& os) { io::write_partition(os, r.volume); });
    emit(config.out_dir / (stem + ".combined.partition.tsv"), [&](std::ostream& os) { io::write_partition(os, r.combined); });
    out << "day " << day << "\tnodes " << r.nodes << "\tcombined_parts " << r.combined.part_count() << '\n';
  }

  const std::pair<const char*, const std::vector<Partition>*> sets[] = {
      {"user", &user}, {"volume", &volume}, {"combined", &combined}};
  for (const auto& [name, parts] : sets) {
    const AriMatrix m = ari_matrix(*parts, day_ids);
    emit(config.out_dir / (std::string(name) + ".ari.csv"), [&](std::ostream& os) { io::write_ari_csv(os, m); });
    emit(config.out_dir / (std::string(name) + ".ari.pgm"), [&](std::ostream& os) { io::write_ari_pgm(os, m); });
  }
  out << day_count << " days\n";
  return 0;
}

int cmd_ari(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_path(config.a, "first partition");
  require_path(config.b, "second partition");
  const Partition a = io::read_partition(config.a);
  const Partition b = io::read_partition(config.b);
  if (a.size() != b.size()) {
    throw DimensionError("partitions cover different node sets (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + " nodes)");
  }
  out << io::format_fixed(adjusted_rand_index(a, b)) << '\n';
  return 0;
}

int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_path(config.out_dir, "--out");
  if (config.nodes < 2) throw InvalidArgumentError("--nodes must be at least 2");
  if (config.clusters < 1 || static_cast<std::size_t>(config.clusters) > config.nodes) {
    throw InvalidArgumentError("--clusters must be between 1 and --nodes");
  }
  SyntheticSpec spec;
  spec.p = config.nodes;
  spec.layers[0] = {config.p_in, config.p_out};
  spec.layers[1] = {config.p_in2.value_or(config.p_in), config.p_out2.value_or(config.p_out)};
  const Partition base = block_partition(config.nodes, config.clusters);

  // Validate before touching the filesystem.
  spec.planted = base;
  spec.seed = config.seed;
  if (config.days <= 0) {
    const MultiLayerGraph g = generate_synthetic(spec);
    fs::create_directories(config.out_dir);
    emit(config.out_dir / "layer1.tsv", [&](std::ostream& os) { io::write_layer(os, g.layer(0)); });
    emit(config.out_dir / "layer2.tsv", [&](std::ostream& os) { io::write_layer(os, g.layer(1)); });
    emit(config.out_dir / "planted.tsv", [&](std::ostream& os) { io::write_partition(os, base); });
    out << "nodes " << g.node_count() << "\tlayer1_edges " << g.layer(0).edge_count() << "\tlayer2_edges "
        << g.layer(1).edge_count() << '\n';
    return 0;
  }

  generate_synthetic(spec);
  fs::create_directories(config.out_dir);
  const Partition shifted = interleaved_partition(config.nodes, config.clusters);
  for (int day = 0; day < config.days; ++day) {
    const bool after = config.switch_day && day >= *config.switch_day;
    spec.planted = after ? shifted : base;
    spec.seed = day_seed(config.seed, day);
    const MultiLayerGraph g = generate_synthetic(spec);
    emit(config.out_dir / day_file(day, "user"), [&](std::ostream& os) { io::write_layer(os, g.layer(0)); });
    emit(config.out_dir / day_file(day, "volume"), [&](std::ostream& os) { io::write_layer(os, g.layer(1)); });
    emit(config.out_dir / day_file(day, "planted"), [&](std::ostream& os) { io::write_partition(os, spec.planted); });
    out << "day " << day << "\tnodes " << g.node_count() << "\tuser_edges " << g.layer(0).edge_count()
        << "\tvolume_edges " << g.layer(1).edge_count() << '\n';
  }
  out << config.days << " days\n";
  return 0;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "build-layers") return cmd_build_layers(config, out, err);
    if (config.subcommand == "detect") return cmd_detect(config, out, err);
    if (config.subcommand == "sweep") return cmd_sweep(config, out, err);
    if (config.subcommand == "ari") return cmd_ari(config, out, err);
    if (config.subcommand == "synth") return cmd_synth(config, out, err);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace mlpareto::cli
