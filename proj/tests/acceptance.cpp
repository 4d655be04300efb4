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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "commands.hpp"
#include "fixtures.hpp"
#include "mlpareto/analysis.hpp"
#include "mlpareto/layers.hpp"
#include "mlpareto/pareto.hpp"
#include "mlpareto/spectral.hpp"
#include "oracles.hpp"

#ifndef MLPARETO_CLI_PATH
#error "MLPARETO_CLI_PATH must name the mlpareto executable"
#endif

namespace {

using namespace mlpareto;
namespace fs = std::filesystem;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-check results; the first failures are kept for the report.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 3) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Verdict verdict() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < notes_.size(); ++k) out << (k ? "; " : "") << notes_[k];
    if (failed_ > 0) {
      out << (notes_.empty() ? "" : "; ") << failed_ << "/" << total_ << " checks failed:";
      for (const auto& f : failures_) out << " [" << f << "]";
    }
    return {failed_ == 0, out.str()};
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << v;
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MultiLayerGraph random_connected_pair(std::mt19937_64& rng, std::size_t p) {
  std::uniform_real_distribution<double> density(0.15, 0.6);
  return MultiLayerGraph(p, {oracle::random_connected_layer(rng, p, density(rng), 3),
                             oracle::random_connected_layer(rng, p, density(rng), 3)});
}

Verdict front_matches_oracle() {
  Checks c;
  std::mt19937_64 rng(101);
  const auto start = std::chrono::steady_clock::now();
  const int instances = 200;
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < instances; ++trial) {
    const std::size_t p = 3 + static_cast<std::size_t>(trial) % 8;
    const MultiLayerGraph g = random_connected_pair(rng, p);
    const WalkResult w = pareto_walk(g);
    nontrivial += w.hamming_distance > 0;

    std::vector<Objectives> objs;
    for (const auto& v : w.visited) objs.push_back(v.objectives);
    const auto expected = oracle::pairwise_front(objs);
    std::vector<std::size_t> got;
    for (const auto& f : nondominated_filter(w.visited)) got.push_back(f.step_index);
    std::sort(got.begin(), got.end());
    c.expect(got == expected, "trial " + std::to_string(trial) + " filter differs from oracle");

    std::vector<std::size_t> front_steps;
    for (const auto& f : w.front.candidates) front_steps.push_back(f.step_index);
    std::sort(front_steps.begin(), front_steps.end());
    c.expect(front_steps == expected, "trial " + std::to_string(trial) + " walk front differs from oracle");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, "runtime " + fmt(elapsed, 2) + " s");
  c.note(std::to_string(instances) + " instances (" + std::to_string(nontrivial) + " with h>0), " +
         fmt(elapsed, 3) + " s");
  return c.verdict();
}

Verdict spectral_quality() {
  Checks c;
  const double bridge = spectral_bisect(oracle::bridge_of_triangles()).objective_value;
  const double path = spectral_bisect(oracle::path_graph(4)).objective_value;
  c.expect(std::abs(bridge - 0.3333) <= 1e-4, "bridge " + fmt(bridge));
  c.expect(std::abs(bridge - oracle::exhaustive_min_ratio_cut(oracle::bridge_of_triangles())) < 1e-12,
           "bridge differs from exhaustive optimum");
  c.expect(path == 0.5, "P4 " + fmt(path, 17));
  c.expect(oracle::exhaustive_min_ratio_cut(oracle::path_graph(4)) == 0.5, "P4 exhaustive optimum");

  std::mt19937_64 rng(202);
  std::size_t optimal = 0;
  const int instances = 500;
  for (int trial = 0; trial < instances; ++trial) {
    const std::size_t p = 2 + static_cast<std::size_t>(trial) % 9;
    const Layer layer = trial % 4 == 0 ? oracle::random_layer(rng, p, 0.3, 3)
                                       : oracle::random_connected_layer(rng, p, 0.35, 3);
    const double got = spectral_bisect(layer).objective_value;
    const double best = oracle::exhaustive_min_ratio_cut(layer);
    c.expect(got >= best - 1e-12, "trial " + std::to_string(trial) + " beats optimum");
    optimal += std::abs(got - best) <= 1e-12;
  }
  c.note("bridge " + fmt(bridge) + ", P4 " + fmt(path) + ", optimal on " + std::to_string(optimal) + "/" +
         std::to_string(instances) + " random p<=10");
  return c.verdict();
}

Verdict walk_structure() {
  Checks c;
  std::mt19937_64 rng(303);
  std::size_t max_h = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = 4 + static_cast<std::size_t>(trial) % 27;
    const MultiLayerGraph g = random_connected_pair(rng, p);
    const WalkResult w = pareto_walk(g);
    const std::string tag = "trial " + std::to_string(trial);
    std::size_t h = 0;
    for (std::size_t i = 0; i < p; ++i) h += w.start.partition[i] != w.aligned_target[i];
    max_h = std::max(max_h, h);
    c.expect(w.hamming_distance == h, tag + " hamming");
    c.expect(w.visited.size() == h + 1, tag + " visited " + std::to_string(w.visited.size()));
    if (w.visited.empty()) continue;
    const double f1_start = ratio_cut(g.layer(0), w.start.partition);
    const double f2_target = ratio_cut(g.layer(1), w.target.partition);
    c.expect(w.visited.front().objectives.f1 == f1_start, tag + " first f1");
    c.expect(w.visited.back().objectives.f2 == f2_target, tag + " last f2");
    c.expect(std::abs(f1_start - oracle::ratio_cut(g.layer(0), {w.start.partition.labels().begin(),
                                                                 w.start.partition.labels().end()})) < 1e-12,
             tag + " first f1 vs oracle");
  }
  c.note("100 instances, p 4..30, max h " + std::to_string(max_h));
  return c.verdict();
}

Verdict ari_correctness() {
  Checks c;
  std::mt19937_64 rng(404);
  double worst = 0.0;
  std::size_t compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t p = 2 + static_cast<std::size_t>(trial) % 29;
    std::uniform_int_distribution<int> k(1, 4);
    const auto a = oracle::random_labels(rng, p, k(rng));
    const auto b = oracle::random_labels(rng, p, k(rng));
    const double want = oracle::ari_pair_counting(a, b);
    const double got = adjusted_rand_index(Partition(a), Partition(b));
    if (!std::isfinite(want)) {
      // Undefined index: both argument orders agree on the convention.
      c.expect(got == adjusted_rand_index(Partition(b), Partition(a)), "degenerate trial asymmetric");
      continue;
    }
    ++compared;
    worst = std::max(worst, std::abs(got - want));
    c.expect(std::abs(got - want) <= 1e-12, "trial " + std::to_string(trial) + " off by " + fmt(got - want, 15));
  }
  const auto x = oracle::random_labels(rng, 25, 3);
  c.expect(adjusted_rand_index(Partition(x), Partition(x)) == 1.0, "identity");
  const double swap = adjusted_rand_index(Partition({1, 1, 2, 2}), Partition({1, 2, 1, 2}));
  c.expect(std::abs(swap + 0.5) <= 1e-12, "[1,1,2,2] vs [1,2,1,2] = " + fmt(swap));

  const Partition base = block_partition(100, 2);
  std::vector<int> shuffled(base.labels().begin(), base.labels().end());
  double sum = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    sum += adjusted_rand_index(base, Partition(shuffled));
  }
  const double mean = sum / 1000.0;
  c.expect(mean > -0.05 && mean < 0.05, "null mean " + fmt(mean));
  c.note(std::to_string(compared) + " oracle pairs, max error " + fmt(worst, 17) + ", null mean " + fmt(mean));
  return c.verdict();
}

Verdict threshold_constants() {
  Checks c;
  const double r = std::tanh(1.3859);
  const double folded = 1.95996 / std::sqrt(2.0);
  c.expect(std::abs(r - 0.88196) <= 1e-4, "tanh(1.3859) = " + fmt(r) + ", stated 0.88196");
  c.expect(std::abs(folded - 1.38590) <= 1e-4, "1.95996/sqrt(2) = " + fmt(folded));
  c.expect(std::abs(fisher_z(r) - 1.3859) < 1e-12, "fisher_z round trip");

  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> count(0, 8);
  std::size_t nested_days = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VolumeSeries> series;
    for (int t = 0; t < 30; ++t) {
      VolumeSeries s{"t" + std::to_string(t), {}};
      for (int d = 0; d < 10; ++d) s.counts.push_back(count(rng));
      series.push_back(std::move(s));
    }
    const int day = 4 + trial % 6;
    std::set<std::pair<NodeIndex, NodeIndex>> previous;
    bool first = true;
    bool nested = true;
    for (double z = -2.0; z <= 3.0; z += 0.05) {
      std::set<std::pair<NodeIndex, NodeIndex>> current;
      const Layer layer = build_volume_layer(series, day, kDefaultWindow, z);
      for (const Edge& e : layer.edges()) current.emplace(e.i, e.j);
      if (!first) nested = nested && std::includes(previous.begin(), previous.end(), current.begin(), current.end());
      previous = std::move(current);
      first = false;
    }
    c.expect(nested, "trial " + std::to_string(trial) + " not nested");
    nested_days += nested;
  }
  c.note("tanh(1.3859) = " + fmt(r) + ", 1.95996/sqrt(2) = " + fmt(folded) + ", nested on " +
         std::to_string(nested_days) + "/20");
  return c.verdict();
}

Verdict synthetic_recovery() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  SyntheticSpec spec;
  spec.p = 40;
  spec.planted = block_partition(40, 2);
  spec.layers = {EdgeProbabilities{0.9, 0.05}, EdgeProbabilities{0.9, 0.05}};
  spec.seed = 1;
  const WalkResult clean = pareto_walk(generate_synthetic(spec));
  const double clean_ari = adjusted_rand_index(clean.front.selected_candidate().partition, spec.planted);
  c.expect(clean_ari >= 0.9, "clean midpoint ARI " + fmt(clean_ari));

  spec.layers[1] = EdgeProbabilities{0.3, 0.3};
  const MultiLayerGraph noisy = generate_synthetic(spec);
  const WalkResult mixed = pareto_walk(noisy);
  const double combined_ari = adjusted_rand_index(mixed.front.selected_candidate().partition, spec.planted);
  const double noise_ari = adjusted_rand_index(spectral_bisect(noisy.layer(1)).partition, spec.planted);
  c.expect(combined_ari >= 0.8, "combined ARI " + fmt(combined_ari));
  c.expect(noise_ari <= 0.3, "noisy layer ARI " + fmt(noise_ari));

  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "runtime " + fmt(elapsed, 2) + " s");
  c.note("clean " + fmt(clean_ari) + ", combined " + fmt(combined_ari) + " (h " +
         std::to_string(mixed.hamming_distance) + ", front " + std::to_string(mixed.front.candidates.size()) +
         "), noisy layer " + fmt(noise_ari) + ", " + fmt(elapsed, 3) + " s");
  return c.verdict();
}

std::vector<std::vector<double>> read_csv(const fs::path& path) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(fixture::read_text(path));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

Verdict temporal_blocks() {
  Checks c;
  fixture::ScratchDir dir("acceptance_sweep");
  std::ostringstream out, err;
  cli::RunConfig synth;
  synth.subcommand = "synth";
  synth.days = 6;
  synth.switch_day = 3;
  synth.out_dir = dir / "days";
  c.expect(cli::run(synth, out, err) == 0, "synth: " + err.str());
  cli::RunConfig sweep;
  sweep.subcommand = "sweep";
  sweep.dir = dir / "days";
  sweep.out_dir = dir / "sweep";
  c.expect(cli::run(sweep, out, err) == 0, "sweep: " + err.str());

  const auto m = read_csv(dir / "sweep" / "combined.ari.csv");
  c.expect(m.size() == 6, "matrix has " + std::to_string(m.size()) + " rows");
  double within = 1.0, across = -1.0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = 0; t < m[s].size(); ++t) {
      if ((s < 3) == (t < 3)) {
        within = std::min(within, m[s][t]);
      } else {
        across = std::max(across, m[s][t]);
      }
    }
  }
  c.expect(within >= 0.9, "min within-block " + fmt(within));
  c.expect(across <= 0.3, "max cross-block " + fmt(across));
  c.note("min within-block " + fmt(within) + ", max cross-block " + fmt(across));
  return c.verdict();
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

// Runs the real executable with `args` inside `run_dir`, capturing both
// streams; returns the exit status.
int run_cli(const fs::path& run_dir, const std::string& args) {
  const std::string cmd = "cd " + quote(run_dir) + " && " + quote(MLPARETO_CLI_PATH) + " " + args +
                          " > stdout.txt 2> stderr.txt";
  const int raw = std::system(cmd.c_str());
  return raw == -1 ? -1 : WEXITSTATUS(raw);
}

std::string synthetic_events() {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> tag(0, 11), user(0, 9), extra(0, 3);
  std::ostringstream out;
  out << "# day\tuser\ttag\n";
  for (int day = 0; day < 8; ++day) {
    for (int k = 0; k < 40; ++k) out << day << "\tu" << user(rng) << "\t#t" << tag(rng) << '\n';
    // A pair of tags that rise and fall together.
    for (int k = 0; k < day % 4 + extra(rng); ++k) out << day << "\tw\t#t0\n" << day << "\tw\t#t1\n";
  }
  return out.str();
}

Verdict cli_determinism() {
  Checks c;
  fixture::ScratchDir root("acceptance_determinism");
  fixture::write_text(root / "fixtures" / "events.tsv", synthetic_events());
  fixture::write_text(root / "fixtures" / "a.tsv", "0\t1\n1\t1\n2\t2\n3\t2\n4\t1\n");
  fixture::write_text(root / "fixtures" / "b.tsv", "0\t1\n1\t2\n2\t1\n3\t2\n4\t2\n");
  {
    std::ostringstream out, err;
    cli::RunConfig days;
    days.subcommand = "synth";
    days.days = 4;
    days.switch_day = 2;
    days.nodes = 30;
    days.out_dir = root / "fixtures" / "days";
    c.expect(cli::run(days, out, err) == 0, "fixture days");
    cli::RunConfig pair;
    pair.subcommand = "synth";
    pair.p_in2 = 0.5;
    pair.p_out2 = 0.2;
    pair.out_dir = root / "fixtures" / "pair";
    c.expect(cli::run(pair, out, err) == 0, "fixture pair");
  }
  const fs::path fx = root / "fixtures";
  const std::vector<std::pair<std::string, std::string>> commands{
      {"build-layers", "build-layers --events " + quote(fx / "events.tsv") + " --out layers"},
      {"detect", "detect --layer1 " + quote(fx / "pair" / "layer1.tsv") + " --layer2 " +
                     quote(fx / "pair" / "layer2.tsv") + " --front front.tsv --partition part.tsv"},
      {"detect --max-depth 3", "detect --layer1 " + quote(fx / "pair" / "layer1.tsv") + " --layer2 " +
                                   quote(fx / "pair" / "layer2.tsv") +
                                   " --front front.tsv --partition part.tsv --max-depth 3"},
      {"sweep", "sweep --dir " + quote(fx / "days") + " --out sweep"},
      {"ari", "ari " + quote(fx / "a.tsv") + " " + quote(fx / "b.tsv")},
      {"synth", "synth --out synth --nodes 50 --clusters 3 --seed 9"},
      {"synth --days", "synth --out synth --days 5 --switch-day 2 --seed 4"},
  };
  std::vector<std::string> identical;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    const auto& [name, args] = commands[k];
    std::vector<std::map<std::string, std::string>> runs;
    for (int rep = 0; rep < 3; ++rep) {
      const fs::path run_dir = root / ("cmd" + std::to_string(k)) / ("run" + std::to_string(rep));
      fs::create_directories(run_dir);
      const int status = run_cli(run_dir, args);
      c.expect(status == 0, name + " exit " + std::to_string(status) + ": " + fixture::read_text(run_dir / "stderr.txt"));
      runs.push_back(fixture::snapshot(run_dir));
    }
    const bool same = runs[0] == runs[1] && runs[1] == runs[2];
    c.expect(same, name + " output differs between runs");
    c.expect(!runs[0]["stdout.txt"].empty(), name + " printed nothing");
    if (same) identical.push_back(name);
  }
  c.note(std::to_string(identical.size()) + "/" + std::to_string(commands.size()) +
         " invocations byte-identical over 3 runs");
  return c.verdict();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 front equals pairwise-domination oracle", front_matches_oracle},
      {"2 spectral bisection quality", spectral_quality},
      {"3 walk structure", walk_structure},
      {"4 ARI correctness", ari_correctness},
      {"5 threshold constants and nesting", threshold_constants},
      {"6 synthetic recovery", synthetic_recovery},
      {"7 temporal block structure", temporal_blocks},
      {"8 CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
