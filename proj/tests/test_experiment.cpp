// Copyright 2026 The mqs Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mqs/experiment.hpp"
#include "mqs/io.hpp"
#include "mqs/mapper.hpp"

using namespace mqs;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.circuits = {{"ghz", 40, 0, {}}, {"qvol", 40, 6, {}}};
  c.qubits_per_core = 16;
  c.topologies = {TopologyKind::Line, TopologyKind::Star, TopologyKind::AllToAll};
  c.links_min = 1;
  c.links_max = 3;
  c.repetitions = 2;
  c.delta_improv = {1, 100};
  c.threads = 2;
  return c;
}

}  // namespace

TEST(CircuitSpec, ParseAndRender) {
  EXPECT_EQ(parse_circuit_spec("qft:256"), (CircuitSpec{"qft", 256, 0, {}}));
  EXPECT_EQ(parse_circuit_spec("qvol:64:8"), (CircuitSpec{"qvol", 64, 8, {}}));
  EXPECT_EQ(parse_circuit_spec("file:a/b.qasm").path, "a/b.qasm");
  for (const char* s : {"ghz:8", "qvol:64:8", "cuccaro:10", "file:x.txt"}) {
    EXPECT_EQ(to_string(parse_circuit_spec(s)), s);
  }
  EXPECT_THROW(parse_circuit_spec("bogus:3"), ConfigError);
  EXPECT_THROW(parse_circuit_spec("qft"), ConfigError);
  EXPECT_EQ(make_circuit(parse_circuit_spec("cuccaro:256"), 1).num_qubits, 256);
  EXPECT_EQ(make_circuit(parse_circuit_spec("qvol:16"), 1).gates.size(), 16u * 8u * 11u);
}

TEST(Config, HardwareDefaults) {
  const ExperimentConfig c;
  EXPECT_EQ(c.qubits_per_core, 64);
  EXPECT_EQ(c.timing.link_width, 10);
  EXPECT_EQ(c.timing.clock_freq_hz, 200e6);
  EXPECT_EQ(c.timing.t_epr, 130);
  EXPECT_EQ(c.noise.e_epr, 9e-3);
  EXPECT_EQ(c.repetitions, 5);
  EXPECT_EQ(c.links_min, 1);
  EXPECT_EQ(c.links_max, 5);
}

TEST(Config, RoundTrip) {
  ExperimentConfig c = small_config();
  c.timing.t_2q = 12.5;
  c.noise.e_1q = 1e-5;
  c.seed = 123456789012345ULL;
  c.output_dir = "out dir";
  EXPECT_EQ(parse_config(render_config(c)), c);
  EXPECT_EQ(parse_config(render_config(ExperimentConfig{})), ExperimentConfig{});
}

TEST(Config, TextAndJson) {
  const auto a = parse_config(
      "# sweep\ncircuits = ghz:8, qft:8\nqubits_per_core = 16\ntopologies = ring,grid\n"
      "links_min = 2\nlinks_max = 4\ndelta_improv = 1, 10\n");
  const auto b = parse_config(
      R"({"circuits": ["ghz:8", "qft:8"], "qubits_per_core": 16, "topologies": ["ring", "grid"],
          "links_min": 2, "links_max": 4, "delta_improv": [1, 10]})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.circuits.size(), 2u);
  EXPECT_EQ(a.topologies, (std::vector<TopologyKind>{TopologyKind::Ring, TopologyKind::Grid}));
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("nonsense = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("repetitions = many\n"), ConfigError);
  ExperimentConfig c;
  c.repetitions = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = ExperimentConfig{};
  c.links_min = 3;
  c.links_max = 2;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Stats, SampleStddev) {
  const auto s = summarize({2, 4, 4, 4, 5, 5, 7, 9});
  EXPECT_DOUBLE_EQ(s.mean, 5);
  EXPECT_NEAR(s.stddev, std::sqrt(32.0 / 7.0), 1e-12);
  EXPECT_EQ(summarize({3}).stddev, 0);
}

TEST(Experiment, SingleCoreCellHasNoTransfers) {
  ExperimentConfig c;
  c.circuits = {{"ghz", 8, 0, {}}};
  c.topologies = {TopologyKind::AllToAll};
  c.links_max = 1;
  c.repetitions = 1;
  const auto rs = run_experiment(c);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_TRUE(rs[0].feasible);
  EXPECT_EQ(rs[0].total_tlp, 0);
  EXPECT_NEAR(rs[0].fidelity.coherence, coherence(rs[0].makespan_ns, 1.2e6, 1.16e6), 1e-15);
}

TEST(Experiment, InfeasibleCellsAreFlagged) {
  ExperimentConfig c;
  c.circuits = {{"ghz", 256, 0, {}}};
  c.topologies = {TopologyKind::AllToAll};
  c.links_min = 5;
  c.links_max = 6;
  c.repetitions = 1;
  const auto rs = run_experiment(c);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_FALSE(rs[1].feasible);
  EXPECT_FALSE(rs[1].note.empty());
  EXPECT_EQ(rs[1].fidelity.overall, 0);
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  auto c = small_config();
  const auto a = run_experiment(c);
  c.threads = 1;
  const auto b = run_experiment(c);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.size(), 2u * 3u * 3u * 2u * 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].benchmark, b[i].benchmark);
    EXPECT_EQ(a[i].topology, b[i].topology);
    EXPECT_EQ(a[i].links, b[i].links);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].total_tlp, b[i].total_tlp);
    EXPECT_EQ(a[i].sequential_tlp, b[i].sequential_tlp);
    EXPECT_EQ(a[i].makespan_ns, b[i].makespan_ns);
    EXPECT_EQ(a[i].fidelity.overall, b[i].fidelity.overall);
  }
}

TEST(Experiment, OverallFidelityNonDecreasingInDelta) {
  ExperimentConfig c;
  c.circuits = {{"qft", 40, 0, {}}};
  c.qubits_per_core = 16;
  c.topologies = {TopologyKind::Ring};
  c.links_max = 2;
  c.repetitions = 1;
  c.delta_improv = {1, 10, 100, 1000};
  const auto rs = run_experiment(c);
  for (std::size_t i = 1; i < rs.size(); ++i) {
    if (rs[i].links == rs[i - 1].links) EXPECT_GE(rs[i].fidelity.overall, rs[i - 1].fidelity.overall);
  }
}

TEST(Dataset, FilesAndNormalisation) {
  const auto c = small_config();
  const auto rs = run_experiment(c);
  const fs::path dir = fs::temp_directory_path() / "mqs_dataset_test";
  fs::remove_all(dir);
  emit_dataset(rs, c, dir, "csv");
  for (const char* f : {"fig5.csv", "fig7.csv", "fig8.csv", "fig9.csv", "runs.jsonl", "metadata.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  // Relative fidelity of the best feasible configuration is exactly 1.
  std::istringstream fig8(slurp(dir / "fig8.csv"));
  std::string line;
  std::getline(fig8, line);
  EXPECT_EQ(line,
            "benchmark,topology,links,delta_improv,feasible,num_cores,fidelity_mean,fidelity_std,"
            "relative_fidelity_mean,relative_fidelity_std");
  std::map<std::string, double> best;
  while (std::getline(fig8, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) cols.push_back(x);
    ASSERT_EQ(cols.size(), 10u);
    auto& b = best[cols[0] + "@" + cols[3]];
    b = std::max(b, std::stod(cols[8]));
  }
  for (const auto& [k, v] : best) EXPECT_EQ(v, 1.0) << k;

  const fs::path jdir = dir / "json";
  emit_dataset(rs, c, jdir, "json");
  EXPECT_TRUE(fs::exists(jdir / "fig7.json"));
  fs::remove_all(dir);
}

TEST(MappingDump, JsonlRoundTrip) {
  const auto sc = slice_circuit(gen_qft(20));
  const auto g = build_topology(TopologyKind::Grid, 3, 1, 10);
  const auto m = map_circuit(sc, g);
  const auto d = make_mapping_dump(sc, g, m);
  std::stringstream s;
  write_mapping_jsonl(s, d);
  const auto back = read_mapping_jsonl(s);
  EXPECT_EQ(back.circuit, d.circuit);
  EXPECT_EQ(back.topology, d.topology);
  EXPECT_EQ(back.num_cores, 3);
  EXPECT_EQ(back.placements, d.placements);
  EXPECT_EQ(back.transfers, d.transfers);
  EXPECT_EQ(back.slice_ops.size(), d.slice_ops.size());
  EXPECT_EQ(slice_durations(back.slice_ops, TimingParams{}), slice_durations(sc, TimingParams{}));
  std::stringstream bad("{\"type\":\"placement\"}\n");
  EXPECT_THROW(read_mapping_jsonl(bad), std::runtime_error);
}
