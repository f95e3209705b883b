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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mqs/circuit.hpp"
#include "mqs/fidelity.hpp"
#include "mqs/netsim.hpp"
#include "mqs/topology.hpp"

namespace mqs {

/// Which circuit to run: a generator with a qubit count, or a file.
///
/// Text form: `ghz:256`, `qft:256`, `cuccaro:256` (total qubits, even, >= 4),
/// `qvol:256` or `qvol:256:<depth>`, `file:<path>` (.qasm read as OpenQASM,
/// anything else as the native format).
struct CircuitSpec {
  std::string generator;
  int qubits = 0;
  int depth = 0;  // qvol only; 0 means depth == qubits
  std::string path;

  bool operator==(const CircuitSpec&) const = default;
};

CircuitSpec parse_circuit_spec(std::string_view text);
std::string to_string(const CircuitSpec& spec);
/// Builds the circuit; `seed` feeds the random generators only.
Circuit make_circuit(const CircuitSpec& spec, std::uint64_t seed);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::vector<CircuitSpec> circuits{
      {"qft", 256, 0, {}}, {"qvol", 256, 0, {}}, {"ghz", 256, 0, {}}, {"cuccaro", 256, 0, {}}};
  int qubits_per_core = 64;
  std::vector<TopologyKind> topologies{TopologyKind::Line, TopologyKind::Ring, TopologyKind::Star,
                                       TopologyKind::Grid, TopologyKind::AllToAll};
  int links_min = 1;
  int links_max = 5;
  TimingParams timing;
  NoiseParams noise;
  /// 100 is an arbitrary "large enough" improvement factor for relative
  /// fidelity comparisons.
  std::vector<double> delta_improv{100.0};
  int repetitions = 5;
  std::uint64_t seed = 1;
  int max_cores = 1024;
  int threads = 0;  // 0 = hardware concurrency
  std::string output_dir = "results";
  std::string format = "csv";

  std::vector<int> fig5_widths{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  std::vector<double> fig5_freqs{10e6, 20e6, 50e6, 100e6, 200e6, 500e6, 1e9};
  std::vector<double> fig5_deltas{1, 10, 100, 1000};

  bool operator==(const ExperimentConfig&) const = default;
};

/// Flat `key = value` text (comments with '#', lists comma separated), or a
/// JSON object with the same keys when the text starts with '{'.
ExperimentConfig parse_config(std::string_view text);
std::string render_config(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& cfg);

/// Seed of repetition `rep` for base seed `seed`.
std::uint64_t repetition_seed(std::uint64_t seed, int rep);

struct RunRecord {
  std::string benchmark;  // circuit spec text
  std::string circuit_name;
  TopologyKind topology = TopologyKind::Line;
  int links = 1;
  double delta_improv = 1;
  int repetition = 0;
  std::uint64_t seed = 0;
  bool feasible = false;
  std::string note;  // why a cell is infeasible
  int num_cores = 0;
  int num_slices = 0;
  long long total_tlp = 0;
  long long sequential_tlp = 0;
  double makespan_ns = 0;
  FidelityReport fidelity;
  double wall_ms = 0;
};

/// Sweeps circuits x topologies x links x repetitions x delta_improv:
/// min_cores -> build_topology -> slice -> map -> schedule -> estimate.
/// Records come back in that nesting order whatever the thread count.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

/// One cell of the sweep; exposed for tests and the CLI.
std::vector<RunRecord> run_cell(const ExperimentConfig& cfg, const CircuitSpec& spec,
                                TopologyKind kind, int links, int rep);

struct Stats {
  double mean = 0;
  double stddev = 0;  // sample (n - 1); 0 for a single value
};
Stats summarize(const std::vector<double>& values);

/// Writes fig5/fig7/fig8/fig9 tables (csv or json), runs.jsonl and
/// metadata.json into `dir`.
void emit_dataset(const std::vector<RunRecord>& records, const ExperimentConfig& cfg,
                  const std::filesystem::path& dir, const std::string& format);

}  // namespace mqs
