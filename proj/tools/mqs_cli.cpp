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

// mqs: command-line front end for the modular architecture simulator.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "mqs/bottleneck.hpp"
#include "mqs/circuit.hpp"
#include "mqs/experiment.hpp"
#include "mqs/fidelity.hpp"
#include "mqs/io.hpp"
#include "mqs/mapper.hpp"
#include "mqs/netsim.hpp"
#include "mqs/topology.hpp"

namespace {

// Writes to `path`, or stdout for "" / "-".
template <typename F>
void with_output(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write(out);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

// "1-15" or "1,2,4"
std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> out;
  if (auto dash = text.find('-'); dash != std::string::npos && text.find(',') == std::string::npos) {
    const int lo = std::stoi(text.substr(0, dash));
    const int hi = std::stoi(text.substr(dash + 1));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stod(item));
  return out;
}

mqs::TopologyKind topology_arg(const std::string& name) {
  auto k = mqs::topology_from_string(name);
  if (!k) throw std::runtime_error("unknown topology '" + name + "'");
  return *k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular quantum architecture simulator: mapping, teleportation scheduling and fidelity"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a benchmark circuit in the native format");
  std::string gen_circuit, gen_out;
  std::uint64_t gen_seed = 1;
  gen->add_option("circuit", gen_circuit, "ghz:N | qft:N | cuccaro:N | qvol:N[:depth]")->required();
  gen->add_option("--seed", gen_seed, "Seed for random circuits");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // map
  auto* map = app.add_subcommand("map", "Map a circuit onto cores; dump placements and transfers as JSON lines");
  std::string map_circuit, map_topology = "line", map_out;
  int map_links = 1, map_q = 64, map_cores = 0;
  std::uint64_t map_seed = 0;
  map->add_option("circuit", map_circuit, "Circuit spec or file:<path>")->required();
  map->add_option("-t,--topology", map_topology, "line | ring | star | grid | all_to_all");
  map->add_option("-l,--links", map_links, "Parallel QLinks per edge")->check(CLI::PositiveNumber);
  map->add_option("-q,--qubits-per-core", map_q, "Physical qubits per core")->check(CLI::PositiveNumber);
  map->add_option("-n,--cores", map_cores, "Core count (default: smallest feasible)");
  map->add_option("--seed", map_seed, "Circuit and mapper seed");
  map->add_option("-o,--out", map_out, "Output JSONL (default stdout)");

  // schedule
  auto* sched = app.add_subcommand("schedule", "Schedule teleportations from a mapping dump");
  std::string sched_in, sched_events, sched_summary, sched_report;
  mqs::TimingParams timing;
  double sched_improv = 1.0;
  sched->add_option("mapping", sched_in, "JSONL written by 'map'")->required();
  sched->add_option("--link-width", timing.link_width, "Classical link width (bits/cycle)");
  sched->add_option("--clock-freq", timing.clock_freq_hz, "Classical clock frequency (Hz)");
  sched->add_option("--delta-time", timing.delta_time, "Divide quantum durations by this factor");
  sched->add_option("--delta-improv", sched_improv, "Divide durations and error rates by this factor");
  sched->add_option("--events", sched_events, "Event trace CSV");
  sched->add_option("--summary", sched_summary, "Summary JSON (default stdout)");
  sched->add_option("--report", sched_report, "Fidelity report JSON");

  // bottleneck
  auto* bott = app.add_subcommand("bottleneck", "System size where classical messaging dominates a teleportation");
  std::string b_widths = "1-15", b_freqs = "1e7,2e7,5e7,1e8,2e8,5e8,1e9", b_deltas = "1,10,100,1000", b_out;
  int b_cap = 128;
  bott->add_option("--widths", b_widths, "Link widths, e.g. 1-15 or 1,4,10");
  bott->add_option("--freqs", b_freqs, "Clock frequencies in Hz, comma separated");
  bott->add_option("--deltas", b_deltas, "delta_time values, comma separated");
  bott->add_option("--max-log2", b_cap, "Largest system size searched, as log2(qubits)");
  bott->add_option("-o,--out", b_out, "Output CSV (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Full-stack sweep; writes fig5/7/8/9 datasets");
  std::string run_config, run_dir, run_format;
  int run_threads = -1;
  run->add_option("-c,--config", run_config, "Config file (key = value, or JSON)");
  run->add_option("-o,--output-dir", run_dir, "Override output_dir");
  run->add_option("--format", run_format, "csv | json");
  run->add_option("-j,--threads", run_threads, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const auto c = mqs::make_circuit(mqs::parse_circuit_spec(gen_circuit), gen_seed);
      with_output(gen_out, [&](std::ostream& o) { o << mqs::render_native(c); });
    } else if (map->parsed()) {
      const auto kind = topology_arg(map_topology);
      const auto spec = mqs::parse_circuit_spec(map_circuit);
      const auto circuit = mqs::make_circuit(spec, map_seed);
      int cores = map_cores;
      if (cores <= 0) {
        auto n = mqs::min_cores(kind, map_q, map_links, circuit.num_qubits);
        if (!n) throw std::runtime_error("no feasible core count for this topology and link count");
        cores = *n;
      }
      const auto g = mqs::build_topology(kind, cores, map_links, map_q);
      const auto sc = mqs::slice_circuit(circuit);
      const auto m = mqs::map_circuit(sc, g, {map_seed});
      with_output(map_out, [&](std::ostream& o) {
        mqs::write_mapping_jsonl(o, mqs::make_mapping_dump(sc, g, m));
      });
    } else if (sched->parsed()) {
      std::ifstream in(sched_in);
      if (!in) throw std::runtime_error("cannot read '" + sched_in + "'");
      const auto dump = mqs::read_mapping_jsonl(in);
      const auto g = mqs::build_topology(dump.topology, dump.num_cores, dump.parallel_links,
                                         dump.qubits_per_core);
      auto [tp, np] = mqs::apply_improvement(timing, mqs::NoiseParams{}, sched_improv);
      const auto times = mqs::slice_durations(dump.slice_ops, tp);
      const auto r = mqs::schedule(dump.transfers, g, tp, times);
      if (!sched_events.empty()) {
        with_output(sched_events, [&](std::ostream& o) { mqs::write_events_csv(o, r); });
      }
      with_output(sched_summary, [&](std::ostream& o) { o << mqs::summary_json(r).dump(2) << '\n'; });
      if (!sched_report.empty()) {
        const auto counts = mqs::total_counts(dump.slice_ops) + mqs::teleport_counts(r.total_tlp);
        const auto report = mqs::estimate(r, counts, np);
        with_output(sched_report, [&](std::ostream& o) { o << mqs::to_json(report).dump(2) << '\n'; });
      }
    } else if (bott->parsed()) {
      const auto widths = parse_int_range(b_widths);
      const auto freqs = parse_double_list(b_freqs);
      const auto deltas = parse_double_list(b_deltas);
      const auto rows = mqs::sweep_bottleneck(widths, freqs, deltas, timing, b_cap);
      with_output(b_out, [&](std::ostream& o) { mqs::write_bottleneck_csv(o, rows); });
    } else if (run->parsed()) {
      mqs::ExperimentConfig cfg = run_config.empty() ? mqs::ExperimentConfig{} : mqs::load_config(run_config);
      if (!run_dir.empty()) cfg.output_dir = run_dir;
      if (!run_format.empty()) cfg.format = run_format;
      if (run_threads >= 0) cfg.threads = run_threads;
      mqs::validate(cfg);
      const auto records = mqs::run_experiment(cfg);
      mqs::emit_dataset(records, cfg, cfg.output_dir, cfg.format);
      std::cerr << "wrote " << records.size() << " run records to " << cfg.output_dir << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "mqs: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
