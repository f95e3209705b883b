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
#include <span>
#include <vector>

#include "mqs/circuit.hpp"
#include "mqs/mapper.hpp"
#include "mqs/topology.hpp"

namespace mqs {

/// Gate, measurement and EPR durations in ns (before division by
/// delta_time) plus the classical link parameters.
struct TimingParams {
  double t_1q = 7.9;
  double t_2q = 30.0;
  double t_meas = 40.0;
  double t_epr = 130.0;
  double clock_freq_hz = 200e6;
  int link_width = 10;
  double delta_time = 1.0;

  bool operator==(const TimingParams&) const = default;
};

struct TeleportStages {
  double t_entangle = 0;
  double t_pre = 0;
  double t_classical = 0;
  double t_post = 0;

  double quantum_ns() const { return t_entangle + t_pre + t_post; }
  double hop_ns() const { return t_entangle + t_pre + t_classical + t_post; }
};

struct ScheduleEvent {
  int transfer_id = 0;  // index into the scheduled transfer list
  int qubit = 0;
  int hop = 0;          // 0-based hop along the transfer's route
  int from_core = 0;
  int to_core = 0;
  int qlink = 0;        // edge_index * parallel_links + lane
  int boundary = 0;
  int round = 0;        // arbitration round within the boundary
  double start_ns = 0;
  double end_ns = 0;
};

struct ScheduleResult {
  std::vector<ScheduleEvent> events;
  double computation_ns = 0;
  std::vector<double> boundary_ns;  // communication time of each slice boundary
  double makespan_ns = 0;
  long long total_tlp = 0;
  long long sequential_tlp = 0;
};

struct ScheduleStats {
  long long total_tlp = 0;
  long long sequential_tlp = 0;
  double makespan_ns = 0;

  bool operator==(const ScheduleStats&) const = default;
};

/// ceil(log2(n)) for n >= 1.
int ceil_log2(std::uint64_t n);

/// Bits per teleportation message: source id + destination id + 2 outcome bits.
int packet_size(std::uint64_t num_physical_qubits);
inline int packet_size_for_id_bits(int id_bits) { return 2 * id_bits + 2; }

/// Two routing/arbitration cycles plus ceil(bits / link_width) transmit
/// cycles, in ns.
double classical_latency(int bits, const TimingParams& p);

TeleportStages teleport_stages(const TimingParams& p, std::uint64_t num_physical_qubits);

/// Longest gate of each slice, in ns after delta_time.
std::vector<double> slice_durations(const SlicedCircuit& sc, const TimingParams& p);

/// Round-based teleportation scheduler. At each slice boundary every
/// transfer walks its route one hop per granted QLink; each edge has
/// parallel_links lanes and grants go to the transfers with the most hops
/// left (then lower qubit index). A computation slice waits for the whole
/// preceding boundary.
ScheduleResult schedule(std::span<const Transfer> transfers, const CoreGraph& g,
                        const TimingParams& p, std::span<const double> slice_times);

/// Recomputes the summary statistics from the event list alone.
ScheduleStats count_stats(const ScheduleResult& r);

}  // namespace mqs
