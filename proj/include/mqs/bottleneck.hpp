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

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "mqs/netsim.hpp"

namespace mqs {

struct BottleneckQuery {
  int link_width = 10;
  double clock_freq_hz = 100e6;
  double delta_time = 1.0;
  TimingParams base;  // gate/EPR durations; its link fields are ignored
  int max_log2 = 128;
};

/// Classical transmission time for a system of 2^log2_qubits qubits.
double classical_latency_log2(int log2_qubits, const BottleneckQuery& q);

/// Entanglement + preprocessing + postprocessing, after delta_time.
double quantum_stage_ns(const BottleneckQuery& q);

/// Smallest k in [1, max_log2] such that the classical message for 2^k
/// qubits takes strictly longer than the quantum stages of one
/// teleportation; nullopt when it never does below the cap.
std::optional<int> bottleneck_size(const BottleneckQuery& q);

struct BottleneckRow {
  int link_width;
  double clock_freq_hz;
  double delta_time;
  std::optional<int> qubits_log2;
};

std::vector<BottleneckRow> sweep_bottleneck(std::span<const int> widths,
                                            std::span<const double> freqs,
                                            std::span<const double> deltas,
                                            const TimingParams& base = {}, int max_log2 = 128);

/// CSV with header width,freq,delta_time,qubits_log2 ("none" past the cap).
void write_bottleneck_csv(std::ostream& out, std::span<const BottleneckRow> rows);

}  // namespace mqs
