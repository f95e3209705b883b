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

#include "mqs/bottleneck.hpp"

#include <stdexcept>

#include "mqs/format.hpp"

namespace mqs {

namespace {

TimingParams link_params(const BottleneckQuery& q) {
  TimingParams p = q.base;
  p.link_width = q.link_width;
  p.clock_freq_hz = q.clock_freq_hz;
  p.delta_time = q.delta_time;
  return p;
}

}  // namespace

double classical_latency_log2(int log2_qubits, const BottleneckQuery& q) {
  return classical_latency(packet_size_for_id_bits(log2_qubits), link_params(q));
}

double quantum_stage_ns(const BottleneckQuery& q) {
  // Any valid system size works here; only the classical stage depends on it.
  return teleport_stages(link_params(q), 2).quantum_ns();
}

std::optional<int> bottleneck_size(const BottleneckQuery& q) {
  if (q.link_width < 1 || !(q.clock_freq_hz > 0) || !(q.delta_time >= 1.0)) {
    throw std::invalid_argument("bottleneck_size: bad query");
  }
  const double quantum = quantum_stage_ns(q);
  // Classical latency only grows with k, so the first hit is the answer.
  for (int k = 1; k <= q.max_log2; ++k) {
    if (classical_latency_log2(k, q) > quantum) return k;
  }
  return std::nullopt;
}

std::vector<BottleneckRow> sweep_bottleneck(std::span<const int> widths,
                                            std::span<const double> freqs,
                                            std::span<const double> deltas,
                                            const TimingParams& base, int max_log2) {
  std::vector<BottleneckRow> rows;
  rows.reserve(widths.size() * freqs.size() * deltas.size());
  for (int w : widths) {
    for (double f : freqs) {
      for (double d : deltas) {
        BottleneckQuery q{w, f, d, base, max_log2};
        rows.push_back({w, f, d, bottleneck_size(q)});
      }
    }
  }
  return rows;
}

void write_bottleneck_csv(std::ostream& out, std::span<const BottleneckRow> rows) {
  out << "width,freq,delta_time,qubits_log2\n";
  for (const auto& r : rows) {
    out << r.link_width << ',' << format_number(r.clock_freq_hz) << ','
        << format_number(r.delta_time) << ','
        << (r.qubits_log2 ? std::to_string(*r.qubits_log2) : std::string("none")) << '\n';
  }
}

}  // namespace mqs
