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

#include "mqs/netsim.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mqs {

int ceil_log2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2(0)");
  return n == 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

int packet_size(std::uint64_t num_physical_qubits) {
  if (num_physical_qubits < 2) throw std::invalid_argument("packet_size needs >= 2 qubits");
  return packet_size_for_id_bits(ceil_log2(num_physical_qubits));
}

double classical_latency(int bits, const TimingParams& p) {
  if (bits < 0 || p.link_width < 1 || !(p.clock_freq_hz > 0)) {
    throw std::invalid_argument("classical_latency: bad arguments");
  }
  const long long cycles = 2 + (bits + p.link_width - 1) / p.link_width;
  return static_cast<double>(cycles) * 1e9 / p.clock_freq_hz;
}

TeleportStages teleport_stages(const TimingParams& p, std::uint64_t num_physical_qubits) {
  const double d = p.delta_time;
  TeleportStages s;
  s.t_entangle = p.t_epr / d;
  // CNOT, H, then both measurements side by side.
  s.t_pre = (p.t_2q + p.t_1q + p.t_meas) / d;
  s.t_classical = classical_latency(packet_size(num_physical_qubits), p);
  // Conditional X then Z, then a 3-CNOT SWAP out of the buffer qubit.
  s.t_post = (2.0 * p.t_1q + 3.0 * p.t_2q) / d;
  return s;
}

std::vector<double> slice_durations(const SlicedCircuit& sc, const TimingParams& p) {
  std::vector<double> out;
  out.reserve(sc.slices.size());
  for (const auto& slice : sc.slices) {
    double longest = 0;
    for (const auto& g : slice) {
      double t = 0;
      switch (g.kind) {
        case GateKind::SingleQubit: t = p.t_1q; break;
        case GateKind::TwoQubit: t = p.t_2q; break;
        case GateKind::Measurement: t = p.t_meas; break;
      }
      longest = std::max(longest, t / p.delta_time);
    }
    out.push_back(longest);
  }
  return out;
}

namespace {

struct InFlight {
  int id;
  const Transfer* transfer;
  std::vector<int> path;
  int next_hop = 0;

  int remaining() const { return static_cast<int>(path.size()) - 1 - next_hop; }
};

}  // namespace

ScheduleResult schedule(std::span<const Transfer> transfers, const CoreGraph& g,
                        const TimingParams& p, std::span<const double> slice_times) {
  ScheduleResult r;
  const int num_boundaries = std::max<int>(0, static_cast<int>(slice_times.size()) - 1);
  r.computation_ns = std::accumulate(slice_times.begin(), slice_times.end(), 0.0);
  r.boundary_ns.assign(static_cast<std::size_t>(num_boundaries), 0.0);

  std::vector<std::vector<InFlight>> by_boundary(static_cast<std::size_t>(num_boundaries));
  for (std::size_t i = 0; i < transfers.size(); ++i) {
    const auto& t = transfers[i];
    if (t.slice_boundary < 0 || t.slice_boundary >= num_boundaries) {
      throw std::invalid_argument("transfer " + std::to_string(i) + " at boundary " +
                                  std::to_string(t.slice_boundary) + " outside [0, " +
                                  std::to_string(num_boundaries) + ")");
    }
    if (t.src_core == t.dst_core) {
      throw std::invalid_argument("transfer " + std::to_string(i) + " does not move");
    }
    by_boundary[t.slice_boundary].push_back({static_cast<int>(i), &t, route(g, t.src_core, t.dst_core)});
  }

  const double hop = teleport_stages(p, static_cast<std::uint64_t>(g.total_qubits())).hop_ns();
  const int lanes = g.parallel_links();
  double clock = 0;
  for (int b = 0; b < num_boundaries; ++b) {
    clock += slice_times[b];
    auto& flight = by_boundary[b];
    int rounds = 0;
    double start = clock;  // each round begins where the previous one ended
    std::vector<InFlight*> waiting;
    for (auto& f : flight) waiting.push_back(&f);
    while (!waiting.empty()) {
      // Contenders per edge, strongest claim first.
      std::map<int, std::vector<InFlight*>> contenders;
      for (auto* f : waiting) {
        const int e = g.edge_index(f->path[f->next_hop], f->path[f->next_hop + 1]);
        if (e < 0) throw std::logic_error("route step is not an edge");
        contenders[e].push_back(f);
      }
      for (auto& [edge, list] : contenders) {
        std::sort(list.begin(), list.end(), [](const InFlight* a, const InFlight* b) {
          if (a->remaining() != b->remaining()) return a->remaining() > b->remaining();
          if (a->transfer->qubit != b->transfer->qubit) return a->transfer->qubit < b->transfer->qubit;
          return a->id < b->id;
        });
        const int granted = std::min<int>(lanes, static_cast<int>(list.size()));
        for (int k = 0; k < granted; ++k) {
          InFlight* f = list[k];
          r.events.push_back({f->id, f->transfer->qubit, f->next_hop, f->path[f->next_hop],
                              f->path[f->next_hop + 1], edge * lanes + k, b, rounds, start,
                              start + hop});
          ++f->next_hop;
        }
      }
      ++rounds;
      start += hop;
      std::erase_if(waiting, [](const InFlight* f) { return f->remaining() == 0; });
    }
    r.boundary_ns[b] = start - clock;
    r.sequential_tlp += rounds;
    clock = start;
  }

  r.total_tlp = static_cast<long long>(r.events.size());
  r.makespan_ns = r.computation_ns + std::accumulate(r.boundary_ns.begin(), r.boundary_ns.end(), 0.0);
  return r;
}

ScheduleStats count_stats(const ScheduleResult& r) {
  ScheduleStats s;
  s.total_tlp = static_cast<long long>(r.events.size());
  std::map<int, std::pair<double, double>> span;  // boundary -> (first start, last end)
  std::map<int, int> last_round;
  for (const auto& e : r.events) {
    auto [it, fresh] = span.try_emplace(e.boundary, e.start_ns, e.end_ns);
    if (!fresh) {
      it->second.first = std::min(it->second.first, e.start_ns);
      it->second.second = std::max(it->second.second, e.end_ns);
    }
    auto& lr = last_round[e.boundary];
    lr = std::max(lr, e.round);
  }
  for (const auto& [b, rnd] : last_round) s.sequential_tlp += rnd + 1;
  s.makespan_ns = r.computation_ns;
  for (const auto& [b, se] : span) s.makespan_ns += se.second - se.first;
  return s;
}

}  // namespace mqs
