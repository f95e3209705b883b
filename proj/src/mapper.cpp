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

#include "mqs/mapper.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>

#include "mqs/hungarian.hpp"
#include "mqs/random.hpp"

namespace mqs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Contiguous fill in qubit order over as few cores as hold the circuit,
// each taking a share proportional to its capacity so every core keeps
// slack. A nonzero seed permutes the order in which cores are filled.
Placement initial_fill(int num_qubits, const std::vector<int>& caps, std::uint64_t seed) {
  std::vector<int> core_order(caps.size());
  std::iota(core_order.begin(), core_order.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    portable_shuffle(std::span<int>(core_order), rng);
  }
  // Shortest prefix of the fill order that holds every qubit.
  int used = 0;
  long long total = 0;
  while (total < num_qubits) total += caps[core_order[used++]];
  std::vector<int> quota(caps.size(), 0);
  int assigned = 0;
  for (int k = 0; k < used; ++k) {
    const int c = core_order[k];
    quota[c] = static_cast<int>(static_cast<long long>(num_qubits) * caps[c] / total);
    assigned += quota[c];
  }
  for (int k = 0; assigned < num_qubits; k = (k + 1) % used) {
    const int c = core_order[k];
    if (quota[c] < caps[c]) {
      ++quota[c];
      ++assigned;
    }
  }
  Placement p{-1, std::vector<int>(static_cast<std::size_t>(num_qubits), -1)};
  int q = 0;
  for (int c : core_order) {
    for (int k = 0; k < quota[c]; ++k) p.qubit_core[q++] = c;
  }
  return p;
}

// One column per free slot, at most `limit` per core; value = core index.
std::vector<int> slot_columns(const std::vector<int>& slots_per_core, int limit) {
  std::vector<int> cols;
  for (std::size_t c = 0; c < slots_per_core.size(); ++c) {
    const int k = std::min(slots_per_core[c], limit);
    cols.insert(cols.end(), static_cast<std::size_t>(std::max(k, 0)), static_cast<int>(c));
  }
  return cols;
}

class SliceMapper {
 public:
  SliceMapper(const CoreGraph& g, std::vector<int> caps) : g_(g), caps_(std::move(caps)) {}

  Placement place(const std::vector<Gate>& slice, const Placement& prev, int slice_index) {
    const auto n = prev.qubit_core.size();
    const int num_cores = g_.num_cores();
    Placement next{slice_index, std::vector<int>(n, -1)};

    // Pass 1: gate pairs onto cores with at least two free slots.
    std::vector<std::array<int, 2>> pairs;
    std::vector<char> paired(n, 0);
    for (const auto& gate : slice) {
      if (gate.kind != GateKind::TwoQubit) continue;
      pairs.push_back({gate.qubits[0], gate.qubits[1]});
      paired[gate.qubits[0]] = paired[gate.qubits[1]] = 1;
    }
    std::vector<int> remaining = caps_;
    // A pair already sharing a core stays there: swapping it with any pair
    // the solver would put in its place keeps per-core counts and, by the
    // triangle inequality, never raises the cost. Skipped in the rare case
    // where the pinned pairs leave too few two-slot holes for the rest.
    {
      std::vector<int> left = caps_;
      std::vector<std::array<int, 2>> moving;
      for (const auto& p : pairs) {
        const int c = prev.qubit_core[p[0]];
        if (c == prev.qubit_core[p[1]]) {
          left[c] -= 2;
        } else {
          moving.push_back(p);
        }
      }
      std::size_t holes = 0;
      for (int c = 0; c < num_cores; ++c) holes += static_cast<std::size_t>(left[c] / 2);
      if (holes >= moving.size()) {
        for (const auto& p : pairs) {
          const int c = prev.qubit_core[p[0]];
          if (c == prev.qubit_core[p[1]]) next.qubit_core[p[0]] = next.qubit_core[p[1]] = c;
        }
        pairs = std::move(moving);
        remaining = std::move(left);
      }
    }
    if (!pairs.empty()) {
      // Slots not held by qubits that stay unpaired; a pair beyond that
      // room evicts residents, each of which moves at least one hop.
      std::vector<int> lone(num_cores, 0);
      for (std::size_t q = 0; q < n; ++q) {
        if (!paired[q]) ++lone[prev.qubit_core[q]];
      }
      std::vector<int> pair_slots(num_cores);
      for (int c = 0; c < num_cores; ++c) pair_slots[c] = remaining[c] / 2;
      const auto cols = slot_columns(pair_slots, static_cast<int>(pairs.size()));
      if (cols.size() < pairs.size()) {
        throw MappingError("slice " + std::to_string(slice_index) + " has " +
                           std::to_string(pairs.size()) +
                           " two-qubit gates; core capacities fit only " +
                           std::to_string(cols.size()) + " pairs");
      }
      std::vector<int> evictions(cols.size(), 0);
      for (std::size_t k = 0, rank = 0; k < cols.size(); ++k) {
        rank = (k > 0 && cols[k] == cols[k - 1]) ? rank + 1 : 0;
        const int room = std::max(0, remaining[cols[k]] - lone[cols[k]]) - 2 * static_cast<int>(rank);
        evictions[k] = std::clamp(2 - room, 0, 2);
      }
      // Equal-cost ties go to the core already holding the second operand;
      // the nudges sum to less than one, so they never outweigh a hop.
      const double nudge = 1.0 / (4.0 * static_cast<double>(pairs.size()));
      CostMatrix<double> cost(static_cast<Eigen::Index>(pairs.size()),
                              static_cast<Eigen::Index>(cols.size()));
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        const int target_core = prev.qubit_core[pairs[r][1]];
        for (std::size_t k = 0; k < cols.size(); ++k) {
          cost(r, k) = op_cost(pairs[r], cols[k], prev, g_, remaining[cols[k]]) + evictions[k] +
                       (cols[k] == target_core ? 0.0 : nudge);
        }
      }
      const auto sol = solve_assignment(cost);
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        const int core = cols[sol.row_to_col[r]];
        next.qubit_core[pairs[r][0]] = next.qubit_core[pairs[r][1]] = core;
        remaining[core] -= 2;
      }
    }

    // Pass 2: lone qubits. Those whose previous core still has room stay at
    // zero cost; an optimal assignment with that property always exists (hop
    // distance obeys the triangle inequality), so only the overflow is solved.
    std::vector<std::vector<int>> lone_by_core(static_cast<std::size_t>(num_cores));
    for (std::size_t q = 0; q < n; ++q) {
      if (!paired[q]) lone_by_core[prev.qubit_core[q]].push_back(static_cast<int>(q));
    }
    std::vector<int> overflow;
    std::vector<int> spare(static_cast<std::size_t>(num_cores), 0);
    for (int c = 0; c < num_cores; ++c) {
      const auto& here = lone_by_core[c];
      const int keep = std::min<int>(static_cast<int>(here.size()), remaining[c]);
      for (int k = 0; k < keep; ++k) next.qubit_core[here[k]] = c;
      overflow.insert(overflow.end(), here.begin() + keep, here.end());
      spare[c] = remaining[c] - keep;
    }
    if (!overflow.empty()) {
      std::sort(overflow.begin(), overflow.end());
      const auto cols = slot_columns(spare, static_cast<int>(overflow.size()));
      if (cols.size() < overflow.size()) {
        throw MappingError("slice " + std::to_string(slice_index) + ": not enough free slots");
      }
      CostMatrix<double> cost(static_cast<Eigen::Index>(overflow.size()),
                              static_cast<Eigen::Index>(cols.size()));
      for (std::size_t r = 0; r < overflow.size(); ++r) {
        const int q = overflow[r];
        for (std::size_t k = 0; k < cols.size(); ++k) {
          cost(r, k) = op_cost(std::span<const int>(&q, 1), cols[k], prev, g_, spare[cols[k]]);
        }
      }
      const auto sol = solve_assignment(cost);
      for (std::size_t r = 0; r < overflow.size(); ++r) {
        next.qubit_core[overflow[r]] = cols[sol.row_to_col[r]];
      }
    }
    return next;
  }

 private:
  const CoreGraph& g_;
  std::vector<int> caps_;
};

}  // namespace

double op_cost(std::span<const int> operands, int core, const Placement& prev,
               const CoreGraph& g, int free_slots) {
  if (free_slots < static_cast<int>(operands.size())) return kInf;
  const auto& d = g.distances();
  if (operands.size() == 1) return d(prev.qubit_core.at(operands[0]), core);
  const int ca = prev.qubit_core.at(operands[0]);
  const int cb = prev.qubit_core.at(operands[1]);
  if (ca == core) return d(cb, core);
  if (cb == core) return d(ca, core);
  return d(ca, core) + d(cb, core);
}

MappingResult map_circuit(const SlicedCircuit& sc, const CoreGraph& g, const MapperOptions& opts) {
  const int n = sc.circuit.num_qubits;
  const auto caps = core_capacities(g);
  long long total = 0;
  for (int c = 0; c < g.num_cores(); ++c) {
    if (caps[c] < 1) {
      throw MappingError("core " + std::to_string(c) + " has no computation qubits (capacity " +
                         std::to_string(caps[c]) + ")");
    }
    total += caps[c];
  }
  if (total < n) {
    throw MappingError("circuit needs " + std::to_string(n) + " qubits; cores provide " +
                       std::to_string(total));
  }

  MappingResult out;
  out.placements.reserve(sc.slices.size());
  SliceMapper mapper(g, caps);
  Placement prev = initial_fill(n, caps, opts.seed);
  for (std::size_t s = 0; s < sc.slices.size(); ++s) {
    out.placements.push_back(mapper.place(sc.slices[s], prev, static_cast<int>(s)));
    prev = out.placements.back();
  }
  out.transfers = extract_transfers(out.placements);
  return out;
}

std::vector<Transfer> extract_transfers(std::span<const Placement> placements) {
  std::vector<Transfer> out;
  for (std::size_t k = 0; k + 1 < placements.size(); ++k) {
    const auto& a = placements[k].qubit_core;
    const auto& b = placements[k + 1].qubit_core;
    for (std::size_t q = 0; q < a.size() && q < b.size(); ++q) {
      if (a[q] != b[q]) {
        out.push_back({static_cast<int>(q), a[q], b[q], static_cast<int>(k)});
      }
    }
  }
  return out;
}

std::optional<std::string> check_placements(const SlicedCircuit& sc, const CoreGraph& g,
                                            std::span<const Placement> placements) {
  if (placements.size() != sc.slices.size()) {
    return "expected " + std::to_string(sc.slices.size()) + " placements, got " +
           std::to_string(placements.size());
  }
  const auto caps = core_capacities(g);
  for (std::size_t s = 0; s < placements.size(); ++s) {
    const auto& qc = placements[s].qubit_core;
    if (static_cast<int>(qc.size()) != sc.circuit.num_qubits) {
      return "slice " + std::to_string(s) + ": placement size mismatch";
    }
    std::vector<int> load(static_cast<std::size_t>(g.num_cores()), 0);
    for (std::size_t q = 0; q < qc.size(); ++q) {
      if (qc[q] < 0 || qc[q] >= g.num_cores()) {
        return "slice " + std::to_string(s) + ": qubit " + std::to_string(q) + " unplaced";
      }
      ++load[qc[q]];
    }
    for (int c = 0; c < g.num_cores(); ++c) {
      if (load[c] > caps[c]) {
        return "slice " + std::to_string(s) + ": core " + std::to_string(c) + " holds " +
               std::to_string(load[c]) + " > capacity " + std::to_string(caps[c]);
      }
    }
    for (const auto& gate : sc.slices[s]) {
      if (gate.kind == GateKind::TwoQubit && qc[gate.qubits[0]] != qc[gate.qubits[1]]) {
        return "slice " + std::to_string(s) + ": " + gate.label + " on qubits " +
               std::to_string(gate.qubits[0]) + "," + std::to_string(gate.qubits[1]) +
               " is not core-local";
      }
    }
  }
  return std::nullopt;
}

}  // namespace mqs
