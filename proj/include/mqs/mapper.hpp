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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqs/circuit.hpp"
#include "mqs/topology.hpp"

namespace mqs {

/// Core of every virtual qubit during one timeslice.
struct Placement {
  int slice_index = 0;
  std::vector<int> qubit_core;

  bool operator==(const Placement&) const = default;
};

/// A qubit teleported from src_core to dst_core between slice
/// `slice_boundary` and slice `slice_boundary + 1`.
struct Transfer {
  int qubit = 0;
  int src_core = 0;
  int dst_core = 0;
  int slice_boundary = 0;

  bool operator==(const Transfer&) const = default;
};

struct MappingResult {
  std::vector<Placement> placements;
  std::vector<Transfer> transfers;
};

struct MapperOptions {
  /// The initial placement fills cores with consecutive qubits; 0 fills
  /// cores in index order, other values in a seeded random core order.
  std::uint64_t seed = 0;
};

class MappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distance-weighted cost of placing `operands` (one or two qubits) on
/// `core`, given where they sat in `prev`. Infinite when `core` has fewer
/// than operands.size() free slots.
double op_cost(std::span<const int> operands, int core, const Placement& prev,
               const CoreGraph& g, int free_slots);

/// Hungarian Qubit Assignment: one placement per slice, every two-qubit gate
/// core-local, per-core occupancy within core_capacity().
MappingResult map_circuit(const SlicedCircuit& sc, const CoreGraph& g,
                          const MapperOptions& opts = {});

/// One Transfer per (qubit, boundary) whose core changes, ordered by
/// boundary then qubit.
std::vector<Transfer> extract_transfers(std::span<const Placement> placements);

/// Locality and capacity checker; returns a description of the first
/// violation, or nullopt when every placement is valid.
std::optional<std::string> check_placements(const SlicedCircuit& sc, const CoreGraph& g,
                                            std::span<const Placement> placements);

}  // namespace mqs
