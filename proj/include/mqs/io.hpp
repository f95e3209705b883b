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

#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "mqs/fidelity.hpp"
#include "mqs/mapper.hpp"
#include "mqs/netsim.hpp"

namespace mqs {

/// Gate-class tally of one slice; enough to recompute its duration.
struct SliceOps {
  int n_1q = 0;
  int n_2q = 0;
  int n_meas = 0;

  bool operator==(const SliceOps&) const = default;
};

/// Everything `schedule` needs, as written by `map` and read back by the
/// `schedule` subcommand.
struct MappingDump {
  std::string circuit;
  int num_qubits = 0;
  TopologyKind topology = TopologyKind::Line;
  int num_cores = 0;
  int parallel_links = 1;
  int qubits_per_core = 0;
  std::vector<SliceOps> slice_ops;
  std::vector<Placement> placements;
  std::vector<Transfer> transfers;
};

MappingDump make_mapping_dump(const SlicedCircuit& sc, const CoreGraph& g,
                              const MappingResult& m);

/// JSON lines: one "header" record, one "placement" per slice, one
/// "transfer" per teleported qubit.
void write_mapping_jsonl(std::ostream& out, const MappingDump& d);
MappingDump read_mapping_jsonl(std::istream& in);

/// Slice durations from per-slice gate tallies (longest gate class present).
std::vector<double> slice_durations(const std::vector<SliceOps>& ops, const TimingParams& p);
OperationCounts total_counts(const std::vector<SliceOps>& ops);

/// CSV: transfer_id,hop,link_id,start_ns,end_ns (plus qubit/cores/boundary).
void write_events_csv(std::ostream& out, const ScheduleResult& r);

nlohmann::json summary_json(const ScheduleResult& r);
nlohmann::json to_json(const OperationCounts& c);
nlohmann::json to_json(const FidelityReport& f);

}  // namespace mqs
