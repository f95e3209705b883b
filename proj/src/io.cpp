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

#include "mqs/io.hpp"

#include <algorithm>
#include <stdexcept>

#include "mqs/format.hpp"

namespace mqs {

using nlohmann::json;

MappingDump make_mapping_dump(const SlicedCircuit& sc, const CoreGraph& g,
                              const MappingResult& m) {
  MappingDump d;
  d.circuit = sc.circuit.name;
  d.num_qubits = sc.circuit.num_qubits;
  d.topology = g.kind();
  d.num_cores = g.num_cores();
  d.parallel_links = g.parallel_links();
  d.qubits_per_core = g.qubits_per_core();
  for (const auto& slice : sc.slices) {
    SliceOps ops;
    for (const auto& gate : slice) {
      switch (gate.kind) {
        case GateKind::SingleQubit: ++ops.n_1q; break;
        case GateKind::TwoQubit: ++ops.n_2q; break;
        case GateKind::Measurement: ++ops.n_meas; break;
      }
    }
    d.slice_ops.push_back(ops);
  }
  d.placements = m.placements;
  d.transfers = m.transfers;
  return d;
}

void write_mapping_jsonl(std::ostream& out, const MappingDump& d) {
  out << json{{"type", "header"},
              {"circuit", d.circuit},
              {"num_qubits", d.num_qubits},
              {"num_slices", d.placements.size()},
              {"topology", std::string(to_string(d.topology))},
              {"num_cores", d.num_cores},
              {"parallel_links", d.parallel_links},
              {"qubits_per_core", d.qubits_per_core}}
             .dump()
      << '\n';
  for (std::size_t s = 0; s < d.placements.size(); ++s) {
    const SliceOps ops = s < d.slice_ops.size() ? d.slice_ops[s] : SliceOps{};
    out << json{{"type", "placement"},
                {"slice", d.placements[s].slice_index},
                {"qubit_core", d.placements[s].qubit_core},
                {"ops", {{"1q", ops.n_1q}, {"2q", ops.n_2q}, {"meas", ops.n_meas}}}}
               .dump()
        << '\n';
  }
  for (const auto& t : d.transfers) {
    out << json{{"type", "transfer"},
                {"qubit", t.qubit},
                {"src", t.src_core},
                {"dst", t.dst_core},
                {"boundary", t.slice_boundary}}
               .dump()
        << '\n';
  }
}

MappingDump read_mapping_jsonl(std::istream& in) {
  MappingDump d;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      const std::string type = j.at("type");
      if (type == "header") {
        d.circuit = j.at("circuit").get<std::string>();
        d.num_qubits = j.at("num_qubits");
        auto kind = topology_from_string(j.at("topology").get<std::string>());
        if (!kind) throw std::runtime_error("unknown topology");
        d.topology = *kind;
        d.num_cores = j.at("num_cores");
        d.parallel_links = j.at("parallel_links");
        d.qubits_per_core = j.at("qubits_per_core");
        have_header = true;
      } else if (type == "placement") {
        d.placements.push_back({j.at("slice"), j.at("qubit_core").get<std::vector<int>>()});
        const auto& ops = j.at("ops");
        d.slice_ops.push_back({ops.at("1q"), ops.at("2q"), ops.at("meas")});
      } else if (type == "transfer") {
        d.transfers.push_back({j.at("qubit"), j.at("src"), j.at("dst"), j.at("boundary")});
      } else {
        throw std::runtime_error("unknown record type '" + type + "'");
      }
    } catch (const json::exception& e) {
      throw std::runtime_error("mapping line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("mapping line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw std::runtime_error("mapping dump has no header record");
  return d;
}

std::vector<double> slice_durations(const std::vector<SliceOps>& ops, const TimingParams& p) {
  std::vector<double> out;
  out.reserve(ops.size());
  for (const auto& o : ops) {
    double t = 0;
    if (o.n_1q > 0) t = std::max(t, p.t_1q);
    if (o.n_2q > 0) t = std::max(t, p.t_2q);
    if (o.n_meas > 0) t = std::max(t, p.t_meas);
    out.push_back(t / p.delta_time);
  }
  return out;
}

OperationCounts total_counts(const std::vector<SliceOps>& ops) {
  OperationCounts c;
  for (const auto& o : ops) {
    c.n_1q += o.n_1q;
    c.n_2q += o.n_2q;
    c.n_meas += o.n_meas;
  }
  return c;
}

void write_events_csv(std::ostream& out, const ScheduleResult& r) {
  out << "transfer_id,hop,link_id,start_ns,end_ns,qubit,from_core,to_core,boundary,round\n";
  for (const auto& e : r.events) {
    out << e.transfer_id << ',' << e.hop << ',' << e.qlink << ',' << format_number(e.start_ns)
        << ',' << format_number(e.end_ns) << ',' << e.qubit << ',' << e.from_core << ','
        << e.to_core << ',' << e.boundary << ',' << e.round << '\n';
  }
}

json summary_json(const ScheduleResult& r) {
  return {{"total_tlp", r.total_tlp},
          {"sequential_tlp", r.sequential_tlp},
          {"makespan", r.makespan_ns}};
}

json to_json(const OperationCounts& c) {
  return {{"1q", c.n_1q}, {"2q", c.n_2q}, {"meas", c.n_meas}, {"epr", c.n_epr}};
}

json to_json(const FidelityReport& f) {
  return {{"coherence", f.coherence},
          {"operational", f.operational},
          {"overall", f.overall},
          {"makespan_ns", f.makespan_ns},
          {"counts", to_json(f.counts)}};
}

}  // namespace mqs
