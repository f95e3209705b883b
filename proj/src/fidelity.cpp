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

#include "mqs/fidelity.hpp"

namespace mqs {

OperationCounts circuit_counts(const Circuit& c) {
  OperationCounts n;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::SingleQubit: ++n.n_1q; break;
      case GateKind::TwoQubit: ++n.n_2q; break;
      case GateKind::Measurement: ++n.n_meas; break;
    }
  }
  return n;
}

OperationCounts teleport_counts(long long hops) {
  return {3 * hops, 4 * hops, 2 * hops, hops};
}

double operational_fidelity(const OperationCounts& counts, const NoiseParams& np) {
  if (!(np.delta_improv >= 1.0)) throw std::invalid_argument("delta_improv must be >= 1");
  auto survive = [&](long long n, double e) {
    if (n < 0) throw std::invalid_argument("negative operation count");
    return static_cast<double>(n) * std::log1p(-e / np.delta_improv);
  };
  return std::exp(survive(counts.n_1q, np.e_1q) + survive(counts.n_2q, np.e_2q) +
                  survive(counts.n_meas, np.e_meas) + survive(counts.n_epr, np.e_epr));
}

std::pair<TimingParams, NoiseParams> apply_improvement(const TimingParams& p,
                                                       const NoiseParams& np, double delta) {
  if (!(delta >= 1.0)) throw std::invalid_argument("improvement factor must be >= 1");
  TimingParams tp = p;
  tp.t_1q /= delta;
  tp.t_2q /= delta;
  tp.t_meas /= delta;
  tp.t_epr /= delta;
  NoiseParams nq = np;
  nq.e_1q /= delta;
  nq.e_2q /= delta;
  nq.e_meas /= delta;
  nq.e_epr /= delta;
  return {tp, nq};
}

FidelityReport estimate(const ScheduleResult& sr, const OperationCounts& counts,
                        const NoiseParams& np) {
  FidelityReport r;
  r.makespan_ns = sr.makespan_ns;
  r.counts = counts;
  r.coherence = coherence(sr.makespan_ns, np.t1_ns, np.t2_ns);
  r.operational = operational_fidelity(counts, np);
  r.overall = r.coherence * r.operational;
  return r;
}

}  // namespace mqs
