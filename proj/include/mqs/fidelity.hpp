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

#include <cmath>
#include <stdexcept>
#include <utility>

#include "mqs/circuit.hpp"
#include "mqs/netsim.hpp"

namespace mqs {

/// Per-operation error probabilities and coherence times (ns).
struct NoiseParams {
  double e_1q = 7.42e-5;
  double e_2q = 7e-4;
  double e_meas = 1.67e-4;
  double e_epr = 9e-3;
  double t1_ns = 1.2e6;
  double t2_ns = 1.16e6;
  /// Extra divisor applied to every error rate at evaluation time.
  double delta_improv = 1.0;

  bool operator==(const NoiseParams&) const = default;
};

struct OperationCounts {
  long long n_1q = 0;
  long long n_2q = 0;
  long long n_meas = 0;
  long long n_epr = 0;

  bool operator==(const OperationCounts&) const = default;
  OperationCounts& operator+=(const OperationCounts& o) {
    n_1q += o.n_1q;
    n_2q += o.n_2q;
    n_meas += o.n_meas;
    n_epr += o.n_epr;
    return *this;
  }
  friend OperationCounts operator+(OperationCounts a, const OperationCounts& b) { return a += b; }
};

struct FidelityReport {
  double coherence = 1;
  double operational = 1;
  double overall = 1;
  double makespan_ns = 0;
  OperationCounts counts;
};

/// C(t) = exp(-t/T1) * (exp(-t/T2) / 2 + 1/2).
template <typename Scalar>
Scalar coherence(Scalar t, Scalar t1, Scalar t2) {
  using std::exp;
  if (t < Scalar(0)) throw std::invalid_argument("coherence: negative time");
  return exp(-t / t1) * (exp(-t / t2) / Scalar(2) + Scalar(1) / Scalar(2));
}

OperationCounts circuit_counts(const Circuit& c);

/// Operations spent by `hops` teleportations: per hop one EPR pair, CNOT + H
/// + two measurements at the source, X + Z and a 3-CNOT SWAP at the target.
OperationCounts teleport_counts(long long hops);

/// Product of per-operation survival probabilities, error rates divided by
/// np.delta_improv.
double operational_fidelity(const OperationCounts& counts, const NoiseParams& np);

/// Divides every quantum duration and error rate by delta; coherence times
/// and the classical link are untouched.
std::pair<TimingParams, NoiseParams> apply_improvement(const TimingParams& p,
                                                       const NoiseParams& np, double delta);

FidelityReport estimate(const ScheduleResult& sr, const OperationCounts& counts,
                        const NoiseParams& np);

}  // namespace mqs
