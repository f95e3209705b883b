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

// Independent reference implementations used as test oracles. Nothing here
// calls into the library except for plain data types.

#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "mqs/circuit.hpp"
#include "mqs/mapper.hpp"
#include "mqs/topology.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

// (rows, cols): smallest near-square lattice holding n cores.
inline std::pair<int, int> grid_dims(int n) {
  int c = 1;
  while (c * c < n) ++c;
  if ((c - 1) * c >= n) return {c - 1, c};
  return {c, c};
}

// Adjacency built straight from the topology definitions.
inline Adjacency adjacency(mqs::TopologyKind kind, int n) {
  Adjacency adj(n);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  switch (kind) {
    case mqs::TopologyKind::Line:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case mqs::TopologyKind::Ring:
      for (int i = 0; i < n; ++i) link(i, (i + 1) % n);
      break;
    case mqs::TopologyKind::Star:
      for (int i = 1; i < n; ++i) link(0, i);
      break;
    case mqs::TopologyKind::Grid: {
      auto [rows, cols] = grid_dims(n);
      (void)rows;
      for (int i = 0; i < n; ++i) {
        if ((i % cols) + 1 < cols && i + 1 < n) link(i, i + 1);
        if (i + cols < n) link(i, i + cols);
      }
      break;
    }
    case mqs::TopologyKind::AllToAll:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) link(a, b);
      break;
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

inline std::vector<int> bfs(const Adjacency& adj, int src) {
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push(v);
      }
    }
  }
  return d;
}

inline long long edge_count(const Adjacency& adj) {
  long long s = 0;
  for (const auto& v : adj) s += static_cast<long long>(v.size());
  return s / 2;
}

// Smallest N (from 2, or 3 for Ring) whose capacities are all >= 1 and sum
// to at least n; plain enumeration.
inline std::optional<int> min_cores(mqs::TopologyKind kind, int q, int l, int n, int cap = 1024) {
  for (int N = kind == mqs::TopologyKind::Ring ? 3 : 2; N <= cap; ++N) {
    const auto adj = adjacency(kind, N);
    long long total = 0;
    bool ok = true;
    for (const auto& nb : adj) {
      const long long c = q - 2LL * l * static_cast<long long>(nb.size());
      if (c < 1) ok = false;
      total += c;
    }
    if (ok && total >= n) return N;
  }
  return std::nullopt;
}

// Minimum over all injective row -> column maps.
inline double brute_force_assignment(const std::vector<std::vector<double>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0;
    for (int i = 0; i < rows; ++i) s += m[i][perm[i]];
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big coherence(Big t, Big t1, Big t2) {
  using boost::multiprecision::exp;
  return exp(-t / t1) * (exp(-t / t2) / 2 + Big(1) / 2);
}

// First locality or capacity violation found by direct counting, or "".
inline std::string placement_violation(const mqs::SlicedCircuit& sc, const Adjacency& adj, int q,
                                       int l, const std::vector<mqs::Placement>& ps) {
  if (ps.size() != sc.slices.size()) return "placement count";
  for (std::size_t s = 0; s < ps.size(); ++s) {
    const auto& qc = ps[s].qubit_core;
    if (static_cast<int>(qc.size()) != sc.circuit.num_qubits) return "qubit count";
    std::vector<int> load(adj.size(), 0);
    for (int c : qc) {
      if (c < 0 || c >= static_cast<int>(adj.size())) return "core out of range";
      ++load[c];
    }
    for (std::size_t c = 0; c < adj.size(); ++c) {
      if (load[c] > q - 2 * l * static_cast<int>(adj[c].size())) return "capacity";
    }
    for (const auto& g : sc.slices[s]) {
      if (g.qubits.size() == 2 && qc[g.qubits[0]] != qc[g.qubits[1]]) return "locality";
    }
  }
  return {};
}

// Per-qubit gate sequences; slicing must keep them.
inline std::map<int, std::vector<mqs::Gate>> per_qubit(const std::vector<mqs::Gate>& gates) {
  std::map<int, std::vector<mqs::Gate>> out;
  for (const auto& g : gates)
    for (int q : g.qubits) out[q].push_back(g);
  return out;
}

}  // namespace oracle
