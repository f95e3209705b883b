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

#include <Eigen/Core>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mqs {

enum class TopologyKind { Line, Ring, Star, Grid, AllToAll };

std::string_view to_string(TopologyKind kind);
std::optional<TopologyKind> topology_from_string(std::string_view name);

/// Inter-core connectivity. Every edge carries `parallel_links` QLinks; each
/// QLink reserves one communication and one buffer qubit at both ends.
///
/// Grid cores are laid out row-major, core (r, c) at index r * cols + c. When
/// rows * cols exceeds num_cores the last row is partially filled.
class CoreGraph {
 public:
  CoreGraph(TopologyKind kind, int num_cores, int parallel_links, int qubits_per_core);

  TopologyKind kind() const { return kind_; }
  int num_cores() const { return num_cores_; }
  int parallel_links() const { return parallel_links_; }
  int qubits_per_core() const { return qubits_per_core_; }
  int total_qubits() const { return num_cores_ * qubits_per_core_; }
  /// (rows, cols); only set for Grid.
  std::optional<std::pair<int, int>> grid_dims() const { return grid_dims_; }

  /// Sorted (a < b) edge list; an edge's index orders its QLink ids.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int core) const { return adjacency_.at(core); }
  int degree(int core) const { return static_cast<int>(adjacency_.at(core).size()); }
  /// Index into edges() for the edge joining a and b, or -1.
  int edge_index(int a, int b) const;
  bool has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

  /// Hop-distance matrix; entry (a, b) equals route(a, b).size() - 1.
  const Eigen::MatrixXi& distances() const { return distances_; }

 private:
  TopologyKind kind_;
  int num_cores_;
  int parallel_links_;
  int qubits_per_core_;
  std::optional<std::pair<int, int>> grid_dims_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  Eigen::MatrixXi edge_ids_;
  Eigen::MatrixXi distances_;
};

CoreGraph build_topology(TopologyKind kind, int num_cores, int parallel_links,
                         int qubits_per_core);

/// (rows, cols) for a grid of n cores: square if possible, else one column wider.
std::pair<int, int> grid_shape(int num_cores);

/// Qubits left for computation: Q - 2 * (parallel_links * degree). May be <= 0.
int core_capacity(const CoreGraph& g, int core);
std::vector<int> core_capacities(const CoreGraph& g);

/// Smallest core count N >= 2 whose capacities are all >= 1 and sum to at
/// least num_virtual, or nullopt when no N up to max_cores qualifies.
std::optional<int> min_cores(TopologyKind kind, int qubits_per_core, int parallel_links,
                             int num_virtual, int max_cores = 1024);

int distance(const CoreGraph& g, int a, int b);

/// Minimal deterministic route from src to dst, both endpoints included.
/// Ring ties go toward increasing index; Grid routes X (column) first.
std::vector<int> route(const CoreGraph& g, int src, int dst);

}  // namespace mqs
