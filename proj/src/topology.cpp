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

#include "mqs/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace mqs {

namespace {

constexpr std::pair<TopologyKind, std::string_view> kNames[] = {
    {TopologyKind::Line, "line"},
    {TopologyKind::Ring, "ring"},
    {TopologyKind::Star, "star"},
    {TopologyKind::Grid, "grid"},
    {TopologyKind::AllToAll, "all_to_all"},
};

void check_shape(TopologyKind kind, int num_cores) {
  if (num_cores < 1) throw std::invalid_argument("topology needs at least one core");
  if (kind == TopologyKind::Ring && num_cores < 3) {
    throw std::invalid_argument("ring topology needs at least 3 cores");
  }
}

// Degrees straight from the kind's definition, without materialising edges.
std::vector<int> degree_sequence(TopologyKind kind, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  if (n == 1) return deg;
  switch (kind) {
    case TopologyKind::Line:
      std::fill(deg.begin(), deg.end(), 2);
      deg.front() = deg.back() = 1;
      break;
    case TopologyKind::Ring:
      std::fill(deg.begin(), deg.end(), 2);
      break;
    case TopologyKind::Star:
      std::fill(deg.begin(), deg.end(), 1);
      deg[0] = n - 1;
      break;
    case TopologyKind::AllToAll:
      std::fill(deg.begin(), deg.end(), n - 1);
      break;
    case TopologyKind::Grid: {
      auto [rows, cols] = grid_shape(n);
      for (int i = 0; i < n; ++i) {
        const int r = i / cols;
        const int c = i % cols;
        int d = 0;
        if (c > 0) ++d;
        if (c + 1 < cols && i + 1 < n) ++d;
        if (r > 0) ++d;
        if (r + 1 < rows && i + cols < n) ++d;
        deg[i] = d;
      }
      break;
    }
  }
  return deg;
}

std::vector<std::pair<int, int>> make_edges(TopologyKind kind, int n) {
  std::vector<std::pair<int, int>> e;
  switch (kind) {
    case TopologyKind::Line:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case TopologyKind::Ring:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, n - 1);
      break;
    case TopologyKind::Star:
      for (int i = 1; i < n; ++i) e.emplace_back(0, i);
      break;
    case TopologyKind::AllToAll:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
      }
      break;
    case TopologyKind::Grid: {
      const int cols = grid_shape(n).second;
      for (int i = 0; i < n; ++i) {
        if ((i % cols) + 1 < cols && i + 1 < n) e.emplace_back(i, i + 1);
        if (i + cols < n) e.emplace_back(i, i + cols);
      }
      break;
    }
  }
  std::sort(e.begin(), e.end());
  return e;
}

int closed_form_distance(TopologyKind kind, int n, int cols, int a, int b) {
  if (a == b) return 0;
  switch (kind) {
    case TopologyKind::Line:
      return std::abs(a - b);
    case TopologyKind::Ring: {
      const int d = std::abs(a - b);
      return std::min(d, n - d);
    }
    case TopologyKind::Star:
      return (a == 0 || b == 0) ? 1 : 2;
    case TopologyKind::AllToAll:
      return 1;
    case TopologyKind::Grid:
      return std::abs(a / cols - b / cols) + std::abs(a % cols - b % cols);
  }
  return -1;
}

}  // namespace

std::string_view to_string(TopologyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<TopologyKind> topology_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  if (name == "all-to-all" || name == "alltoall") return TopologyKind::AllToAll;
  return std::nullopt;
}

std::pair<int, int> grid_shape(int num_cores) {
  if (num_cores < 1) throw std::invalid_argument("grid needs at least one core");
  int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(num_cores))));
  while (cols * cols < num_cores) ++cols;  // guard sqrt rounding
  while (cols > 1 && (cols - 1) * (cols - 1) >= num_cores) --cols;
  const int rows = (cols - 1) * cols >= num_cores ? cols - 1 : cols;
  return {std::max(rows, 1), cols};
}

CoreGraph::CoreGraph(TopologyKind kind, int num_cores, int parallel_links, int qubits_per_core)
    : kind_(kind),
      num_cores_(num_cores),
      parallel_links_(parallel_links),
      qubits_per_core_(qubits_per_core) {
  check_shape(kind, num_cores);
  if (parallel_links < 1) throw std::invalid_argument("parallel_links must be >= 1");
  if (qubits_per_core < 1) throw std::invalid_argument("qubits_per_core must be >= 1");
  if (kind == TopologyKind::Grid) grid_dims_ = grid_shape(num_cores);

  edges_ = make_edges(kind, num_cores);
  adjacency_.assign(static_cast<std::size_t>(num_cores), {});
  edge_ids_ = Eigen::MatrixXi::Constant(num_cores, num_cores, -1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    edge_ids_(a, b) = edge_ids_(b, a) = static_cast<int>(k);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  const int cols = grid_dims_ ? grid_dims_->second : 1;
  distances_ = Eigen::MatrixXi::NullaryExpr(num_cores, num_cores, [&](Eigen::Index a, Eigen::Index b) {
    return closed_form_distance(kind, num_cores, cols, static_cast<int>(a), static_cast<int>(b));
  });
}

int CoreGraph::edge_index(int a, int b) const {
  if (a < 0 || b < 0 || a >= num_cores_ || b >= num_cores_) return -1;
  return edge_ids_(a, b);
}

CoreGraph build_topology(TopologyKind kind, int num_cores, int parallel_links,
                         int qubits_per_core) {
  return CoreGraph(kind, num_cores, parallel_links, qubits_per_core);
}

int core_capacity(const CoreGraph& g, int core) {
  if (core < 0 || core >= g.num_cores()) throw std::out_of_range("core index out of range");
  return g.qubits_per_core() - 2 * g.parallel_links() * g.degree(core);
}

std::vector<int> core_capacities(const CoreGraph& g) {
  std::vector<int> caps(static_cast<std::size_t>(g.num_cores()));
  for (int c = 0; c < g.num_cores(); ++c) caps[c] = core_capacity(g, c);
  return caps;
}

std::optional<int> min_cores(TopologyKind kind, int qubits_per_core, int parallel_links,
                             int num_virtual, int max_cores) {
  if (qubits_per_core < 1 || parallel_links < 1 || num_virtual < 1) {
    throw std::invalid_argument("min_cores: arguments must be positive");
  }
  for (int n = kind == TopologyKind::Ring ? 3 : 2; n <= max_cores; ++n) {
    const auto deg = degree_sequence(kind, n);
    long long total = 0;
    int smallest = qubits_per_core;
    for (int d : deg) {
      const int cap = qubits_per_core - 2 * parallel_links * d;
      smallest = std::min(smallest, cap);
      total += cap;
    }
    if (smallest >= 1 && total >= num_virtual) return n;
    // Star centre and all-to-all cores only lose capacity as n grows.
    if (smallest < 1 && (kind == TopologyKind::Star || kind == TopologyKind::AllToAll)) break;
  }
  return std::nullopt;
}

int distance(const CoreGraph& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.num_cores() || b >= g.num_cores()) {
    throw std::out_of_range("core index out of range");
  }
  return g.distances()(a, b);
}

std::vector<int> route(const CoreGraph& g, int src, int dst) {
  const int n = g.num_cores();
  if (src < 0 || dst < 0 || src >= n || dst >= n) throw std::out_of_range("core index out of range");
  if (src == dst) throw std::invalid_argument("route: src == dst");

  std::vector<int> path{src};
  switch (g.kind()) {
    case TopologyKind::Line: {
      const int step = dst > src ? 1 : -1;
      for (int c = src + step; c != dst + step; c += step) path.push_back(c);
      break;
    }
    case TopologyKind::Ring: {
      const int fwd = ((dst - src) % n + n) % n;
      const int step = fwd <= n - fwd ? 1 : -1;
      for (int c = src; c != dst;) {
        c = ((c + step) % n + n) % n;
        path.push_back(c);
      }
      break;
    }
    case TopologyKind::Star:
      if (src != 0 && dst != 0) path.push_back(0);
      path.push_back(dst);
      break;
    case TopologyKind::AllToAll:
      path.push_back(dst);
      break;
    case TopologyKind::Grid: {
      const int cols = g.grid_dims()->second;
      int r = src / cols;
      int c = src % cols;
      const int tr = dst / cols;
      const int tc = dst % cols;
      // A source in a partial last row may not have the X-first corner cell.
      const bool y_first = r * cols + tc >= n;
      auto walk_x = [&] {
        while (c != tc) {
          c += tc > c ? 1 : -1;
          path.push_back(r * cols + c);
        }
      };
      auto walk_y = [&] {
        while (r != tr) {
          r += tr > r ? 1 : -1;
          path.push_back(r * cols + c);
        }
      };
      if (y_first) {
        walk_y();
        walk_x();
      } else {
        walk_x();
        walk_y();
      }
      break;
    }
  }
  return path;
}

}  // namespace mqs
