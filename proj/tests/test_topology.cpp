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


#include <gtest/gtest.h>

#include "mqs/topology.hpp"
#include "oracles.hpp"

using namespace mqs;

namespace {
constexpr TopologyKind kAll[] = {TopologyKind::Line, TopologyKind::Ring, TopologyKind::Star,
                                 TopologyKind::Grid, TopologyKind::AllToAll};
}

TEST(Topology, Examples) {
  const auto grid = build_topology(TopologyKind::Grid, 6, 1, 64);
  EXPECT_EQ(grid.grid_dims(), std::make_pair(2, 3));
  EXPECT_EQ(grid.edges().size(), 7u);
  const auto star = build_topology(TopologyKind::Star, 5, 1, 64);
  EXPECT_EQ(star.edges().size(), 4u);
  EXPECT_EQ(star.degree(0), 4);
  EXPECT_EQ(build_topology(TopologyKind::AllToAll, 5, 1, 64).edges().size(), 10u);
  EXPECT_THROW(build_topology(TopologyKind::Ring, 2, 1, 64), std::invalid_argument);
}

TEST(Topology, EdgesMatchDefinition) {
  for (auto kind : kAll) {
    for (int n = kind == TopologyKind::Ring ? 3 : 1; n <= 40; ++n) {
      const auto g = build_topology(kind, n, 2, 64);
      const auto adj = oracle::adjacency(kind, n);
      EXPECT_EQ(static_cast<long long>(g.edges().size()), oracle::edge_count(adj));
      for (int c = 0; c < n; ++c) {
        auto nb = g.neighbors(c);
        std::sort(nb.begin(), nb.end());
        EXPECT_EQ(nb, adj[c]) << to_string(kind) << " n=" << n << " core " << c;
      }
    }
  }
}

TEST(Topology, NamesRoundTrip) {
  for (auto kind : kAll) EXPECT_EQ(topology_from_string(to_string(kind)), kind);
  EXPECT_FALSE(topology_from_string("torus"));
}

TEST(Topology, CapacityExamples) {
  EXPECT_EQ(core_capacity(build_topology(TopologyKind::Star, 9, 3, 64), 0), 16);
  const auto line = build_topology(TopologyKind::Line, 5, 1, 64);
  EXPECT_EQ(core_capacity(line, 2), 60);
  EXPECT_EQ(core_capacity(line, 0), 62);
  EXPECT_EQ(core_capacity(build_topology(TopologyKind::AllToAll, 6, 5, 64), 3), 14);
}

TEST(Topology, CapacityProperties) {
  for (auto kind : kAll) {
    for (int n = 3; n <= 16; ++n) {
      long long prev = std::numeric_limits<long long>::max();
      for (int l = 1; l <= 5; ++l) {
        const auto caps = core_capacities(build_topology(kind, n, l, 64));
        const long long sum = std::accumulate(caps.begin(), caps.end(), 0LL);
        EXPECT_LE(sum, prev);
        prev = sum;
      }
    }
  }
  for (int n = 3; n <= 10; ++n) {
    const auto g = build_topology(TopologyKind::Star, n, 1, 64);
    EXPECT_LT(core_capacity(g, 0), core_capacity(g, 1));
  }
}

TEST(Topology, MinCoresExamples) {
  EXPECT_EQ(min_cores(TopologyKind::Line, 64, 1, 256), 5);
  EXPECT_EQ(min_cores(TopologyKind::AllToAll, 64, 1, 256), 5);
  EXPECT_FALSE(min_cores(TopologyKind::AllToAll, 64, 6, 256));
}

TEST(Topology, MinCoresMatchesEnumeration) {
  for (auto kind : kAll) {
    for (int l = 1; l <= 5; ++l) {
      for (int n : {1, 16, 64, 100, 256, 300}) {
        for (int q : {16, 64}) {
          EXPECT_EQ(min_cores(kind, q, l, n, 200), oracle::min_cores(kind, q, l, n, 200))
              << to_string(kind) << " l=" << l << " n=" << n << " q=" << q;
        }
      }
    }
  }
}

TEST(Topology, DistanceExamples) {
  EXPECT_EQ(distance(build_topology(TopologyKind::Ring, 8, 1, 64), 2, 7), 3);
  EXPECT_EQ(distance(build_topology(TopologyKind::Star, 6, 1, 64), 2, 5), 2);
  EXPECT_EQ(distance(build_topology(TopologyKind::Grid, 9, 1, 64), 4, 4), 0);
}

TEST(Topology, RouteExamples) {
  EXPECT_EQ(route(build_topology(TopologyKind::Grid, 9, 1, 64), 0, 8), (std::vector<int>{0, 1, 2, 5, 8}));
  EXPECT_EQ(route(build_topology(TopologyKind::Ring, 6, 1, 64), 0, 3), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(route(build_topology(TopologyKind::AllToAll, 8, 1, 64), 2, 7), (std::vector<int>{2, 7}));
  EXPECT_THROW(route(build_topology(TopologyKind::Line, 3, 1, 64), 1, 1), std::invalid_argument);
}

TEST(Topology, RoutesAreShortestAndDeterministic) {
  for (auto kind : kAll) {
    for (int n = kind == TopologyKind::Ring ? 3 : 2; n <= 30; ++n) {
      const auto g = build_topology(kind, n, 1, 64);
      const auto adj = oracle::adjacency(kind, n);
      for (int a = 0; a < n; ++a) {
        const auto d = oracle::bfs(adj, a);
        for (int b = 0; b < n; ++b) {
          EXPECT_EQ(distance(g, a, b), d[b]);
          EXPECT_EQ(g.distances()(a, b), d[b]);
          if (a == b) continue;
          const auto r = route(g, a, b);
          ASSERT_EQ(static_cast<int>(r.size()) - 1, d[b]) << to_string(kind) << " " << a << "->" << b;
          EXPECT_EQ(r.front(), a);
          EXPECT_EQ(r.back(), b);
          for (std::size_t i = 0; i + 1 < r.size(); ++i) EXPECT_TRUE(g.has_edge(r[i], r[i + 1]));
          EXPECT_EQ(r, route(g, a, b));
        }
      }
    }
  }
}

TEST(Topology, GridXYOrder) {
  // Full rows: column moves come before row moves.
  const auto g = build_topology(TopologyKind::Grid, 16, 1, 64);
  const auto r = route(g, 12, 3);  // (3,0) -> (0,3)
  EXPECT_EQ(r, (std::vector<int>{12, 13, 14, 15, 11, 7, 3}));
}
