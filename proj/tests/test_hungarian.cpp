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

#include <random>

#include "mqs/hungarian.hpp"
#include "oracles.hpp"

using mqs::CostMatrix;
using mqs::solve_assignment;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<double>> rows_of(const CostMatrix<double>& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}
}  // namespace

TEST(Hungarian, Diagonal) {
  CostMatrix<double> m(2, 2);
  m << 1, 2, 2, 1;
  const auto a = solve_assignment(m);
  EXPECT_EQ(a.row_to_col, (std::vector<int>{0, 1}));
  EXPECT_EQ(a.total, 2);
}

TEST(Hungarian, ForcedOffDiagonal) {
  CostMatrix<double> m(2, 2);
  m << kInf, 1, 1, kInf;
  const auto a = solve_assignment(m);
  EXPECT_EQ(a.row_to_col, (std::vector<int>{1, 0}));
  EXPECT_EQ(a.total, 2);
}

TEST(Hungarian, Infeasible) {
  CostMatrix<double> m(2, 2);
  m << 1, kInf, 2, kInf;
  EXPECT_THROW(solve_assignment(m), mqs::InfeasibleAssignment);
}

TEST(Hungarian, RejectsBadInput) {
  CostMatrix<double> tall(3, 2);
  tall.setZero();
  EXPECT_THROW(solve_assignment(tall), std::invalid_argument);
  CostMatrix<double> neg(1, 1);
  neg << -1;
  EXPECT_THROW(solve_assignment(neg), std::invalid_argument);
}

TEST(Hungarian, EmptyMatrix) {
  CostMatrix<double> m(0, 3);
  EXPECT_TRUE(solve_assignment(m).row_to_col.empty());
}

TEST(Hungarian, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int cols = 1 + static_cast<int>(rng() % 7);
    const int rows = 1 + static_cast<int>(rng() % cols);
    CostMatrix<double> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = (rng() % 5 == 0) ? kInf : static_cast<double>(rng() % 20);
    const double best = oracle::brute_force_assignment(rows_of(m));
    if (std::isinf(best)) {
      EXPECT_THROW(solve_assignment(m), mqs::InfeasibleAssignment);
      continue;
    }
    const auto a = solve_assignment(m);
    EXPECT_DOUBLE_EQ(a.total, best);
    std::vector<int> cols_used = a.row_to_col;
    std::sort(cols_used.begin(), cols_used.end());
    EXPECT_EQ(std::adjacent_find(cols_used.begin(), cols_used.end()), cols_used.end());
  }
}

TEST(Hungarian, Deterministic) {
  CostMatrix<double> m = CostMatrix<double>::Zero(4, 6);
  EXPECT_EQ(solve_assignment(m).row_to_col, solve_assignment(m).row_to_col);
}
