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
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mqs {

template <typename Scalar>
using CostMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

class InfeasibleAssignment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
struct Assignment {
  std::vector<int> row_to_col;
  Scalar total{};
};

/// Minimum-cost assignment of every row to a distinct column (rows <= cols).
///
/// Shortest augmenting path with row/column potentials, O(rows^2 * cols).
/// Rows are inserted in index order and the lowest column wins every
/// comparison tie, so the result is a deterministic function of the matrix.
/// Entries may be +infinity; throws InfeasibleAssignment when no assignment
/// with finite total exists.
template <typename Derived>
Assignment<typename Derived::Scalar> solve_assignment(const Eigen::MatrixBase<Derived>& cost) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::numeric_limits<Scalar>::has_infinity, "costs must be floating point");
  const Scalar inf = std::numeric_limits<Scalar>::infinity();

  const Eigen::Index rows = cost.rows();
  const Eigen::Index cols = cost.cols();
  if (rows > cols) throw std::invalid_argument("solve_assignment: more rows than columns");
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Scalar c = cost(i, j);
      if (std::isnan(c) || c < Scalar(0)) {
        throw std::invalid_argument("solve_assignment: costs must be non-negative");
      }
    }
  }

  // 1-based potentials; column 0 is the virtual root of each search.
  std::vector<Scalar> u(rows + 1, Scalar(0)), v(cols + 1, Scalar(0));
  std::vector<Eigen::Index> match(cols + 1, 0), way(cols + 1, 0);
  std::vector<Scalar> minv(cols + 1);
  std::vector<char> used(cols + 1);

  for (Eigen::Index i = 1; i <= rows; ++i) {
    match[0] = i;
    Eigen::Index j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const Eigen::Index i0 = match[j0];
      Scalar delta = inf;
      Eigen::Index j1 = -1;
      for (Eigen::Index j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const Scalar c = cost(i0 - 1, j - 1);
        if (c != inf) {
          const Scalar cur = c - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0) {
        throw InfeasibleAssignment("solve_assignment: no finite-cost perfect assignment");
      }
      for (Eigen::Index j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] != inf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const Eigen::Index j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment<Scalar> out;
  out.row_to_col.assign(static_cast<std::size_t>(rows), -1);
  for (Eigen::Index j = 1; j <= cols; ++j) {
    if (match[j] != 0) out.row_to_col[match[j] - 1] = static_cast<int>(j - 1);
  }
  for (Eigen::Index i = 0; i < rows; ++i) out.total += cost(i, out.row_to_col[i]);
  return out;
}

}  // namespace mqs
