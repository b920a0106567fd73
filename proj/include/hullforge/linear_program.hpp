// Copyright 2026 The HullForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <vector>

#include "hullforge/vector.hpp"

namespace hullforge {

/// Dense simplex for `maximize <c, x> subject to A x <= b` with x free.
///
/// The solver walks vertices of the feasible region: the working set holds
/// dim() linearly independent tight rows and every pivot swaps one of them
/// out. Entering and leaving rows follow Bland's smallest-index rule, so the
/// walk never cycles on degenerate vertices. A feasible vertex is found once
/// at construction; Maximize() warm-starts from the last optimal vertex,
/// which makes repeated queries with nearby objectives cheap.
///
/// Throws kInfeasible from the constructor when the region is empty and
/// kUnbounded from Maximize() when the objective has no finite maximum.
class LinearProgram {
 public:
  LinearProgram(Eigen::MatrixXd a, Eigen::VectorXd b);
  /// Skips phase one; `feasible` must satisfy every row up to roundoff.
  LinearProgram(Eigen::MatrixXd a, Eigen::VectorXd b, const Vector& feasible);

  struct Solution {
    double value;
    Vector x;
    /// Set when some tight row carries a zero multiplier, i.e. the maximizer
    /// may not be unique.
    bool maybe_degenerate;
  };

  Solution Maximize(const Vector& c);

  int dim() const { return static_cast<int>(a_.cols()); }
  int rows() const { return static_cast<int>(a_.rows()); }

 private:
  void Crossover(const Vector& c);
  void Refactor();
  double RowDot(int row, const Vector& v) const;
  Vector RowNormal(int row) const;
  double RowRhs(int row) const;
  int RatioTest(const Vector& dir, bool bland, double* step) const;

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::VectorXd row_norm_;
  Vector x_;
  // Working set. Non-negative entries index rows of a_; entry -1 - k refers
  // to pseudo_rows_[k], an equality pinned along a line contained in the
  // region.
  std::vector<int> active_;
  std::vector<char> is_active_;
  std::vector<Vector> pseudo_rows_;
  std::vector<double> pseudo_rhs_;
  Eigen::MatrixXd active_inverse_;
};

}  // namespace hullforge
