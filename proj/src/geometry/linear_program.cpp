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

#include "hullforge/linear_program.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>

#include "hullforge/error.hpp"

namespace hullforge {
namespace {

constexpr double kDirectionTol = 1e-11;
constexpr double kMultiplierTol = 1e-12;
constexpr double kFeasibilityTol = 1e-12;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr int kDegenerateRunLimit = 25;

int IterationCap(int rows, int cols) { return 50 * (rows + cols) + 1000; }

}  // namespace

LinearProgram::LinearProgram(Eigen::MatrixXd a, Eigen::VectorXd b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.size() || a_.cols() < 1) {
    Fail(ErrorCode::kInvalidArgument, "linear program: shape mismatch");
  }
  const int n = dim();
  const int m = rows();

  // Phase one: minimize the largest violation s over (x, s) with
  // A x - s <= b and s >= 0, starting from x = 0.
  Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(m + 1, n + 1);
  Eigen::VectorXd b1 = Eigen::VectorXd::Zero(m + 1);
  a1.topLeftCorner(m, n) = a_;
  a1.col(n).head(m).setConstant(-1.0);
  b1.head(m) = b_;
  a1(m, n) = -1.0;
  double s0 = 0.0;
  for (int i = 0; i < m; ++i) s0 = std::max(s0, -b_(i));
  Vector start = Vector::Zero(n + 1);
  start(n) = s0;

  LinearProgram phase_one(std::move(a1), std::move(b1), start);
  Vector objective = Vector::Zero(n + 1);
  objective(n) = -1.0;
  const Solution sol = phase_one.Maximize(objective);
  const double scale = 1.0 + (m > 0 ? b_.cwiseAbs().maxCoeff() : 0.0);
  if (-sol.value > 1e-9 * scale) {
    Fail(ErrorCode::kInfeasible, "linear program: constraints are infeasible");
  }
  x_ = sol.x.head(n);
  row_norm_ = a_.rowwise().norm();
  is_active_.assign(m, 0);
}

LinearProgram::LinearProgram(Eigen::MatrixXd a, Eigen::VectorXd b,
                             const Vector& feasible)
    : a_(std::move(a)), b_(std::move(b)), x_(feasible) {
  if (a_.rows() != b_.size() || a_.cols() != feasible.size()) {
    Fail(ErrorCode::kInvalidArgument, "linear program: shape mismatch");
  }
  row_norm_ = a_.rowwise().norm();
  is_active_.assign(rows(), 0);
}

double LinearProgram::RowDot(int row, const Vector& v) const {
  if (row >= 0) return a_.row(row).dot(v);
  return pseudo_rows_[-1 - row].dot(v);
}

Vector LinearProgram::RowNormal(int row) const {
  if (row >= 0) return a_.row(row).transpose();
  return pseudo_rows_[-1 - row];
}

double LinearProgram::RowRhs(int row) const {
  if (row >= 0) return b_(row);
  return pseudo_rhs_[-1 - row];
}

// Longest feasible step from x_ along dir (Harris two-pass test). Rows
// blocking within the feasibility tolerance of the shortest step are
// candidates; the steepest one is chosen, or the smallest index in Bland
// mode. Returns -1 when nothing blocks.
int LinearProgram::RatioTest(const Vector& dir, bool bland, double* step) const {
  const Eigen::VectorXd rates = a_ * dir;
  const double dir_norm = dir.norm();
  const double x_norm = x_.norm();
  const int m = rows();
  Eigen::VectorXd slack(m);
  double limit = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    slack(j) = -1.0;
    if (is_active_[j]) continue;
    if (rates(j) <= kDirectionTol * row_norm_(j) * dir_norm) continue;
    slack(j) = std::max(0.0, b_(j) - a_.row(j).dot(x_));
    const double tol = kFeasibilityTol * (1.0 + std::abs(b_(j)) + row_norm_(j) * x_norm);
    limit = std::min(limit, (slack(j) + tol) / rates(j));
  }
  int best = -1;
  double best_rate = 0.0;
  for (int j = 0; j < m; ++j) {
    if (slack(j) < 0.0 || slack(j) / rates(j) > limit) continue;
    const double rate = rates(j) / row_norm_(j);
    if (best < 0 || (!bland && rate > best_rate)) {
      best = j;
      best_rate = rate;
    }
  }
  *step = best < 0 ? std::numeric_limits<double>::infinity() : slack(best) / rates(best);
  return best;
}

void LinearProgram::Refactor() {
  const int n = dim();
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    m.row(i) = RowNormal(active_[i]).transpose();
    rhs(i) = RowRhs(active_[i]);
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  active_inverse_ = lu.inverse();
  x_ = active_inverse_ * rhs;
}

// Moves from the current feasible point to a vertex, preferring directions
// that do not decrease <c, x>.
void LinearProgram::Crossover(const Vector& c) {
  const int n = dim();
  while (static_cast<int>(active_.size()) < n) {
    Eigen::MatrixXd basis;
    if (active_.empty()) {
      basis = Eigen::MatrixXd::Identity(n, n);
    } else {
      Eigen::MatrixXd w(active_.size(), n);
      for (size_t i = 0; i < active_.size(); ++i) {
        w.row(static_cast<Eigen::Index>(i)) = RowNormal(active_[i]).transpose();
      }
      // Orthonormal basis of the null space of the working rows.
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(w.transpose());
      const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
      basis = q.rightCols(n - static_cast<Eigen::Index>(active_.size()));
    }
    Vector dir = basis * (basis.transpose() * c);
    double step = 0.0;
    int hit = -1;
    if (dir.norm() > 1e-12 * std::max(1.0, c.norm())) {
      hit = RatioTest(dir, false, &step);
      if (hit < 0) Fail(ErrorCode::kUnbounded, "linear program: objective is unbounded");
    } else {
      dir = basis.col(0);
      hit = RatioTest(dir, false, &step);
      if (hit < 0) {
        dir = -dir;
        hit = RatioTest(dir, false, &step);
      }
    }
    if (hit < 0) {
      // The region contains the whole line x + t * dir; pin it.
      pseudo_rows_.push_back(dir);
      pseudo_rhs_.push_back(dir.dot(x_));
      active_.push_back(-static_cast<int>(pseudo_rows_.size()));
      continue;
    }
    x_ += step * dir;
    active_.push_back(hit);
    is_active_[hit] = 1;
  }
  Refactor();
}

LinearProgram::Solution LinearProgram::Maximize(const Vector& c) {
  const int n = dim();
  if (c.size() != n) Fail(ErrorCode::kInvalidArgument, "linear program: objective dimension");
  if (static_cast<int>(active_.size()) < n) Crossover(c);

  const double tol = kMultiplierTol * std::max(1.0, c.norm());
  const int cap = IterationCap(rows(), n);
  int degenerate_run = 0;
  for (int iter = 0; iter < cap; ++iter) {
    const bool bland = degenerate_run >= kDegenerateRunLimit;
    const Vector y = active_inverse_.transpose() * c;
    int leave = -1;
    bool degenerate = false;
    for (int i = 0; i < n; ++i) {
      const int row = active_[i];
      if (row < 0) {
        if (std::abs(y(i)) > tol) {
          Fail(ErrorCode::kUnbounded, "linear program: objective is unbounded");
        }
        degenerate = true;
        continue;
      }
      if (std::abs(y(i)) <= tol) degenerate = true;
      if (y(i) >= -tol) continue;
      // Dantzig pricing normally, smallest row index in Bland mode.
      if (leave < 0 || (bland ? row < active_[leave] : y(i) < y(leave))) leave = i;
    }
    if (leave < 0) return {c.dot(x_), x_, degenerate};

    const Vector dir = -active_inverse_.col(leave);
    double step = 0.0;
    const int enter = RatioTest(dir, bland, &step);
    if (enter < 0) Fail(ErrorCode::kUnbounded, "linear program: objective is unbounded");
    const Vector before = x_;
    is_active_[active_[leave]] = 0;
    is_active_[enter] = 1;
    active_[leave] = enter;
    Refactor();
    const bool moved = (x_ - before).norm() > 1e-14 * (1.0 + before.norm());
    degenerate_run = moved ? 0 : degenerate_run + 1;
  }
  Fail(ErrorCode::kNonConvergence, "linear program: pivot limit reached");
}

}  // namespace hullforge
