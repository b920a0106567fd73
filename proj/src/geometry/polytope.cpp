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

#include "hullforge/polytope.hpp"

#include <cmath>

#include "hullforge/error.hpp"

namespace hullforge {

Halfspace::Halfspace(Vector normal, double offset)
    : normal_(std::move(normal)), offset_(offset) {
  if (std::abs(normal_.norm() - 1.0) > 1e-12 || !std::isfinite(offset_)) {
    Fail(ErrorCode::kInvalidArgument, "halfspace normal must be unit length");
  }
}

HPolytope::HPolytope(int dim) : dim_(dim) {
  if (dim < 1) Fail(ErrorCode::kInvalidArgument, "polytope dimension must be positive");
}

void HPolytope::Add(Halfspace h) {
  if (h.normal().size() != dim_) {
    Fail(ErrorCode::kInvalidArgument, "halfspace dimension mismatch");
  }
  halfspaces_.push_back(std::move(h));
}

bool HPolytope::Contains(const Vector& x, double tol) const {
  for (const auto& h : halfspaces_) {
    if (!h.Contains(x, tol)) return false;
  }
  return true;
}

HPolytope HPolytope::ScaledOffsets(double factor) const {
  HPolytope out(dim_);
  for (const auto& h : halfspaces_) out.Add(Halfspace(h.normal(), factor * h.offset()));
  return out;
}

Eigen::MatrixXd HPolytope::NormalMatrix() const {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(size()), dim_);
  for (size_t i = 0; i < size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) = halfspaces_[i].normal().transpose();
  }
  return a;
}

Eigen::VectorXd HPolytope::Offsets() const {
  Eigen::VectorXd b(static_cast<Eigen::Index>(size()));
  for (size_t i = 0; i < size(); ++i) b(static_cast<Eigen::Index>(i)) = halfspaces_[i].offset();
  return b;
}

SupportResult SupportHPolytope(const HPolytope& polytope, const Vector& u) {
  CheckSameDim(u, polytope.dim(), "support direction");
  const Eigen::MatrixXd a = polytope.NormalMatrix();
  const Eigen::VectorXd b = polytope.Offsets();
  LinearProgram lp(a, b);
  const auto best = lp.Maximize(u);
  if (!best.maybe_degenerate) return {best.value, best.x};

  // The optimal face may be larger than a vertex: walk down to its
  // lexicographically smallest point one coordinate at a time.
  const int n = polytope.dim();
  const double slack = 1e-12 * (1.0 + std::abs(best.value));
  Eigen::MatrixXd a2(a.rows() + 1 + n, n);
  Eigen::VectorXd b2(b.size() + 1 + n);
  a2.topRows(a.rows()) = a;
  b2.head(b.size()) = b;
  a2.row(a.rows()) = -u.transpose();
  b2(b.size()) = -best.value + slack;
  Vector x = best.x;
  Eigen::Index rows = a.rows() + 1;
  for (int i = 0; i < n; ++i) {
    Vector coord = Vector::Zero(n);
    coord(i) = -1.0;
    try {
      LinearProgram face(a2.topRows(rows), b2.head(rows), x);
      x = face.Maximize(coord).x;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnbounded) throw;
      break;
    }
    a2.row(rows) = -coord.transpose();
    b2(rows) = x(i) + slack;
    ++rows;
  }
  return {best.value, x};
}

SupportEvaluator::SupportEvaluator(const HPolytope& polytope)
    : lp_(polytope.NormalMatrix(), polytope.Offsets()) {}

SupportEvaluator::SupportEvaluator(const HPolytope& polytope, const Vector& feasible_point)
    : lp_(polytope.NormalMatrix(), polytope.Offsets(), feasible_point) {}

}  // namespace hullforge
