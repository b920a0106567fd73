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

#include <optional>
#include <vector>

#include "hullforge/linear_program.hpp"
#include "hullforge/vector.hpp"

namespace hullforge {

/// {x : <normal, x> <= offset} with a unit normal.
class Halfspace {
 public:
  /// Throws kInvalidArgument unless |normal| = 1 within 1e-12.
  Halfspace(Vector normal, double offset);

  const Vector& normal() const { return normal_; }
  double offset() const { return offset_; }
  bool Contains(const Vector& x, double tol) const {
    return normal_.dot(x) <= offset_ + tol;
  }

 private:
  Vector normal_;
  double offset_;
};

/// Finite intersection of halfspaces, kept in insertion order.
class HPolytope {
 public:
  explicit HPolytope(int dim);

  void Add(Halfspace h);
  int dim() const { return dim_; }
  size_t size() const { return halfspaces_.size(); }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const Halfspace& operator[](size_t i) const { return halfspaces_[i]; }

  bool Contains(const Vector& x, double tol) const;
  /// Same normals with every offset multiplied by factor.
  HPolytope ScaledOffsets(double factor) const;

  Eigen::MatrixXd NormalMatrix() const;
  Eigen::VectorXd Offsets() const;

 private:
  int dim_;
  std::vector<Halfspace> halfspaces_;
};

struct SupportResult {
  double value;
  Vector argmax;
};

/// Exact LP support value of the polytope in direction u together with the
/// lexicographically smallest maximizer. kUnbounded when the halfspaces do
/// not close the polytope in direction u, kInfeasible when they are empty.
SupportResult SupportHPolytope(const HPolytope& polytope, const Vector& u);

/// Repeated support queries against one polytope. Each query warm-starts from
/// the previous optimal vertex, so sweeping nearby directions in order costs
/// a few pivots per direction. Not thread-safe; copy one per worker.
class SupportEvaluator {
 public:
  explicit SupportEvaluator(const HPolytope& polytope);
  SupportEvaluator(const HPolytope& polytope, const Vector& feasible_point);

  double Value(const Vector& u) { return lp_.Maximize(u).value; }

 private:
  LinearProgram lp_;
};

}  // namespace hullforge
