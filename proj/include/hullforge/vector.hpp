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
#include <span>
#include <vector>

namespace hullforge {

/// Point or direction in d-dimensional Euclidean space.
using Vector = Eigen::VectorXd;

/// Throws kInvalidArgument unless every coordinate is finite and the size is
/// at least 2.
void CheckVector(const Vector& v, const char* what);

/// Throws kInvalidArgument when the dimensions differ.
void CheckSameDim(const Vector& v, int dim, const char* what);

inline Vector ToVector(std::span<const double> xs) {
  return Eigen::Map<const Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

inline std::vector<double> ToStd(const Vector& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace hullforge
