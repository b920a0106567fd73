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

#include <cmath>
#include <random>
#include <vector>

#include "hullforge/vector.hpp"

namespace hullforge::testing {

inline Vector V(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline Vector RandomUnit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector g(dim);
  do {
    for (int i = 0; i < dim; ++i) g(i) = normal(rng);
  } while (g.norm() < 1e-9);
  return g.normalized();
}

/// Regular circle net of n directions starting at angle 0.
inline std::vector<Vector> CirclePoints(int n) {
  std::vector<Vector> out;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * M_PI * i / n;
    out.push_back(V({std::cos(a), std::sin(a)}));
  }
  return out;
}

}  // namespace hullforge::testing
