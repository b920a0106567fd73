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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hullforge/convex_body.hpp"
#include "hullforge/polytope.hpp"
#include "hullforge/sphere_net.hpp"

namespace hullforge {

/// Record of one approximation run. Optional fields are absent when the
/// quantity is undefined: no support oracle for the body, or a net outside
/// the regime where the accuracy guarantee applies.
struct ApproxReport {
  int d = 0;
  int64_t m = 0;
  double beta = 1.0;
  double eps_net = 0.0;
  std::optional<double> delta_measured;
  std::optional<double> delta_bound_thm1;
  double delta_bound_thm3 = 0.0;
  double runtime_seconds = 0.0;
  /// Additive error bound of delta_measured (it is a lower estimate).
  std::optional<double> measurement_error;
};

/// max over u in the direction net of h_P(u) - h_C(u).
///
/// For C inside P the supremum of this gap over the whole sphere equals the
/// Hausdorff distance, so the value is a lower estimate whose additive error
/// is at most (R_P + R_C) * eps of the direction net. Throws kUnbounded when
/// P is open in one of the directions and kUnsupported when the body has no
/// support oracle.
double HausdorffOuterEstimate(const ConvexBody& body, const HPolytope& polytope,
                              const SphericalNet& directions);

/// Upper bound of the error of HausdorffOuterEstimate for the same inputs.
double HausdorffEstimateErrorBound(const ConvexBody& body, const HPolytope& polytope,
                                   const SphericalNet& directions);

/// Polar grid at four times the resolution a net of covering radius
/// `construction_eps` would need.
SphericalNet MeasurementNet(int dim, double construction_eps, int refinement = 4);

/// sec(pi / k) - 1: Hausdorff distance between the unit disk and its
/// circumscribed regular k-gon.
double AnalyticDeltaDiskKgon(int k);

struct RateFit {
  double slope;
  double intercept;
  double r_squared;
  std::vector<std::pair<double, double>> points;
};

/// Least squares of ln(delta) on ln(m). Requires three or more points with
/// strictly increasing m; any delta <= 0 raises kDegenerateFit.
RateFit FitRate(const std::vector<std::pair<double, double>>& points);

/// Deterministic sample of body points: half are projections of seeded
/// exterior points (boundary points), half lie between those and an interior
/// reference point.
std::vector<Vector> SampleBodyPoints(const ConvexBody& body, int count, uint64_t seed);

}  // namespace hullforge
