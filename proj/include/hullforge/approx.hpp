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

#include "hullforge/convex_body.hpp"
#include "hullforge/metrics.hpp"
#include "hullforge/polytope.hpp"
#include "hullforge/sphere_net.hpp"

namespace hullforge {

/// Settings of one outer approximation.
struct ApproxConfig {
  double beta = 1.0;
  std::optional<double> target_delta;
  /// Scale query points by the body's outer radius, so bodies outside the
  /// unit ball are accepted.
  bool rescale = false;
  /// Measure the result against the body's support function.
  bool measure = true;
  /// Refinement of the measurement direction net relative to the construction.
  int measurement_refinement = 4;
  ProjectionSettings projection;
};

/// Outer polytope from projections: every net point w is pushed out to
/// p = (1 + beta) R w and contributes the supporting halfspace at the foot
/// of p on the body, with normal (p - foot) / |p - foot|. R is 1, or the
/// body's outer radius when rescale is set. Halfspaces keep net order.
///
/// kBodyNotInUnitBall when the body may leave the unit ball and rescale is
/// off.
HPolytope BuildOuterPolytope(const ConvexBody& body, const SphericalNet& net, double beta,
                             bool rescale = false, const ProjectionSettings& settings = {});

/// Halfspaces <u, x> <= h_C(u) for every net direction u.
HPolytope SupportBaseline(const ConvexBody& body, const SphericalNet& net);

/// eps^2 / sqrt(beta^2 - eps^2) for an eps-net of the sphere of radius
/// 1 + beta; kInvalidRegime unless 0 < eps < beta.
double Theorem1Bound(double eps, double beta);

/// Accuracy of the construction from an eps-net of the unit sphere:
/// Theorem1Bound((1 + beta) eps, beta).
double Lemma1Bound(double eps_on_unit_sphere, double beta);

/// A(beta) = (1 + beta)^2 theta^(2 / (d - 1)) / beta; minimal at beta = 1.
double Theorem3Constant(double theta, int dim, double beta);

/// Largest eps < 1/2 with 4 eps^2 / sqrt(1 - 4 eps^2) <= delta.
double SelectEpsilon(double delta);

struct ApproxResult {
  HPolytope polytope;
  ApproxReport report;
};

/// Builds the outer polytope for a fixed net and fills the report.
ApproxResult Approximate(const ConvexBody& body, const SphericalNet& net,
                         const ApproxConfig& config);

/// Accuracy-driven recipe with beta = 1: the body is scaled into the unit
/// ball by its outer radius R, the net covering radius is chosen with
/// SelectEpsilon(delta / R), and offsets are scaled back. Without an explicit
/// net a polar grid of sufficient resolution is generated. kNetTooCoarse
/// when an explicit net cannot guarantee delta.
ApproxResult ApproximateToAccuracy(const ConvexBody& body, double delta,
                                   const std::optional<SphericalNet>& net = std::nullopt,
                                   const ApproxConfig& config = {});

}  // namespace hullforge
