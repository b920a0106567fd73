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

#include <cmath>

#include "hullforge/approx.hpp"
#include "hullforge/error.hpp"

namespace hullforge {

double Theorem1Bound(double eps, double beta) {
  if (!(beta > 0.0) || !(eps > 0.0) || !std::isfinite(beta)) {
    Fail(ErrorCode::kInvalidArgument, "bound requires eps > 0 and beta > 0");
  }
  if (eps >= beta) Fail(ErrorCode::kInvalidRegime, "bound requires eps < beta");
  return eps * eps / std::sqrt((beta - eps) * (beta + eps));
}

double Lemma1Bound(double eps_on_unit_sphere, double beta) {
  if (!(beta > 0.0) || !(eps_on_unit_sphere > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "bound requires eps > 0 and beta > 0");
  }
  const double scaled = (1.0 + beta) * eps_on_unit_sphere;
  if (scaled >= beta) Fail(ErrorCode::kInvalidRegime, "bound requires (1 + beta) eps < beta");
  return Theorem1Bound(scaled, beta);
}

double Theorem3Constant(double theta, int dim, double beta) {
  if (!(theta > 0.0) || dim < 2 || !(beta > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "constant requires theta > 0, d >= 2, beta > 0");
  }
  return (1.0 + beta) * (1.0 + beta) * std::pow(theta, 2.0 / (dim - 1)) / beta;
}

double SelectEpsilon(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    Fail(ErrorCode::kInvalidArgument, "target accuracy must be positive");
  }
  // t = 4 eps^2 is the positive root of t^2 + delta^2 t - delta^2 = 0,
  // written without cancellation for small delta.
  const double d2 = delta * delta;
  const double t = 2.0 * d2 / (d2 + std::sqrt(d2 * d2 + 4.0 * d2));
  return 0.5 * std::sqrt(t);
}

}  // namespace hullforge
