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

#include "hullforge/error.hpp"
#include "hullforge/metrics.hpp"

namespace hullforge {

RateFit FitRate(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) Fail(ErrorCode::kInvalidArgument, "rate fit needs at least 3 points");
  for (size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].first > 0.0)) Fail(ErrorCode::kInvalidArgument, "rate fit: m must be positive");
    if (i > 0 && !(points[i].first > points[i - 1].first)) {
      Fail(ErrorCode::kInvalidArgument, "rate fit: m must be strictly increasing");
    }
    if (!(points[i].second > 0.0)) {
      Fail(ErrorCode::kDegenerateFit, "rate fit: delta must be positive");
    }
  }
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [m, delta] : points) {
    sx += std::log(m);
    sy += std::log(delta);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [m, delta] : points) {
    const double dx = std::log(m) - mx;
    const double dy = std::log(delta) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double residual = syy - fit.slope * sxy;
  fit.r_squared = syy > 0.0 ? 1.0 - std::max(0.0, residual) / syy : 1.0;
  fit.points = points;
  return fit;
}

}  // namespace hullforge
