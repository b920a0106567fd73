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

#include <chrono>
#include <cmath>
#include <optional>

#include "hullforge/approx.hpp"
#include "hullforge/error.hpp"
#include "util/parallel.hpp"

namespace hullforge {
namespace {

double QueryScale(const ConvexBody& body, bool rescale) {
  const double r = body.outer_radius();
  if (!rescale) {
    if (r > 1.0 + 1e-9) {
      Fail(ErrorCode::kBodyNotInUnitBall,
           "body outer radius " + std::to_string(r) + " exceeds 1; enable rescaling");
    }
    return 1.0;
  }
  return r > 0.0 ? r : 1.0;
}

}  // namespace

HPolytope BuildOuterPolytope(const ConvexBody& body, const SphericalNet& net, double beta,
                             bool rescale, const ProjectionSettings& settings) {
  if (!(beta > 0.0) || !std::isfinite(beta)) Fail(ErrorCode::kInvalidArgument, "beta must be positive");
  if (net.dim() != body.dim()) Fail(ErrorCode::kInvalidArgument, "net and body dimensions differ");
  const double radius = (1.0 + beta) * QueryScale(body, rescale);

  std::vector<std::optional<Halfspace>> slots(net.size());
  detail::ParallelChunks(net.size(), [&](size_t begin, size_t end, size_t) {
    for (size_t i = begin; i < end; ++i) {
      const DirectionFoot df = DirectionMap(body, radius * net[i], settings);
      slots[i].emplace(df.direction, df.direction.dot(df.foot));
    }
  });
  HPolytope out(body.dim());
  for (auto& s : slots) out.Add(std::move(*s));
  return out;
}

HPolytope SupportBaseline(const ConvexBody& body, const SphericalNet& net) {
  if (net.dim() != body.dim()) Fail(ErrorCode::kInvalidArgument, "net and body dimensions differ");
  HPolytope out(body.dim());
  for (const auto& u : net.points()) out.Add(Halfspace(u, SupportBody(body, u)));
  return out;
}

ApproxResult Approximate(const ConvexBody& body, const SphericalNet& net,
                         const ApproxConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const double scale = QueryScale(body, config.rescale);
  HPolytope polytope =
      BuildOuterPolytope(body, net, config.beta, config.rescale, config.projection);

  ApproxReport report;
  report.d = body.dim();
  report.m = static_cast<int64_t>(polytope.size());
  report.beta = config.beta;
  report.eps_net = net.eps_bound();
  if ((1.0 + config.beta) * net.eps_bound() < config.beta) {
    report.delta_bound_thm1 = scale * Lemma1Bound(net.eps_bound(), config.beta);
  }
  const double theta = EfficiencyTheta(net).theta;
  report.delta_bound_thm3 = scale * Theorem3Constant(theta, body.dim(), config.beta) /
                            std::pow(static_cast<double>(report.m), 2.0 / (body.dim() - 1));
  if (config.measure && body.has_support()) {
    const SphericalNet directions =
        MeasurementNet(body.dim(), net.eps_bound(), config.measurement_refinement);
    report.delta_measured = HausdorffOuterEstimate(body, polytope, directions);
    report.measurement_error = HausdorffEstimateErrorBound(body, polytope, directions);
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(polytope), report};
}

ApproxResult ApproximateToAccuracy(const ConvexBody& body, double delta,
                                   const std::optional<SphericalNet>& net,
                                   const ApproxConfig& config) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    Fail(ErrorCode::kInvalidArgument, "target accuracy must be positive");
  }
  // The accuracy inequality is the beta = 1 instance of the bound.
  constexpr double kBeta = 1.0;
  const double scale = QueryScale(body, true);
  const double eps = SelectEpsilon(delta / scale);

  ApproxConfig run = config;
  run.beta = kBeta;
  run.rescale = true;
  run.target_delta = delta;
  if (net) {
    if (net->dim() != body.dim()) Fail(ErrorCode::kInvalidArgument, "net and body dimensions differ");
    if ((1.0 + kBeta) * net->eps_bound() >= kBeta) {
      Fail(ErrorCode::kNetTooCoarse, "net covering radius must satisfy (1 + beta) eps < beta");
    }
    if (net->eps_bound() > eps * (1.0 + 1e-12)) {
      Fail(ErrorCode::kNetTooCoarse, "net covering radius " + std::to_string(net->eps_bound()) +
                                         " exceeds " + std::to_string(eps) +
                                         " required for the target accuracy");
    }
    return Approximate(body, *net, run);
  }
  return Approximate(body, PolarGridNet(body.dim(), PolarResolutionFor(body.dim(), eps)), run);
}

}  // namespace hullforge
