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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hullforge/error.hpp"
#include "hullforge/metrics.hpp"
#include "util/parallel.hpp"

namespace hullforge {
namespace {

struct GapScan {
  double max_gap;
  double max_polytope_support;
};

GapScan ScanSupportGap(const ConvexBody& body, const HPolytope& polytope,
                       const SphericalNet& directions) {
  if (!body.has_support()) {
    Fail(ErrorCode::kUnsupported, "Hausdorff estimate needs a support oracle for the body");
  }
  if (polytope.dim() != body.dim() || directions.dim() != body.dim()) {
    Fail(ErrorCode::kInvalidArgument, "dimension mismatch in Hausdorff estimate");
  }
  const size_t workers = static_cast<size_t>(detail::WorkerCount());
  std::vector<GapScan> partial(workers, {-std::numeric_limits<double>::infinity(),
                                         -std::numeric_limits<double>::infinity()});
  detail::ParallelChunks(directions.size(), [&](size_t begin, size_t end, size_t w) {
    if (begin == end) return;
    SupportEvaluator evaluator(polytope);
    GapScan scan = partial[w];
    for (size_t i = begin; i < end; ++i) {
      const Vector& u = directions[i];
      const double hp = evaluator.Value(u);
      scan.max_gap = std::max(scan.max_gap, hp - SupportBody(body, u));
      scan.max_polytope_support = std::max(scan.max_polytope_support, hp);
    }
    partial[w] = scan;
  });
  GapScan out = partial.front();
  for (const auto& s : partial) {
    out.max_gap = std::max(out.max_gap, s.max_gap);
    out.max_polytope_support = std::max(out.max_polytope_support, s.max_polytope_support);
  }
  return out;
}

}  // namespace

double HausdorffOuterEstimate(const ConvexBody& body, const HPolytope& polytope,
                              const SphericalNet& directions) {
  return std::max(0.0, ScanSupportGap(body, polytope, directions).max_gap);
}

double HausdorffEstimateErrorBound(const ConvexBody& body, const HPolytope& polytope,
                                   const SphericalNet& directions) {
  const double eps = directions.eps_bound();
  const GapScan scan = ScanSupportGap(body, polytope, directions);
  // A point x of norm R_P has a net direction within angle a of x / |x|,
  // cos a = 1 - eps^2 / 2, so the sampled supports reach R_P cos a.
  const double cos_a = 1.0 - 0.5 * eps * eps;
  const double polytope_radius =
      cos_a > 0.0 ? std::max(0.0, scan.max_polytope_support) / cos_a
                  : std::numeric_limits<double>::infinity();
  return (polytope_radius + body.outer_radius()) * eps;
}

SphericalNet MeasurementNet(int dim, double construction_eps, int refinement) {
  if (refinement < 1) Fail(ErrorCode::kInvalidArgument, "refinement must be positive");
  return PolarGridNet(dim, refinement * PolarResolutionFor(dim, construction_eps));
}

double AnalyticDeltaDiskKgon(int k) {
  if (k < 3) Fail(ErrorCode::kInvalidArgument, "k-gon needs k >= 3");
  return 1.0 / std::cos(std::numbers::pi / k) - 1.0;
}

std::vector<Vector> SampleBodyPoints(const ConvexBody& body, int count, uint64_t seed) {
  const int dim = body.dim();
  const Vector origin = Vector::Zero(dim);
  const Vector reference = NearestPoint(body, origin);
  const double radius = 2.0 * body.outer_radius() + 1.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    Vector g(dim);
    do {
      for (int j = 0; j < dim; ++j) g(j) = normal(rng);
    } while (g.norm() < 1e-12);
    const Vector boundary = NearestPoint(body, radius * g.normalized());
    if (i % 2 == 0) {
      out.push_back(boundary);
    } else {
      out.push_back(reference + unit(rng) * (boundary - reference));
    }
  }
  return out;
}

}  // namespace hullforge
