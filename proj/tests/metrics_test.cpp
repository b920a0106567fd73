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

#include <gtest/gtest.h>

#include "hullforge/approx.hpp"
#include "hullforge/error.hpp"
#include "hullforge/metrics.hpp"
#include "test_util.hpp"

namespace hullforge {
namespace {

using testing::V;

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

HPolytope Octagon() {
  HPolytope p(2);
  for (const auto& u : testing::CirclePoints(8)) p.Add(Halfspace(u, 1.0));
  return p;
}

TEST(AnalyticDelta, Values) {
  EXPECT_NEAR(AnalyticDeltaDiskKgon(4), 0.4142135623730949, 1e-15);
  EXPECT_NEAR(AnalyticDeltaDiskKgon(8), 0.08239220029239402, 1e-15);
  EXPECT_NEAR(AnalyticDeltaDiskKgon(64), 0.0012059964703925452, 1e-15);
  EXPECT_NEAR(AnalyticDeltaDiskKgon(10000) * 2 * 1e8 / (M_PI * M_PI), 1.0, 1e-6);
  EXPECT_EQ(CodeOf([] { AnalyticDeltaDiskKgon(2); }), ErrorCode::kInvalidArgument);
}

TEST(Hausdorff, OctagonDense) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  EXPECT_NEAR(HausdorffOuterEstimate(disk, Octagon(), PolarGridNet(2, 1000)),
              0.08239220029239402, 1e-6);
}

TEST(Hausdorff, SameBoxIsZero) {
  const auto box = ConvexBody::MakeBox(V({-1, -2}), V({1, 0.5}));
  HPolytope p(2);
  p.Add(Halfspace(V({1, 0}), 1));
  p.Add(Halfspace(V({-1, 0}), 1));
  p.Add(Halfspace(V({0, 1}), 0.5));
  p.Add(Halfspace(V({0, -1}), 2));
  EXPECT_NEAR(HausdorffOuterEstimate(box, p, PolarGridNet(2, 50)), 0.0, 1e-12);
}

TEST(Hausdorff, CoarseNetIsLowerBound) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  SphericalNet four(2, testing::CirclePoints(4), M_PI / 4, {});
  EXPECT_LE(HausdorffOuterEstimate(disk, Octagon(), four), AnalyticDeltaDiskKgon(8));
}

TEST(Hausdorff, RefinementMonotoneAndWithinErrorBound) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  double previous = -1.0;
  for (int k : {2, 4, 8, 16, 32, 64}) {
    const auto net = PolarGridNet(2, k);
    const double est = HausdorffOuterEstimate(disk, Octagon(), net);
    EXPECT_GE(est, previous);
    EXPECT_GE(est + HausdorffEstimateErrorBound(disk, Octagon(), net), AnalyticDeltaDiskKgon(8));
    previous = est;
  }
}

TEST(Hausdorff, UnsupportedForIntersection) {
  const auto body = ConvexBody::MakeIntersection(
      {ConvexBody::MakeBall(Vector::Zero(2), 1.0), ConvexBody::MakeBall(V({0.2, 0}), 1.0)});
  EXPECT_EQ(CodeOf([&] { HausdorffOuterEstimate(body, Octagon(), PolarGridNet(2, 8)); }),
            ErrorCode::kUnsupported);
}

TEST(MeasurementNet, FinerThanConstruction) {
  const auto net = MeasurementNet(3, PolarGridNet(3, 6).eps_bound());
  EXPECT_LE(net.eps_bound(), PolarGridNet(3, 24).eps_bound() + 1e-15);
}

TEST(FitRate, Kgons) {
  std::vector<std::pair<double, double>> pts;
  for (int k : {8, 16, 32, 64, 128}) pts.emplace_back(k, AnalyticDeltaDiskKgon(k));
  // Pre-asymptotic: the exact least-squares slope on these five k-gons is -2.0212.
  EXPECT_NEAR(FitRate(pts).slope, -2.0212499432967084, 1e-12);
  EXPECT_NEAR(FitRate(pts).slope, -2.0, 0.025);
}

TEST(FitRate, Synthetic) {
  const auto inv = FitRate({{1, 1}, {10, 0.1}, {100, 0.01}});
  EXPECT_NEAR(inv.slope, -1.0, 1e-14);
  EXPECT_NEAR(inv.r_squared, 1.0, 1e-14);
  const auto flat = FitRate({{1, 0.5}, {10, 0.5}, {100, 0.5}});
  EXPECT_NEAR(flat.slope, 0.0, 1e-15);
}

TEST(FitRate, Errors) {
  EXPECT_EQ(CodeOf([] { FitRate({{1, 1}, {2, 0.5}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { FitRate({{1, 1}, {2, 0.0}, {3, 0.1}}); }), ErrorCode::kDegenerateFit);
  EXPECT_EQ(CodeOf([] { FitRate({{1, 1}, {1, 0.5}, {3, 0.1}}); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace hullforge
