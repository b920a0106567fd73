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

#include <random>

#include "hullforge/approx.hpp"
#include "hullforge/body_descriptor.hpp"
#include "hullforge/error.hpp"
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

SphericalNet Circle(int n) { return SphericalNet(2, testing::CirclePoints(n), M_PI / n, {}); }

TEST(BuildOuterPolytope, UnitDiskOctagon) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  const auto net = Circle(8);
  const auto p = BuildOuterPolytope(disk, net, 1.0);
  ASSERT_EQ(p.size(), 8u);
  for (size_t i = 0; i < 8; ++i) {
    EXPECT_LT((p[i].normal() - net[i]).norm(), 1e-15);
    EXPECT_NEAR(p[i].offset(), 1.0, 1e-15);
  }
  EXPECT_NEAR(HausdorffOuterEstimate(disk, p, MeasurementNet(2, M_PI / 8, 8)),
              0.08239220029239402, 1e-12);
}

TEST(BuildOuterPolytope, HalfRadiusDisk) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 0.5);
  const auto p = BuildOuterPolytope(disk, Circle(8), 1.0);
  for (const auto& h : p.halfspaces()) EXPECT_NEAR(h.offset(), 0.5, 1e-15);
}

TEST(BuildOuterPolytope, RejectsBodyOutsideUnitBall) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 2.0);
  EXPECT_EQ(CodeOf([&] { BuildOuterPolytope(disk, Circle(8), 1.0); }),
            ErrorCode::kBodyNotInUnitBall);
  EXPECT_EQ(BuildOuterPolytope(disk, Circle(8), 1.0, true).size(), 8u);
}

TEST(BuildOuterPolytope, RejectsDimensionMismatchAndBadBeta) {
  const auto ball = ConvexBody::MakeBall(Vector::Zero(3), 1.0);
  EXPECT_EQ(CodeOf([&] { BuildOuterPolytope(ball, Circle(8), 1.0); }),
            ErrorCode::kInvalidArgument);
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  EXPECT_EQ(CodeOf([&] { BuildOuterPolytope(disk, Circle(8), 0.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(Approximate, Disk64Gon) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  const auto r = Approximate(disk, PolarGridNet(2, 32), {});
  EXPECT_EQ(r.report.m, 64);
  ASSERT_TRUE(r.report.delta_measured.has_value());
  EXPECT_NEAR(*r.report.delta_measured, 0.0012059964703925452, 1e-9);
  ASSERT_TRUE(r.report.delta_bound_thm1.has_value());
  EXPECT_LE(*r.report.delta_measured, *r.report.delta_bound_thm1);
}

TEST(Approximate, IntersectionHasNoMeasurement) {
  const auto body = ParseBodyDescriptor("ball:1&box:0.8", 2);
  const auto r = Approximate(body, PolarGridNet(2, 16), {});
  EXPECT_FALSE(r.report.delta_measured.has_value());
  EXPECT_EQ(r.polytope.size(), 32u);
}

TEST(Approximate, OutOfRegimeHasNoTheorem1Bound) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  const auto r = Approximate(disk, PolarGridNet(2, 2), {});
  EXPECT_FALSE(r.report.delta_bound_thm1.has_value());
}

TEST(Bounds, Theorem1) {
  EXPECT_NEAR(Theorem1Bound(0.5, 1.0), 0.2886751345948129, 1e-15);
  EXPECT_NEAR(Theorem1Bound(4 * std::sin(M_PI / 128), 1.0), 0.009683118259388626, 1e-15);
  EXPECT_EQ(CodeOf([] { Theorem1Bound(1.0, 1.0); }), ErrorCode::kInvalidRegime);
  // Small-eps behaviour: bound / eps^2 tends to 1 / beta.
  EXPECT_NEAR(Theorem1Bound(1e-4, 2.0) / 1e-8, 0.5, 1e-6);
}

TEST(Bounds, Lemma1) {
  EXPECT_NEAR(Lemma1Bound(0.2, 1.0), 0.17457431218879393, 1e-15);
  EXPECT_EQ(CodeOf([] { Lemma1Bound(0.5, 1.0); }), ErrorCode::kInvalidRegime);
}

TEST(Bounds, Theorem3Constant) {
  EXPECT_NEAR(Theorem3Constant(M_PI * M_PI, 3, 1.0), 39.47841760435743, 1e-12);
  EXPECT_NEAR(Theorem3Constant(1.0, 2, 1.0), 4.0, 1e-15);
}

TEST(Bounds, SelectEpsilon) {
  EXPECT_NEAR(SelectEpsilon(0.01), 0.049875156639400044, 1e-15);
  EXPECT_NEAR(SelectEpsilon(1.0), 0.39307568887871164, 1e-15);
  EXPECT_LT(SelectEpsilon(1e6), 0.5);
  EXPECT_GT(SelectEpsilon(1e6), 0.5 - 1e-5);
  const double e = SelectEpsilon(0.01);
  EXPECT_NEAR(4 * e * e / std::sqrt(1 - 4 * e * e), 0.01, 1e-15);
  EXPECT_EQ(CodeOf([] { SelectEpsilon(0.0); }), ErrorCode::kInvalidArgument);
}

TEST(ApproximateToAccuracy, UnitDisk) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  const auto r = ApproximateToAccuracy(disk, 0.01);
  EXPECT_EQ(r.report.m, 64);
  EXPECT_NEAR(*r.report.delta_measured, 0.0012059964703925452, 1e-9);
}

TEST(ApproximateToAccuracy, RadiusFiveDisk) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 5.0);
  const auto r = ApproximateToAccuracy(disk, 0.05);
  EXPECT_LE(*r.report.delta_measured, 0.05);
  EXPECT_EQ(r.report.m, 64);
}

TEST(ApproximateToAccuracy, HugeDeltaStillContains) {
  const auto body = ConvexBody::MakeEllipsoid(Vector::Zero(2), V({0.7, 0.3}));
  const auto r = ApproximateToAccuracy(body, 10.0);
  for (const auto& x : SampleBodyPoints(body, 200, 1)) {
    EXPECT_TRUE(r.polytope.Contains(x, 1e-9));
  }
}

TEST(ApproximateToAccuracy, CoarseNetRejected) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  EXPECT_EQ(CodeOf([&] { ApproximateToAccuracy(disk, 0.01, PolarGridNet(2, 4)); }),
            ErrorCode::kNetTooCoarse);
}

TEST(SupportBaseline, DiskCoincidesWithProjection) {
  const auto disk = ConvexBody::MakeBall(Vector::Zero(2), 1.0);
  const auto a = SupportBaseline(disk, Circle(8));
  const auto b = BuildOuterPolytope(disk, Circle(8), 1.0);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_LT((a[i].normal() - b[i].normal()).norm(), 1e-12);
    EXPECT_NEAR(a[i].offset(), b[i].offset(), 1e-12);
  }
}

TEST(SupportBaseline, BoxIsExact) {
  const auto box = ConvexBody::MakeBox(V({-1, -1}), V({1, 1}));
  const auto p = SupportBaseline(box, Circle(4));
  EXPECT_NEAR(HausdorffOuterEstimate(box, p, PolarGridNet(2, 64)), 0.0, 1e-12);
}

TEST(SupportBaseline, DiagonalNetUnbounded) {
  const auto box = ConvexBody::MakeBox(V({-1, -1}), V({1, 1}));
  SphericalNet diag(2, {V({M_SQRT1_2, M_SQRT1_2}), V({-M_SQRT1_2, -M_SQRT1_2})}, 2.0, {});
  const auto p = SupportBaseline(box, diag);
  EXPECT_EQ(CodeOf([&] { SupportHPolytope(p, V({M_SQRT1_2, -M_SQRT1_2})); }),
            ErrorCode::kUnbounded);
}

TEST(ScaleEquivariance, OffsetsScaleWithBody) {
  const auto body = ConvexBody::MakeEllipsoid(V({0.1, 0, 0}), V({0.5, 0.3, 0.2}));
  const auto net = PolarGridNet(3, 5);
  const auto p1 = BuildOuterPolytope(body, net, 1.0, true);
  const auto p2 = BuildOuterPolytope(body.Scaled(1.7), net, 1.0, true);
  ASSERT_EQ(p1.size(), p2.size());
  for (size_t i = 0; i < p1.size(); ++i) {
    EXPECT_LT((p1[i].normal() - p2[i].normal()).norm(), 1e-9);
    EXPECT_NEAR(p2[i].offset(), 1.7 * p1[i].offset(), 1e-9);
  }
}

TEST(BodyDescriptor, Grammar) {
  EXPECT_EQ(ParseBodyDescriptor("ball:2", 3).outer_radius(), 2.0);
  EXPECT_EQ(ParseBodyDescriptor("ellipsoid:2,1", 2).kind_name(), std::string("ellipsoid"));
  EXPECT_EQ(ParseBodyDescriptor("box:0.5", 4).dim(), 4);
  EXPECT_EQ(ParseBodyDescriptor("box:-1,0:1,2", 2).kind_name(), std::string("box"));
  EXPECT_EQ(ParseBodyDescriptor("vpolytope:random:20", 3, 7).kind_name(),
            std::string("vpolytope"));
  EXPECT_EQ(CodeOf([] { ParseBodyDescriptor("ball:-1", 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ParseBodyDescriptor("ellipsoid:1,2,3", 2); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ParseBodyDescriptor("cone:1", 2); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace hullforge
