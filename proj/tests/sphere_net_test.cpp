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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hullforge/error.hpp"
#include "hullforge/sphere_net.hpp"
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

std::vector<Vector> Icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vector> out;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      out.push_back(V({0, s1, s2 * phi}).normalized());
      out.push_back(V({s1, s2 * phi, 0}).normalized());
      out.push_back(V({s2 * phi, 0, s1}).normalized());
    }
  }
  return out;
}

std::vector<Vector> Tetrahedron() {
  return {V({1, 1, 1}).normalized(), V({1, -1, -1}).normalized(), V({-1, 1, -1}).normalized(),
          V({-1, -1, 1}).normalized()};
}

std::filesystem::path TempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hullforge_" + name);
}

TEST(PolarGridNet, CircleK4) {
  const auto net = PolarGridNet(2, 4);
  ASSERT_EQ(net.size(), 8u);
  EXPECT_DOUBLE_EQ(net.eps_bound(), M_PI / 8);
  for (const auto& p : net.points()) EXPECT_NEAR(p.norm(), 1.0, 1e-15);
}

TEST(PolarGridNet, SphereK8) {
  const auto net = PolarGridNet(3, 8);
  EXPECT_LE(net.size(), 128u);
  EXPECT_EQ(net.size(), 2u * 64 - 2 * 8 + 2);
  EXPECT_NEAR(net.eps_bound(), 0.2776801836348979, 1e-15);
  EXPECT_LE(EfficiencyTheta(net).theta, M_PI * M_PI);
}

TEST(PolarGridNet, PolesDeduplicated) {
  const auto net = PolarGridNet(3, 2);
  // Two poles plus the 4 azimuths on the equator.
  EXPECT_EQ(net.size(), 6u);
  for (const auto& p : net.points()) EXPECT_NEAR(p.norm(), 1.0, 1e-12);
}

TEST(PolarGridNet, RejectsBadArguments) {
  EXPECT_EQ(CodeOf([] { PolarGridNet(1, 4); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { PolarGridNet(3, 1); }), ErrorCode::kInvalidArgument);
}

TEST(PolarGridNet, ResolutionMeetsTarget) {
  for (int d = 2; d <= 4; ++d) {
    for (double eps : {0.5, 0.2, 0.1}) {
      const int k = PolarResolutionFor(d, eps);
      EXPECT_LE(PolarGridNet(d, std::max(k, 2)).eps_bound(), eps) << d;
    }
  }
  EXPECT_EQ(PolarResolutionFor(2, 0.049875156639400044), 32);
}

TEST(CoveringRadius, RegularCircleNet) {
  SphericalNet net(2, testing::CirclePoints(8), M_PI / 8, {});
  const double estimate = CoveringRadiusEstimate(net, 20000, 1);
  const double exact = 2 * std::sin(M_PI / 16);
  EXPECT_LE(estimate, exact + 1e-12);
  EXPECT_GT(estimate, exact - 1e-3);
}

TEST(CoveringRadius, SinglePointReachesAntipode) {
  SphericalNet net(2, {V({1, 0})}, 2.0, {});
  EXPECT_NEAR(CoveringRadiusEstimate(net, 1000, 0), 2.0, 1e-9);
}

TEST(CoveringRadius, DeterministicInSeed) {
  const auto net = PolarGridNet(3, 5);
  EXPECT_EQ(CoveringRadiusEstimate(net, 500, 42), CoveringRadiusEstimate(net, 500, 42));
}

TEST(DeltaInscribed, Hexagon) {
  EXPECT_NEAR(DeltaInscribed(testing::CirclePoints(6)), 0.1339745962155614, 1e-12);
}

TEST(DeltaInscribed, Tetrahedron) {
  EXPECT_NEAR(DeltaInscribed(Tetrahedron()), 2.0 / 3.0, 1e-12);
}

TEST(DeltaInscribed, Degenerate) {
  EXPECT_EQ(CodeOf([] { DeltaInscribed({V({1, 0}), V({-1, 0})}); }), ErrorCode::kDegenerateHull);
  // Origin outside the hull of a cap.
  EXPECT_EQ(CodeOf([] {
              DeltaInscribed({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}),
                              V({1, 1, 1}).normalized()});
            }),
            ErrorCode::kDegenerateHull);
}

TEST(NetFromPolytope, Icosahedron) {
  const auto net = NetFromPolytope(Icosahedron());
  EXPECT_EQ(net.size(), 12u);
  EXPECT_NEAR(DeltaInscribed(Icosahedron()), 0.205345527708234, 1e-12);
  EXPECT_NEAR(net.eps_bound(), 0.6408518201709877, 1e-12);
  EXPECT_LE(CoveringRadiusEstimate(net, 20000, 0), net.eps_bound() + 1e-12);
}

TEST(NetFromPolytope, Square) {
  const auto net = NetFromPolytope(testing::CirclePoints(4));
  EXPECT_NEAR(net.eps_bound(), 0.7653668647301797, 1e-12);
}

TEST(Efficiency, CircleAndConstants) {
  SphericalNet net(2, testing::CirclePoints(8), M_PI / 8, {});
  const auto e = EfficiencyTheta(net);
  EXPECT_NEAR(e.theta, M_PI, 1e-14);
  ASSERT_TRUE(e.eta.has_value());
  ASSERT_TRUE(OptimalSphereCoveringConstant(2).has_value());
  ASSERT_TRUE(OptimalSphereCoveringConstant(3).has_value());
  EXPECT_FALSE(OptimalSphereCoveringConstant(7).has_value());
  EXPECT_FALSE(EfficiencyTheta(PolarGridNet(7, 2)).eta.has_value());
}

TEST(NetIo, RoundTrip) {
  const auto net = PolarGridNet(3, 4);
  const auto path = TempFile("roundtrip.txt");
  WriteNet(net, path.string());
  const auto back = ReadNet(path.string());
  ASSERT_EQ(back.size(), net.size());
  EXPECT_EQ(back.eps_bound(), net.eps_bound());
  for (size_t i = 0; i < net.size(); ++i) EXPECT_EQ(back[i], net[i]);
  std::filesystem::remove(path);
}

TEST(NetIo, RejectsShortPoint) {
  const auto path = TempFile("short.txt");
  std::ofstream(path) << "2 2 0.5\n1 0\n0.5 0\n";
  EXPECT_EQ(CodeOf([&] { ReadNet(path.string()); }), ErrorCode::kFormatError);
  std::filesystem::remove(path);
}

TEST(NetIo, RejectsEmptyAndMissing) {
  const auto path = TempFile("empty.txt");
  std::ofstream(path).flush();
  EXPECT_EQ(CodeOf([&] { ReadNet(path.string()); }), ErrorCode::kFormatError);
  std::filesystem::remove(path);
  EXPECT_EQ(CodeOf([&] { ReadNet(path.string()); }), ErrorCode::kIoError);
}

TEST(SphericalNet, RejectsDuplicates) {
  EXPECT_EQ(CodeOf([] { SphericalNet(2, {V({1, 0}), V({1, 0})}, 1.0, {}); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace hullforge
