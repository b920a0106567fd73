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

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hullforge/hullforge.h"

namespace {

TEST(CApi, BallProjectionAndSupport) {
  hf_body* ball = nullptr;
  const double center[2] = {0, 0};
  ASSERT_EQ(hf_body_ball(2, center, 1.0, &ball), HF_OK);
  EXPECT_EQ(hf_body_dim(ball), 2);
  const double p[2] = {2, 0};
  double foot[2];
  ASSERT_EQ(hf_body_project(ball, p, foot), HF_OK);
  EXPECT_DOUBLE_EQ(foot[0], 1.0);
  EXPECT_DOUBLE_EQ(foot[1], 0.0);
  const double inner[2] = {0.1, 0.2};
  EXPECT_EQ(hf_body_project(ball, inner, foot), HF_POINT_INSIDE_BODY);
  EXPECT_NE(std::string(hf_last_error()), "");
  const double u[2] = {0, 1};
  double value = 0;
  ASSERT_EQ(hf_body_support(ball, u, &value), HF_OK);
  EXPECT_DOUBLE_EQ(value, 1.0);
  int inside = 0;
  const double q[2] = {1.001, 0};
  ASSERT_EQ(hf_body_contains(ball, q, 1e-6, &inside), HF_OK);
  EXPECT_EQ(inside, 0);
  hf_body_free(ball);
}

TEST(CApi, InvalidArguments) {
  hf_body* body = nullptr;
  const double center[2] = {0, 0};
  EXPECT_EQ(hf_body_ball(2, center, -1.0, &body), HF_INVALID_ARGUMENT);
  EXPECT_EQ(body, nullptr);
  EXPECT_EQ(hf_body_parse("cylinder:1", 3, 0, &body), HF_INVALID_ARGUMENT);
  EXPECT_EQ(hf_body_ball(2, center, 1.0, nullptr), HF_INVALID_ARGUMENT);
  hf_net* net = nullptr;
  EXPECT_EQ(hf_net_polar(1, 4, &net), HF_INVALID_ARGUMENT);
  EXPECT_STREQ(hf_status_name(HF_NET_TOO_COARSE), "NetTooCoarse");
}

TEST(CApi, ApproximateReportsAllFields) {
  hf_body* disk = nullptr;
  ASSERT_EQ(hf_body_parse("ball:1", 2, 0, &disk), HF_OK);
  hf_net* net = nullptr;
  ASSERT_EQ(hf_net_polar(2, 4, &net), HF_OK);
  EXPECT_EQ(hf_net_size(net), 8u);
  hf_polytope* poly = nullptr;
  hf_report report{};
  ASSERT_EQ(hf_approximate(disk, net, 1.0, 0, 8, &poly, &report), HF_OK);
  EXPECT_EQ(report.d, 2);
  EXPECT_EQ(report.m, 8);
  EXPECT_TRUE(report.has_delta_measured);
  EXPECT_NEAR(report.delta_measured, 0.08239220029239402, 1e-9);
  EXPECT_EQ(hf_polytope_size(poly), 8u);
  double normal[2], offset = 0;
  ASSERT_EQ(hf_polytope_halfspace(poly, 0, normal, &offset), HF_OK);
  EXPECT_NEAR(offset, 1.0, 1e-15);
  double value = 0, argmax[2];
  const double u[2] = {M_SQRT1_2, M_SQRT1_2};
  ASSERT_EQ(hf_polytope_support(poly, u, &value, argmax), HF_OK);
  EXPECT_NEAR(value, 1.0, 1e-12);
  hf_polytope_free(poly);
  hf_net_free(net);
  hf_body_free(disk);
}

TEST(CApi, ToAccuracyRejectsCoarseNet) {
  hf_body* disk = nullptr;
  ASSERT_EQ(hf_body_parse("ball:1", 2, 0, &disk), HF_OK);
  hf_net* net = nullptr;
  ASSERT_EQ(hf_net_polar(2, 4, &net), HF_OK);
  hf_polytope* poly = nullptr;
  hf_report report{};
  EXPECT_EQ(hf_approximate_to_accuracy(disk, 0.01, net, 4, &poly, &report), HF_NET_TOO_COARSE);
  EXPECT_EQ(poly, nullptr);
  ASSERT_EQ(hf_approximate_to_accuracy(disk, 0.01, nullptr, 4, &poly, &report), HF_OK);
  EXPECT_LE(report.delta_measured, 0.01);
  hf_polytope_free(poly);
  hf_net_free(net);
  hf_body_free(disk);
}

TEST(CApi, NetFileRoundTripAndErrors) {
  const std::string path = ::testing::TempDir() + "capi_net.txt";
  hf_net* net = nullptr;
  ASSERT_EQ(hf_net_polar(3, 4, &net), HF_OK);
  ASSERT_EQ(hf_net_write(net, path.c_str()), HF_OK);
  hf_net* back = nullptr;
  ASSERT_EQ(hf_net_read(path.c_str(), &back), HF_OK);
  ASSERT_EQ(hf_net_size(back), hf_net_size(net));
  std::vector<double> a(3), b(3);
  for (size_t i = 0; i < hf_net_size(net); ++i) {
    hf_net_point(net, i, a.data());
    hf_net_point(back, i, b.data());
    EXPECT_EQ(a, b);
  }
  double radius = 0;
  ASSERT_EQ(hf_net_covering_radius(back, 2000, 0, &radius), HF_OK);
  EXPECT_LE(radius, hf_net_eps_bound(back));
  EXPECT_EQ(hf_net_point(net, hf_net_size(net), a.data()), HF_INVALID_ARGUMENT);
  hf_net_free(back);
  hf_net_free(net);
  std::remove(path.c_str());
  EXPECT_EQ(hf_net_read(path.c_str(), &back), HF_IO_ERROR);
}

TEST(CApi, BoundsAndFit) {
  double v = 0;
  ASSERT_EQ(hf_theorem1_bound(0.5, 1.0, &v), HF_OK);
  EXPECT_NEAR(v, 0.2886751345948129, 1e-15);
  EXPECT_EQ(hf_theorem1_bound(1.0, 1.0, &v), HF_INVALID_REGIME);
  ASSERT_EQ(hf_select_epsilon(1.0, &v), HF_OK);
  EXPECT_NEAR(v, 0.39307568887871164, 1e-15);
  const double tetra[12] = {1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1};
  std::vector<double> unit(tetra, tetra + 12);
  for (double& x : unit) x /= std::sqrt(3.0);
  ASSERT_EQ(hf_delta_inscribed(3, 4, unit.data(), &v), HF_OK);
  EXPECT_NEAR(v, 2.0 / 3.0, 1e-12);
  const double ms[3] = {1, 10, 100}, ds[3] = {1, 0.1, 0.01};
  hf_rate_fit fit{};
  ASSERT_EQ(hf_fit_rate(3, ms, ds, &fit), HF_OK);
  EXPECT_NEAR(fit.slope, -1.0, 1e-14);
}

}  // namespace
