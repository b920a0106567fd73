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

// Nearest-point oracles for every body kind.

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>

#include "hullforge/convex_body.hpp"
#include "hullforge/error.hpp"

namespace hullforge {
namespace {

// Closest point of an axis-aligned ellipsoid to an exterior point. The foot is
// x_i = a_i^2 y_i / (a_i^2 + t) where the multiplier t > 0 is the root of the
// secular function f(t) = sum (a_i y_i / (a_i^2 + t))^2 - 1. f is convex and
// decreasing on t >= 0, so Newton from the left converges monotonically; the
// bracket [lo, hi] catches steps that roundoff pushes outside it.
Vector EllipsoidFoot(const Ellipsoid& e, const Vector& p, const ProjectionSettings& s) {
  const Eigen::ArrayXd y = (p - e.center).array();
  const Eigen::ArrayXd a2 = e.semiaxes.array().square();
  const Eigen::ArrayXd ay = e.semiaxes.array() * y;

  double lo = 0.0;
  double hi = e.semiaxes.maxCoeff() * y.matrix().norm();
  double t = 0.0;
  bool converged = false;
  for (int iter = 0; iter < s.ellipsoid_max_iterations; ++iter) {
    const Eigen::ArrayXd q = ay / (a2 + t);
    const double f = q.square().sum() - 1.0;
    if (f == 0.0) {
      converged = true;
      break;
    }
    if (f > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    const double df = -2.0 * (q.square() / (a2 + t)).sum();
    double next = t - f / df;
    if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - t);
    t = next;
    if (step <= s.ellipsoid_multiplier_tol * std::max(1.0, t)) {
      converged = true;
      break;
    }
  }
  if (!converged) Fail(ErrorCode::kNonConvergence, "ellipsoid projection did not converge");
  return e.center + (a2 * y / (a2 + t)).matrix();
}

// Tries to replace an approximate minimizer by the exact projection onto the
// affine hull of its support vertices. Succeeds when the affine weights are
// non-negative and the result satisfies the optimality conditions against
// every vertex.
bool PolishOnActiveFace(const Eigen::MatrixXd& v, const Eigen::VectorXd& weights,
                        const Vector& p, Vector* x) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights(i) > 0.0) support.push_back(i);
  }
  if (support.empty()) return false;
  const Vector base = v.col(support[0]);
  const Eigen::Index k = static_cast<Eigen::Index>(support.size()) - 1;
  Vector candidate = base;
  if (k > 0) {
    Eigen::MatrixXd diffs(v.rows(), k);
    for (Eigen::Index j = 0; j < k; ++j) diffs.col(j) = v.col(support[j + 1]) - base;
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(diffs);
    const Eigen::VectorXd w = cod.solve(p - base);
    if ((w.array() < -1e-12).any() || w.sum() > 1.0 + 1e-12) return false;
    candidate = base + diffs * w;
  }
  const Vector g = candidate - p;
  const double scale = 1.0 + g.norm() * (1.0 + v.cwiseAbs().maxCoeff());
  const double slack = (v.transpose() * g).minCoeff() - g.dot(candidate);
  if (slack < -1e-12 * scale) return false;
  *x = candidate;
  return true;
}

// Away-step conditional gradient on 0.5 |V w - p|^2 over the simplex of
// barycentric weights w.
Vector PolytopeFoot(const VPolytope& poly, const Vector& p, const ProjectionSettings& s) {
  const Eigen::MatrixXd& v = poly.vertices;
  const Eigen::Index n = v.cols();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  Eigen::Index start = 0;
  (v.colwise() - p).colwise().squaredNorm().minCoeff(&start);
  w(start) = 1.0;
  Vector x = v.col(start);

  bool converged = false;
  for (int iter = 0; iter < s.polytope_max_iterations; ++iter) {
    const Vector g = x - p;
    const Eigen::VectorXd dots = v.transpose() * g;
    const double gx = g.dot(x);
    Eigen::Index toward = 0;
    dots.minCoeff(&toward);
    const double fw_gap = gx - dots(toward);
    if (fw_gap <= s.polytope_gap_tol) {
      converged = true;
      break;
    }
    Eigen::Index away = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (w(i) > 0.0 && (away < 0 || dots(i) > dots(away))) away = i;
    }
    const double away_gap = dots(away) - gx;

    Vector dir;
    double max_step;
    const bool fw_step = fw_gap >= away_gap;
    if (fw_step) {
      dir = v.col(toward) - x;
      max_step = 1.0;
    } else {
      dir = x - v.col(away);
      max_step = w(away) / (1.0 - w(away));
    }
    const double dd = dir.squaredNorm();
    if (dd == 0.0) {
      converged = true;
      break;
    }
    const double step = std::clamp(-g.dot(dir) / dd, 0.0, max_step);
    if (fw_step) {
      w *= 1.0 - step;
      w(toward) += step;
    } else {
      w *= 1.0 + step;
      w(away) -= step;
      if (step == max_step) w(away) = 0.0;
    }
    w = w.cwiseMax(0.0);
    w /= w.sum();
    x = v * w;
  }

  Vector polished;
  if (PolishOnActiveFace(v, w, p, &polished)) return polished;
  if (!converged) Fail(ErrorCode::kNonConvergence, "polytope projection did not converge");
  return x;
}

Vector DykstraFoot(const Intersection& in, const Vector& p, const ProjectionSettings& s) {
  const size_t k = in.members.size();
  std::vector<Vector> increments(k, Vector::Zero(p.size()));
  Vector x = p;
  for (int sweep = 0; sweep < s.dykstra_max_sweeps; ++sweep) {
    const Vector previous = x;
    for (size_t i = 0; i < k; ++i) {
      const Vector shifted = x + increments[i];
      const Vector y = NearestPoint(in.members[i], shifted, s);
      increments[i] = shifted - y;
      x = y;
    }
    if ((x - previous).norm() < s.dykstra_step_tol) return x;
  }
  Fail(ErrorCode::kNonConvergence, "Dykstra projection did not converge");
}

// True when every point p +- h e_i lies in the body, i.e. p sits deeper than
// roughly h inside it.
bool DeepInside(const ConvexBody& body, const Vector& p, double h) {
  Vector q = p;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    for (double sign : {1.0, -1.0}) {
      q(i) = p(i) + sign * h;
      if (!Contains(body, q, 0.0)) return false;
    }
    q(i) = p(i);
  }
  return true;
}

}  // namespace

Vector NearestPoint(const ConvexBody& body, const Vector& p, const ProjectionSettings& settings) {
  CheckSameDim(p, body.dim(), "point");
  struct Visitor {
    const ConvexBody& body;
    const Vector& p;
    const ProjectionSettings& s;
    Vector operator()(const Ball& b) const {
      const Vector offset = p - b.center;
      const double dist = offset.norm();
      if (dist <= b.radius) return p;
      return b.center + (b.radius / dist) * offset;
    }
    Vector operator()(const Box& b) const { return p.cwiseMax(b.lo).cwiseMin(b.hi); }
    Vector operator()(const Ellipsoid& e) const {
      const double level = ((p - e.center).array() / e.semiaxes.array()).square().sum();
      if (level <= 1.0) return p;
      return EllipsoidFoot(e, p, s);
    }
    Vector operator()(const VPolytope& v) const {
      if (Contains(body, p, 0.0)) return p;
      return PolytopeFoot(v, p, s);
    }
    Vector operator()(const Intersection& in) const {
      if (Contains(body, p, 0.0)) return p;
      return DykstraFoot(in, p, s);
    }
  };
  return std::visit(Visitor{body, p, settings}, body.kind());
}

Vector Project(const ConvexBody& body, const Vector& p, const ProjectionSettings& settings) {
  CheckSameDim(p, body.dim(), "point");
  if (Contains(body, p, 0.0)) {
    if (DeepInside(body, p, kContainmentTol)) {
      Fail(ErrorCode::kPointInsideBody, "cannot project a point inside the body");
    }
    return p;
  }
  return NearestPoint(body, p, settings);
}

DirectionFoot DirectionMap(const ConvexBody& body, const Vector& p,
                           const ProjectionSettings& settings) {
  Vector foot = Project(body, p, settings);
  const Vector diff = p - foot;
  const double dist = diff.norm();
  if (dist == 0.0) Fail(ErrorCode::kPointInsideBody, "point lies on the body boundary");
  return {diff / dist, std::move(foot)};
}

}  // namespace hullforge
