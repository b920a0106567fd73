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

#include "hullforge/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hullforge/error.hpp"
#include "hullforge/linear_program.hpp"

namespace hullforge {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPointInsideBody: return "PointInsideBody";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kDegenerateHull: return "DegenerateHull";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidRegime: return "InvalidRegime";
    case ErrorCode::kBodyNotInUnitBall: return "BodyNotInUnitBall";
    case ErrorCode::kNetTooCoarse: return "NetTooCoarse";
    case ErrorCode::kDegenerateFit: return "DegenerateFit";
  }
  return "Unknown";
}

void CheckVector(const Vector& v, const char* what) {
  if (v.size() < 2) {
    Fail(ErrorCode::kInvalidArgument, std::string(what) + ": dimension must be at least 2");
  }
  if (!v.allFinite()) {
    Fail(ErrorCode::kInvalidArgument, std::string(what) + ": coordinates must be finite");
  }
}

void CheckSameDim(const Vector& v, int dim, const char* what) {
  if (v.size() != dim) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": expected dimension " + std::to_string(dim) + ", got " +
             std::to_string(v.size()));
  }
  if (!v.allFinite()) {
    Fail(ErrorCode::kInvalidArgument, std::string(what) + ": coordinates must be finite");
  }
}

ConvexBody ConvexBody::MakeBall(Vector center, double radius) {
  CheckVector(center, "ball center");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    Fail(ErrorCode::kInvalidArgument, "ball radius must be positive");
  }
  const int dim = static_cast<int>(center.size());
  const double r = center.norm() + radius;
  return ConvexBody(dim, Ball{std::move(center), radius}, r);
}

ConvexBody ConvexBody::MakeEllipsoid(Vector center, Vector semiaxes) {
  CheckVector(center, "ellipsoid center");
  CheckSameDim(semiaxes, static_cast<int>(center.size()), "ellipsoid semiaxes");
  if (!(semiaxes.minCoeff() > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "ellipsoid semiaxes must be positive");
  }
  const int dim = static_cast<int>(center.size());
  const double r = center.norm() + semiaxes.maxCoeff();
  return ConvexBody(dim, Ellipsoid{std::move(center), std::move(semiaxes)}, r);
}

ConvexBody ConvexBody::MakeBox(Vector lo, Vector hi) {
  CheckVector(lo, "box lower corner");
  CheckSameDim(hi, static_cast<int>(lo.size()), "box upper corner");
  if (!(lo.array() < hi.array()).all()) {
    Fail(ErrorCode::kInvalidArgument, "box requires lo < hi componentwise");
  }
  const int dim = static_cast<int>(lo.size());
  const double r = lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm();
  return ConvexBody(dim, Box{std::move(lo), std::move(hi)}, r);
}

ConvexBody ConvexBody::MakeVPolytope(const std::vector<Vector>& vertices) {
  if (vertices.empty()) Fail(ErrorCode::kInvalidArgument, "vpolytope needs at least one vertex");
  CheckVector(vertices.front(), "vpolytope vertex");
  const int dim = static_cast<int>(vertices.front().size());
  Eigen::MatrixXd v(dim, static_cast<Eigen::Index>(vertices.size()));
  double r = 0.0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    CheckSameDim(vertices[i], dim, "vpolytope vertex");
    v.col(static_cast<Eigen::Index>(i)) = vertices[i];
    r = std::max(r, vertices[i].norm());
  }
  return ConvexBody(dim, VPolytope{std::move(v)}, r);
}

ConvexBody ConvexBody::MakeIntersection(std::vector<ConvexBody> members) {
  if (members.empty()) Fail(ErrorCode::kInvalidArgument, "intersection needs a member");
  const int dim = members.front().dim();
  double r = members.front().outer_radius();
  for (const auto& m : members) {
    if (m.dim() != dim) Fail(ErrorCode::kInvalidArgument, "intersection members differ in dimension");
    r = std::min(r, m.outer_radius());
  }
  ConvexBody body(dim, Intersection{std::move(members)}, r);

  // Feasibility probe: the Dykstra limit from the origin lies in every member
  // iff the members share a point.
  bool nonempty = false;
  try {
    const Vector probe = NearestPoint(body, Vector::Zero(dim));
    nonempty = Contains(body, probe, 1e-7 * (1.0 + r));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonConvergence) throw;
  }
  if (!nonempty) Fail(ErrorCode::kInvalidArgument, "intersection is empty");
  return body;
}

std::string_view ConvexBody::kind_name() const {
  struct Namer {
    std::string_view operator()(const Ball&) const { return "ball"; }
    std::string_view operator()(const Ellipsoid&) const { return "ellipsoid"; }
    std::string_view operator()(const Box&) const { return "box"; }
    std::string_view operator()(const VPolytope&) const { return "vpolytope"; }
    std::string_view operator()(const Intersection&) const { return "intersection"; }
  };
  return std::visit(Namer{}, kind_);
}

ConvexBody ConvexBody::Scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    Fail(ErrorCode::kInvalidArgument, "scale factor must be positive");
  }
  struct Scaler {
    double f;
    int dim;
    double r;
    ConvexBody operator()(const Ball& b) const { return MakeBall(f * b.center, f * b.radius); }
    ConvexBody operator()(const Ellipsoid& e) const {
      return MakeEllipsoid(f * e.center, f * e.semiaxes);
    }
    ConvexBody operator()(const Box& b) const { return MakeBox(f * b.lo, f * b.hi); }
    ConvexBody operator()(const VPolytope& v) const {
      return ConvexBody(dim, VPolytope{f * v.vertices}, f * r);
    }
    ConvexBody operator()(const Intersection& in) const {
      std::vector<ConvexBody> members;
      members.reserve(in.members.size());
      for (const auto& m : in.members) members.push_back(m.Scaled(f));
      return MakeIntersection(std::move(members));
    }
  };
  return std::visit(Scaler{factor, dim_, outer_radius_}, kind_);
}

namespace {

// Largest <u, p> - h(u) over the box |u_i| <= 1. Zero iff p is in the hull;
// otherwise it lies between the distance to the hull and sqrt(d) times it.
double SeparationGap(const VPolytope& poly, const Vector& p) {
  const int d = static_cast<int>(p.size());
  const int n = static_cast<int>(poly.vertices.cols());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 2 * d, d + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 2 * d);
  a.topLeftCorner(n, d) = poly.vertices.transpose();
  a.col(d).head(n).setConstant(-1.0);
  for (int i = 0; i < d; ++i) {
    a(n + 2 * i, i) = 1.0;
    a(n + 2 * i + 1, i) = -1.0;
    b(n + 2 * i) = 1.0;
    b(n + 2 * i + 1) = 1.0;
  }
  // (u, t) = (0, max(0, ...)) is feasible: t >= <u, v_i> = 0.
  LinearProgram lp(std::move(a), std::move(b), Vector::Zero(d + 1));
  Vector c(d + 1);
  c.head(d) = p;
  c(d) = -1.0;
  return std::max(0.0, lp.Maximize(c).value);
}

}  // namespace

bool Contains(const ConvexBody& body, const Vector& p, double tol) {
  CheckSameDim(p, body.dim(), "point");
  if (tol < 0.0) Fail(ErrorCode::kInvalidArgument, "tolerance must be non-negative");
  struct Visitor {
    const ConvexBody& body;
    const Vector& p;
    double tol;
    bool operator()(const Ball& b) const { return (p - b.center).norm() <= b.radius + tol; }
    bool operator()(const Box& b) const {
      const Vector clamped = p.cwiseMax(b.lo).cwiseMin(b.hi);
      return (p - clamped).norm() <= tol;
    }
    bool operator()(const Ellipsoid& e) const {
      const double level = ((p - e.center).array() / e.semiaxes.array()).square().sum();
      if (level <= 1.0) return true;
      if (tol == 0.0) return false;
      return (p - NearestPoint(body, p)).norm() <= tol;
    }
    bool operator()(const VPolytope& v) const {
      const double scale = 1.0 + v.vertices.cwiseAbs().maxCoeff() + p.cwiseAbs().maxCoeff();
      const double gap = SeparationGap(v, p);
      if (gap <= 1e-12 * scale || gap <= tol) return true;
      if (gap > std::sqrt(static_cast<double>(p.size())) * tol) return false;
      return (p - NearestPoint(body, p)).norm() <= tol;
    }
    bool operator()(const Intersection& in) const {
      return std::all_of(in.members.begin(), in.members.end(),
                         [&](const ConvexBody& m) { return Contains(m, p, tol); });
    }
  };
  return std::visit(Visitor{body, p, tol}, body.kind());
}

double SupportBody(const ConvexBody& body, const Vector& u) {
  CheckSameDim(u, body.dim(), "support direction");
  struct Visitor {
    const Vector& u;
    double operator()(const Ball& b) const { return u.dot(b.center) + b.radius * u.norm(); }
    double operator()(const Ellipsoid& e) const {
      return u.dot(e.center) + (e.semiaxes.array() * u.array()).matrix().norm();
    }
    double operator()(const Box& b) const {
      return (u.array() * b.lo.array()).max(u.array() * b.hi.array()).sum();
    }
    double operator()(const VPolytope& v) const { return (v.vertices.transpose() * u).maxCoeff(); }
    double operator()(const Intersection&) const {
      Fail(ErrorCode::kUnsupported, "intersection has no closed-form support function");
    }
  };
  return std::visit(Visitor{u}, body.kind());
}

}  // namespace hullforge
