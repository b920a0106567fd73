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

#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "hullforge/vector.hpp"

namespace hullforge {

/// Default tolerance for containment checks on projected points.
inline constexpr double kContainmentTol = 1e-9;

/// Iteration caps and stopping thresholds of the iterative projections.
struct ProjectionSettings {
  double ellipsoid_multiplier_tol = 1e-12;
  int ellipsoid_max_iterations = 200;
  double polytope_gap_tol = 1e-10;
  int polytope_max_iterations = 10000;
  double dykstra_step_tol = 1e-11;
  int dykstra_max_sweeps = 5000;
};

class ConvexBody;

struct Ball {
  Vector center;
  double radius;
};

/// Axis-aligned ellipsoid sum(((x - center)_i / semiaxes_i)^2) <= 1.
struct Ellipsoid {
  Vector center;
  Vector semiaxes;
};

struct Box {
  Vector lo;
  Vector hi;
};

/// Convex hull of a finite vertex list; columns of `vertices` are points.
struct VPolytope {
  Eigen::MatrixXd vertices;
};

struct Intersection {
  std::vector<ConvexBody> members;
};

/// Nonempty compact convex body. Construction validates the parameters and
/// records a radius R such that the body lies in the origin-centered ball of
/// radius R.
class ConvexBody {
 public:
  using Kind = std::variant<Ball, Ellipsoid, Box, VPolytope, Intersection>;

  static ConvexBody MakeBall(Vector center, double radius);
  static ConvexBody MakeEllipsoid(Vector center, Vector semiaxes);
  static ConvexBody MakeBox(Vector lo, Vector hi);
  static ConvexBody MakeVPolytope(const std::vector<Vector>& vertices);
  /// Throws kInvalidArgument when a Dykstra feasibility probe finds the
  /// members disjoint.
  static ConvexBody MakeIntersection(std::vector<ConvexBody> members);

  int dim() const { return dim_; }
  double outer_radius() const { return outer_radius_; }
  const Kind& kind() const { return kind_; }
  std::string_view kind_name() const;

  /// True for every kind with a closed-form or finite-max support function.
  bool has_support() const { return !std::holds_alternative<Intersection>(kind_); }

  /// Image of the body under x -> factor * x.
  ConvexBody Scaled(double factor) const;

 private:
  ConvexBody(int dim, Kind kind, double outer_radius)
      : dim_(dim), kind_(std::move(kind)), outer_radius_(outer_radius) {}

  int dim_;
  Kind kind_;
  double outer_radius_;
};

/// Nearest point of the body to an exterior point p.
///
/// Points already in the body within the containment tolerance of its
/// boundary are returned unchanged. Points deeper inside raise
/// kPointInsideBody. Iterative kinds raise kNonConvergence when their
/// iteration cap is hit before the stopping rule.
Vector Project(const ConvexBody& body, const Vector& p,
               const ProjectionSettings& settings = {});

/// Nearest point of the body to any p; p itself when p is inside.
Vector NearestPoint(const ConvexBody& body, const Vector& p,
                    const ProjectionSettings& settings = {});

/// True iff p lies within distance tol of the body. Intersections test every
/// member with the same tolerance.
bool Contains(const ConvexBody& body, const Vector& p, double tol);

struct DirectionFoot {
  Vector direction;  // unit outward normal at the foot
  Vector foot;
};

/// Foot of the projection and the unit vector from the foot towards p.
DirectionFoot DirectionMap(const ConvexBody& body, const Vector& p,
                           const ProjectionSettings& settings = {});

/// max <u, x> over the body; kUnsupported for intersections.
double SupportBody(const ConvexBody& body, const Vector& u);

}  // namespace hullforge
