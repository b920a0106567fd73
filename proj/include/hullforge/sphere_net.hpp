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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullforge/vector.hpp"

namespace hullforge {

struct NetProvenance {
  enum class Source { kPolarGrid, kFromPolytope, kFile };
  Source source = Source::kFile;
  int polar_k = 0;   // kPolarGrid only
  std::string path;  // kFile only
};

/// Finite set of unit directions on the sphere with a guaranteed covering
/// radius: every unit vector lies within chordal distance eps_bound() of some
/// point of the net.
class SphericalNet {
 public:
  /// Validates unit norms (1e-12) and pairwise distinctness.
  SphericalNet(int dim, std::vector<Vector> points, double eps_bound, NetProvenance provenance);

  int dim() const { return dim_; }
  size_t size() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](size_t i) const { return points_[i]; }
  double eps_bound() const { return eps_bound_; }
  const NetProvenance& provenance() const { return provenance_; }

 private:
  int dim_;
  std::vector<Vector> points_;
  double eps_bound_;
  NetProvenance provenance_;
};

/// Grid in spherical coordinates: d - 2 polar angles over [0, pi] and the
/// azimuth over [0, 2 pi), all with step pi / k. Duplicate images at the poles
/// are dropped; points are ordered lexicographically by grid index.
/// eps_bound = (pi / (2 k)) sqrt(d - 1).
SphericalNet PolarGridNet(int dim, int k);

/// Smallest polar resolution k whose eps_bound does not exceed eps.
int PolarResolutionFor(int dim, double eps);

/// Constant 2 [pi^2 (d - 1) / 4]^((d - 1) / 2) bounding m eps^(d-1) for
/// polar grid nets.
double PolarGridTheta(int dim);

/// Lower estimate of the covering radius: the largest distance from a probe
/// to its nearest net point. Probes are a polar grid at four times the net's
/// resolution (halved for very large grids) plus `random_probes` seeded
/// uniform directions.
double CoveringRadiusEstimate(const SphericalNet& net, int64_t random_probes, uint64_t seed);

/// 1 - (smallest distance from the origin to a hull facet) for points on the
/// unit sphere, by brute force over all d-subsets. kDegenerateHull when the
/// origin is not strictly inside the hull. Intended for small inputs.
double DeltaInscribed(const std::vector<Vector>& vertices);

/// The vertices of an inscribed polytope form a net with covering radius
/// sqrt(2 delta), delta = DeltaInscribed(vertices).
SphericalNet NetFromPolytope(const std::vector<Vector>& vertices);

struct Efficiency {
  double theta;
  std::optional<double> eta;
};

/// theta = m eps^(d-1); eta = (G / theta)^(1 / (d - 1)) where the optimal
/// sphere covering constant G is known (d = 2, 3).
Efficiency EfficiencyTheta(const SphericalNet& net);

/// Optimal covering constant G for the sphere in E^d, when known.
std::optional<double> OptimalSphereCoveringConstant(int dim);

/// Text format: "d m eps" then m lines of d coordinates.
SphericalNet ReadNet(const std::string& path);
void WriteNet(const SphericalNet& net, const std::string& path);

}  // namespace hullforge
