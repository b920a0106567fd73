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

#include "hullforge/sphere_net.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "covering/kd_tree.hpp"
#include "hullforge/error.hpp"
#include "util/parallel.hpp"

namespace hullforge {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupGrid = 1e-12;
constexpr int64_t kMaxProbeGrid = int64_t{1} << 20;

std::vector<int64_t> RoundedKey(const Vector& p) {
  std::vector<int64_t> key(static_cast<size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) key[i] = std::llround(p(i) / kDedupGrid);
  return key;
}

// Number of raw grid nodes before pole deduplication.
int64_t PolarGridNodes(int dim, int k) {
  int64_t count = 2 * static_cast<int64_t>(k);
  for (int i = 0; i < dim - 2; ++i) count *= k + 1;
  return count;
}

// Unit vector for flat grid index `index`; the azimuth index varies fastest.
void PolarGridPoint(int dim, int k, int64_t index, Vector* out) {
  Vector& x = *out;
  x.resize(dim);
  const int64_t azimuth = index % (2 * k);
  index /= 2 * k;
  std::vector<int64_t> polar(static_cast<size_t>(dim - 2));
  for (int t = dim - 3; t >= 0; --t) {
    polar[t] = index % (k + 1);
    index /= k + 1;
  }
  double s = 1.0;
  for (int t = 0; t < dim - 2; ++t) {
    const double theta = (kPi * static_cast<double>(polar[t])) / k;
    x(t) = s * std::cos(theta);
    s *= std::sin(theta);
  }
  const double phi = (kPi * static_cast<double>(azimuth)) / k;
  x(dim - 2) = s * std::cos(phi);
  x(dim - 1) = s * std::sin(phi);
}

double PolarEps(int dim, int k) {
  return kPi / (2.0 * k) * std::sqrt(static_cast<double>(dim - 1));
}

double UnitBallVolume(int dim) {
  return std::pow(kPi, dim / 2.0) / std::tgamma(dim / 2.0 + 1.0);
}

}  // namespace

SphericalNet::SphericalNet(int dim, std::vector<Vector> points, double eps_bound,
                           NetProvenance provenance)
    : dim_(dim), points_(std::move(points)), eps_bound_(eps_bound),
      provenance_(std::move(provenance)) {
  if (dim_ < 2) Fail(ErrorCode::kInvalidArgument, "net dimension must be at least 2");
  if (points_.empty()) Fail(ErrorCode::kInvalidArgument, "net must contain a point");
  if (!(eps_bound_ > 0.0) || !std::isfinite(eps_bound_)) {
    Fail(ErrorCode::kInvalidArgument, "net covering bound must be positive");
  }
  std::vector<std::vector<int64_t>> keys;
  keys.reserve(points_.size());
  for (const auto& p : points_) {
    CheckSameDim(p, dim_, "net point");
    if (std::abs(p.norm() - 1.0) > 1e-12) {
      Fail(ErrorCode::kInvalidArgument, "net points must have unit norm");
    }
    keys.push_back(RoundedKey(p));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    Fail(ErrorCode::kInvalidArgument, "net points must be pairwise distinct");
  }
}

SphericalNet PolarGridNet(int dim, int k) {
  if (dim < 2) Fail(ErrorCode::kInvalidArgument, "polar grid: dimension must be at least 2");
  if (k < 2) Fail(ErrorCode::kInvalidArgument, "polar grid: k must be at least 2");
  const int64_t nodes = PolarGridNodes(dim, k);
  std::vector<Vector> points;
  std::set<std::vector<int64_t>> seen;
  Vector x;
  for (int64_t i = 0; i < nodes; ++i) {
    PolarGridPoint(dim, k, i, &x);
    if (seen.insert(RoundedKey(x)).second) points.push_back(x.normalized());
  }
  NetProvenance provenance;
  provenance.source = NetProvenance::Source::kPolarGrid;
  provenance.polar_k = k;
  return SphericalNet(dim, std::move(points), PolarEps(dim, k), std::move(provenance));
}

int PolarResolutionFor(int dim, double eps) {
  if (dim < 2 || !(eps > 0.0)) Fail(ErrorCode::kInvalidArgument, "polar resolution: bad input");
  const double exact = kPi * std::sqrt(static_cast<double>(dim - 1)) / (2.0 * eps);
  if (exact > 1e8) Fail(ErrorCode::kInvalidArgument, "polar resolution: eps too small");
  int k = std::max(2, static_cast<int>(std::ceil(exact)));
  while (k > 2 && PolarEps(dim, k - 1) <= eps) --k;
  return k;
}

double PolarGridTheta(int dim) {
  const double n = dim - 1;
  return 2.0 * std::pow(kPi * kPi * n / 4.0, n / 2.0);
}

double CoveringRadiusEstimate(const SphericalNet& net, int64_t random_probes, uint64_t seed) {
  if (random_probes < 1) Fail(ErrorCode::kInvalidArgument, "probe count must be positive");
  const int dim = net.dim();
  const int net_k = net.provenance().source == NetProvenance::Source::kPolarGrid
                        ? net.provenance().polar_k
                        : PolarResolutionFor(dim, net.eps_bound());
  int probe_k = 4 * net_k;
  if (PolarGridNodes(dim, probe_k) > kMaxProbeGrid) probe_k = 2 * net_k;
  const int64_t grid_count = PolarGridNodes(dim, probe_k);

  Eigen::MatrixXd random(dim, random_probes);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int64_t i = 0; i < random_probes; ++i) {
    Vector g(dim);
    do {
      for (int j = 0; j < dim; ++j) g(j) = normal(rng);
    } while (g.norm() < 1e-12);
    random.col(i) = g.normalized();
  }

  const detail::KdTree tree(net.points());
  const int64_t total = grid_count + random_probes;
  std::vector<double> partial(static_cast<size_t>(detail::WorkerCount()), 0.0);
  detail::ParallelChunks(static_cast<size_t>(total), [&](size_t begin, size_t end, size_t w) {
    Vector probe;
    double worst = 0.0;
    for (size_t i = begin; i < end; ++i) {
      const int64_t idx = static_cast<int64_t>(i);
      if (idx < grid_count) {
        PolarGridPoint(dim, probe_k, idx, &probe);
      } else {
        probe = random.col(idx - grid_count);
      }
      worst = std::max(worst, tree.NearestDistance(probe));
    }
    partial[w] = worst;
  });
  return *std::max_element(partial.begin(), partial.end());
}

double DeltaInscribed(const std::vector<Vector>& vertices) {
  if (vertices.empty()) Fail(ErrorCode::kDegenerateHull, "no vertices");
  const int dim = static_cast<int>(vertices.front().size());
  if (dim < 2) Fail(ErrorCode::kInvalidArgument, "dimension must be at least 2");
  for (const auto& v : vertices) {
    CheckSameDim(v, dim, "inscribed vertex");
    if (std::abs(v.norm() - 1.0) > 1e-9) {
      Fail(ErrorCode::kInvalidArgument, "inscribed vertices must lie on the unit sphere");
    }
  }
  const int n = static_cast<int>(vertices.size());
  if (n < dim + 1) {
    Fail(ErrorCode::kDegenerateHull, "need at least d + 1 vertices for a full-dimensional hull");
  }
  constexpr double kTol = 1e-10;
  Eigen::MatrixXd all(dim, n);
  for (int i = 0; i < n; ++i) all.col(i) = vertices[i];

  double nearest_facet = std::numeric_limits<double>::infinity();
  std::vector<int> pick(dim);
  for (int i = 0; i < dim; ++i) pick[i] = i;
  Eigen::MatrixXd diffs(dim - 1, dim);
  while (true) {
    for (int r = 1; r < dim; ++r) {
      diffs.row(r - 1) = (vertices[pick[r]] - vertices[pick[0]]).transpose();
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(diffs);
    if (lu.rank() == dim - 1) {
      Vector normal = lu.kernel().col(0).normalized();
      double offset = normal.dot(vertices[pick[0]]);
      const Eigen::VectorXd heights = all.transpose() * normal;
      const bool below = heights.maxCoeff() <= offset + kTol;
      const bool above = heights.minCoeff() >= offset - kTol;
      if (below && above) Fail(ErrorCode::kDegenerateHull, "vertices lie in a hyperplane");
      if (below || above) {
        if (above) offset = -offset;
        if (offset <= kTol) {
          Fail(ErrorCode::kDegenerateHull, "origin is not strictly inside the hull");
        }
        nearest_facet = std::min(nearest_facet, offset);
      }
    }
    // Next d-subset in lexicographic order.
    int i = dim - 1;
    while (i >= 0 && pick[i] == n - dim + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!std::isfinite(nearest_facet)) Fail(ErrorCode::kDegenerateHull, "hull has no facets");
  return 1.0 - nearest_facet;
}

SphericalNet NetFromPolytope(const std::vector<Vector>& vertices) {
  const double delta = DeltaInscribed(vertices);
  NetProvenance provenance;
  provenance.source = NetProvenance::Source::kFromPolytope;
  std::vector<Vector> points;
  points.reserve(vertices.size());
  for (const auto& v : vertices) points.push_back(v.normalized());
  return SphericalNet(static_cast<int>(vertices.front().size()), std::move(points),
                      std::sqrt(2.0 * delta), std::move(provenance));
}

std::optional<double> OptimalSphereCoveringConstant(int dim) {
  // Known minimal covering densities of E^1 and E^2.
  double flat_density;
  if (dim == 2) {
    flat_density = 1.0;
  } else if (dim == 3) {
    flat_density = 2.0 * kPi / std::sqrt(27.0);
  } else {
    return std::nullopt;
  }
  return flat_density * dim * UnitBallVolume(dim) / UnitBallVolume(dim - 1);
}

Efficiency EfficiencyTheta(const SphericalNet& net) {
  const double exponent = net.dim() - 1;
  Efficiency out{static_cast<double>(net.size()) * std::pow(net.eps_bound(), exponent),
                 std::nullopt};
  if (const auto g = OptimalSphereCoveringConstant(net.dim())) {
    out.eta = std::pow(*g / out.theta, 1.0 / exponent);
  }
  return out;
}

}  // namespace hullforge
