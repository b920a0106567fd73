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

#include "hullforge/hullforge.h"

#include <cstdio>
#include <fstream>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "hullforge/approx.hpp"
#include "hullforge/body_descriptor.hpp"
#include "hullforge/error.hpp"
#include "hullforge/metrics.hpp"
#include "hullforge/sphere_net.hpp"

struct hf_body {
  hullforge::ConvexBody body;
};

struct hf_net {
  hullforge::SphericalNet net;
};

struct hf_polytope {
  hullforge::HPolytope polytope;
};

namespace {

using hullforge::ErrorCode;
using hullforge::Vector;

thread_local std::string last_error;

hf_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return HF_INVALID_ARGUMENT;
    case ErrorCode::kPointInsideBody: return HF_POINT_INSIDE_BODY;
    case ErrorCode::kNonConvergence: return HF_NON_CONVERGENCE;
    case ErrorCode::kUnbounded: return HF_UNBOUNDED;
    case ErrorCode::kInfeasible: return HF_INFEASIBLE;
    case ErrorCode::kUnsupported: return HF_UNSUPPORTED;
    case ErrorCode::kDegenerateHull: return HF_DEGENERATE_HULL;
    case ErrorCode::kFormatError: return HF_FORMAT_ERROR;
    case ErrorCode::kIoError: return HF_IO_ERROR;
    case ErrorCode::kInvalidRegime: return HF_INVALID_REGIME;
    case ErrorCode::kBodyNotInUnitBall: return HF_BODY_NOT_IN_UNIT_BALL;
    case ErrorCode::kNetTooCoarse: return HF_NET_TOO_COARSE;
    case ErrorCode::kDegenerateFit: return HF_DEGENERATE_FIT;
  }
  return HF_INTERNAL_ERROR;
}

template <class F>
hf_status Guard(F&& f) {
  try {
    last_error.clear();
    f();
    return HF_OK;
  } catch (const hullforge::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HF_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HF_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return HF_INTERNAL_ERROR;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) hullforge::Fail(ErrorCode::kInvalidArgument, what);
}

Vector Read(const double* data, int dim) {
  Require(data != nullptr, "null vector argument");
  Require(dim >= 1, "dimension must be positive");
  return Eigen::Map<const Vector>(data, dim);
}

void Write(const Vector& v, double* out) {
  if (out != nullptr) Eigen::Map<Vector>(out, v.size()) = v;
}

std::vector<Vector> ReadPoints(int dim, size_t count, const double* data) {
  Require(data != nullptr || count == 0, "null point list");
  std::vector<Vector> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(Read(data + i * static_cast<size_t>(dim), dim));
  return out;
}

void FillReport(const hullforge::ApproxReport& r, hf_report* out) {
  if (out == nullptr) return;
  *out = hf_report{};
  out->d = r.d;
  out->m = r.m;
  out->beta = r.beta;
  out->eps_net = r.eps_net;
  out->has_delta_measured = r.delta_measured.has_value();
  out->delta_measured = r.delta_measured.value_or(0.0);
  out->has_delta_bound_thm1 = r.delta_bound_thm1.has_value();
  out->delta_bound_thm1 = r.delta_bound_thm1.value_or(0.0);
  out->delta_bound_thm3 = r.delta_bound_thm3;
  out->runtime_seconds = r.runtime_seconds;
  out->has_measurement_error = r.measurement_error.has_value();
  out->measurement_error = r.measurement_error.value_or(0.0);
}

}  // namespace

extern "C" {

const char* hf_last_error(void) { return last_error.c_str(); }

const char* hf_status_name(hf_status status) {
  switch (status) {
    case HF_OK: return "Ok";
    case HF_INVALID_ARGUMENT: return "InvalidArgument";
    case HF_POINT_INSIDE_BODY: return "PointInsideBody";
    case HF_NON_CONVERGENCE: return "NonConvergence";
    case HF_UNBOUNDED: return "Unbounded";
    case HF_INFEASIBLE: return "Infeasible";
    case HF_UNSUPPORTED: return "Unsupported";
    case HF_DEGENERATE_HULL: return "DegenerateHull";
    case HF_FORMAT_ERROR: return "FormatError";
    case HF_IO_ERROR: return "IoError";
    case HF_INVALID_REGIME: return "InvalidRegime";
    case HF_BODY_NOT_IN_UNIT_BALL: return "BodyNotInUnitBall";
    case HF_NET_TOO_COARSE: return "NetTooCoarse";
    case HF_DEGENERATE_FIT: return "DegenerateFit";
    case HF_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

// Bodies ---------------------------------------------------------------------

hf_status hf_body_parse(const char* descriptor, int dim, uint64_t seed, hf_body** out) {
  return Guard([&] {
    Require(descriptor != nullptr && out != nullptr, "null argument");
    *out = new hf_body{hullforge::ParseBodyDescriptor(descriptor, dim, seed)};
  });
}

hf_status hf_body_ball(int dim, const double* center, double radius, hf_body** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new hf_body{hullforge::ConvexBody::MakeBall(Read(center, dim), radius)};
  });
}

hf_status hf_body_ellipsoid(int dim, const double* center, const double* semiaxes, hf_body** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new hf_body{
        hullforge::ConvexBody::MakeEllipsoid(Read(center, dim), Read(semiaxes, dim))};
  });
}

hf_status hf_body_box(int dim, const double* lo, const double* hi, hf_body** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new hf_body{hullforge::ConvexBody::MakeBox(Read(lo, dim), Read(hi, dim))};
  });
}

hf_status hf_body_vpolytope(int dim, size_t count, const double* vertices, hf_body** out) {
  return Guard([&] {
    Require(out != nullptr && dim >= 1, "bad argument");
    *out = new hf_body{hullforge::ConvexBody::MakeVPolytope(ReadPoints(dim, count, vertices))};
  });
}

hf_status hf_body_intersection(size_t count, const hf_body* const* members, hf_body** out) {
  return Guard([&] {
    Require(out != nullptr && members != nullptr, "null argument");
    std::vector<hullforge::ConvexBody> bodies;
    for (size_t i = 0; i < count; ++i) {
      Require(members[i] != nullptr, "null member");
      bodies.push_back(members[i]->body);
    }
    *out = new hf_body{hullforge::ConvexBody::MakeIntersection(std::move(bodies))};
  });
}

void hf_body_free(hf_body* body) { delete body; }

int hf_body_dim(const hf_body* body) { return body ? body->body.dim() : 0; }

double hf_body_outer_radius(const hf_body* body) { return body ? body->body.outer_radius() : 0.0; }

hf_status hf_body_project(const hf_body* body, const double* p, double* foot) {
  return Guard([&] {
    Require(body != nullptr && foot != nullptr, "null argument");
    Write(hullforge::Project(body->body, Read(p, body->body.dim())), foot);
  });
}

hf_status hf_body_direction_map(const hf_body* body, const double* p, double* u, double* foot) {
  return Guard([&] {
    Require(body != nullptr, "null body");
    const auto df = hullforge::DirectionMap(body->body, Read(p, body->body.dim()));
    Write(df.direction, u);
    Write(df.foot, foot);
  });
}

hf_status hf_body_contains(const hf_body* body, const double* p, double tol, int* inside) {
  return Guard([&] {
    Require(body != nullptr && inside != nullptr, "null argument");
    *inside = hullforge::Contains(body->body, Read(p, body->body.dim()), tol) ? 1 : 0;
  });
}

hf_status hf_body_support(const hf_body* body, const double* u, double* value) {
  return Guard([&] {
    Require(body != nullptr && value != nullptr, "null argument");
    *value = hullforge::SupportBody(body->body, Read(u, body->body.dim()));
  });
}

// Nets -----------------------------------------------------------------------

hf_status hf_net_polar(int dim, int k, hf_net** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new hf_net{hullforge::PolarGridNet(dim, k)};
  });
}

hf_status hf_net_from_polytope(int dim, size_t count, const double* vertices, hf_net** out) {
  return Guard([&] {
    Require(out != nullptr && dim >= 2, "bad argument");
    *out = new hf_net{hullforge::NetFromPolytope(ReadPoints(dim, count, vertices))};
  });
}

hf_status hf_net_read(const char* path, hf_net** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new hf_net{hullforge::ReadNet(path)};
  });
}

hf_status hf_net_write(const hf_net* net, const char* path) {
  return Guard([&] {
    Require(net != nullptr && path != nullptr, "null argument");
    hullforge::WriteNet(net->net, path);
  });
}

void hf_net_free(hf_net* net) { delete net; }

int hf_net_dim(const hf_net* net) { return net ? net->net.dim() : 0; }

size_t hf_net_size(const hf_net* net) { return net ? net->net.size() : 0; }

double hf_net_eps_bound(const hf_net* net) { return net ? net->net.eps_bound() : 0.0; }

hf_status hf_net_point(const hf_net* net, size_t index, double* out) {
  return Guard([&] {
    Require(net != nullptr && out != nullptr, "null argument");
    Require(index < net->net.size(), "net index out of range");
    Write(net->net[index], out);
  });
}

hf_status hf_net_covering_radius(const hf_net* net, int64_t random_probes, uint64_t seed,
                                 double* out) {
  return Guard([&] {
    Require(net != nullptr && out != nullptr, "null argument");
    *out = hullforge::CoveringRadiusEstimate(net->net, random_probes, seed);
  });
}

hf_status hf_net_efficiency(const hf_net* net, double* theta, double* eta, int* has_eta) {
  return Guard([&] {
    Require(net != nullptr, "null net");
    const auto eff = hullforge::EfficiencyTheta(net->net);
    if (theta) *theta = eff.theta;
    if (eta) *eta = eff.eta.value_or(0.0);
    if (has_eta) *has_eta = eff.eta.has_value();
  });
}

hf_status hf_delta_inscribed(int dim, size_t count, const double* vertices, double* out) {
  return Guard([&] {
    Require(out != nullptr && dim >= 2, "bad argument");
    *out = hullforge::DeltaInscribed(ReadPoints(dim, count, vertices));
  });
}

// Polytopes ------------------------------------------------------------------

hf_status hf_build_outer_polytope(const hf_body* body, const hf_net* net, double beta,
                                  int rescale, hf_polytope** out) {
  return Guard([&] {
    Require(body != nullptr && net != nullptr && out != nullptr, "null argument");
    *out = new hf_polytope{hullforge::BuildOuterPolytope(body->body, net->net, beta, rescale != 0)};
  });
}

hf_status hf_support_baseline(const hf_body* body, const hf_net* net, hf_polytope** out) {
  return Guard([&] {
    Require(body != nullptr && net != nullptr && out != nullptr, "null argument");
    *out = new hf_polytope{hullforge::SupportBaseline(body->body, net->net)};
  });
}

void hf_polytope_free(hf_polytope* polytope) { delete polytope; }

int hf_polytope_dim(const hf_polytope* polytope) { return polytope ? polytope->polytope.dim() : 0; }

size_t hf_polytope_size(const hf_polytope* polytope) {
  return polytope ? polytope->polytope.size() : 0;
}

hf_status hf_polytope_halfspace(const hf_polytope* polytope, size_t index, double* normal,
                                double* offset) {
  return Guard([&] {
    Require(polytope != nullptr, "null polytope");
    Require(index < polytope->polytope.size(), "halfspace index out of range");
    const auto& h = polytope->polytope[index];
    Write(h.normal(), normal);
    if (offset) *offset = h.offset();
  });
}

hf_status hf_polytope_support(const hf_polytope* polytope, const double* u, double* value,
                              double* argmax) {
  return Guard([&] {
    Require(polytope != nullptr, "null polytope");
    const auto r = hullforge::SupportHPolytope(polytope->polytope,
                                               Read(u, polytope->polytope.dim()));
    if (value) *value = r.value;
    Write(r.argmax, argmax);
  });
}

hf_status hf_polytope_write(const hf_polytope* polytope, const char* path) {
  return Guard([&] {
    Require(polytope != nullptr && path != nullptr, "null argument");
    std::ofstream out(path);
    if (!out) hullforge::Fail(ErrorCode::kIoError, std::string("cannot open ") + path);
    char buf[64];
    for (const auto& h : polytope->polytope.halfspaces()) {
      for (Eigen::Index j = 0; j < h.normal().size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", h.normal()(j));
        out << buf << ' ';
      }
      std::snprintf(buf, sizeof buf, "%.17g", h.offset());
      out << buf << '\n';
    }
    if (!out) hullforge::Fail(ErrorCode::kIoError, std::string("failed writing ") + path);
  });
}

// Approximation --------------------------------------------------------------

hf_status hf_approximate(const hf_body* body, const hf_net* net, double beta, int rescale,
                         int refinement, hf_polytope** polytope, hf_report* report) {
  return Guard([&] {
    Require(body != nullptr && net != nullptr, "null argument");
    hullforge::ApproxConfig config;
    config.beta = beta;
    config.rescale = rescale != 0;
    if (refinement > 0) config.measurement_refinement = refinement;
    auto result = hullforge::Approximate(body->body, net->net, config);
    FillReport(result.report, report);
    if (polytope) *polytope = new hf_polytope{std::move(result.polytope)};
  });
}

hf_status hf_approximate_to_accuracy(const hf_body* body, double delta, const hf_net* net,
                                     int refinement, hf_polytope** polytope, hf_report* report) {
  return Guard([&] {
    Require(body != nullptr, "null body");
    hullforge::ApproxConfig config;
    if (refinement > 0) config.measurement_refinement = refinement;
    std::optional<hullforge::SphericalNet> chosen;
    if (net) chosen = net->net;
    auto result = hullforge::ApproximateToAccuracy(body->body, delta, chosen, config);
    FillReport(result.report, report);
    if (polytope) *polytope = new hf_polytope{std::move(result.polytope)};
  });
}

// Bounds and metrics ---------------------------------------------------------

hf_status hf_theorem1_bound(double eps, double beta, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = hullforge::Theorem1Bound(eps, beta);
  });
}

hf_status hf_lemma1_bound(double eps, double beta, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = hullforge::Lemma1Bound(eps, beta);
  });
}

hf_status hf_theorem3_constant(double theta, int dim, double beta, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = hullforge::Theorem3Constant(theta, dim, beta);
  });
}

hf_status hf_select_epsilon(double delta, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = hullforge::SelectEpsilon(delta);
  });
}

hf_status hf_polar_resolution(int dim, double eps, int* k) {
  return Guard([&] {
    Require(k != nullptr, "null output");
    *k = hullforge::PolarResolutionFor(dim, eps);
  });
}

hf_status hf_measurement_net(int dim, double construction_eps, int refinement, hf_net** out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = new hf_net{hullforge::MeasurementNet(dim, construction_eps, refinement)};
  });
}

hf_status hf_hausdorff_outer_estimate(const hf_body* body, const hf_polytope* polytope,
                                      const hf_net* directions, double* out) {
  return Guard([&] {
    Require(body && polytope && directions && out, "null argument");
    *out = hullforge::HausdorffOuterEstimate(body->body, polytope->polytope, directions->net);
  });
}

hf_status hf_analytic_delta_disk_kgon(int k, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output");
    *out = hullforge::AnalyticDeltaDiskKgon(k);
  });
}

hf_status hf_fit_rate(size_t count, const double* m, const double* delta, hf_rate_fit* out) {
  return Guard([&] {
    Require(out != nullptr && (count == 0 || (m && delta)), "null argument");
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < count; ++i) pts.emplace_back(m[i], delta[i]);
    const auto fit = hullforge::FitRate(pts);
    *out = hf_rate_fit{fit.slope, fit.intercept, fit.r_squared};
  });
}

}  // extern "C"
