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

/* C interface to hullforge.
 *
 * Objects are opaque handles created by hf_*_create-style functions and
 * released with the matching hf_*_free. Every fallible call returns an
 * hf_status; on failure hf_last_error() describes the problem for the calling
 * thread. Vectors are passed as contiguous arrays of `dim` doubles; point
 * lists are row-major (point i starts at offset i * dim).
 */
#ifndef HULLFORGE_HULLFORGE_H_
#define HULLFORGE_HULLFORGE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HULLFORGE_BUILDING_LIBRARY)
#define HF_API __attribute__((visibility("default")))
#else
#define HF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_INVALID_ARGUMENT = 1,
  HF_POINT_INSIDE_BODY = 2,
  HF_NON_CONVERGENCE = 3,
  HF_UNBOUNDED = 4,
  HF_INFEASIBLE = 5,
  HF_UNSUPPORTED = 6,
  HF_DEGENERATE_HULL = 7,
  HF_FORMAT_ERROR = 8,
  HF_IO_ERROR = 9,
  HF_INVALID_REGIME = 10,
  HF_BODY_NOT_IN_UNIT_BALL = 11,
  HF_NET_TOO_COARSE = 12,
  HF_DEGENERATE_FIT = 13,
  HF_INTERNAL_ERROR = 99
} hf_status;

typedef struct hf_body hf_body;
typedef struct hf_net hf_net;
typedef struct hf_polytope hf_polytope;

/* Per-run record. has_* flags mark optional fields that were computed. */
typedef struct hf_report {
  int d;
  int64_t m;
  double beta;
  double eps_net;
  int has_delta_measured;
  double delta_measured;
  int has_delta_bound_thm1;
  double delta_bound_thm1;
  double delta_bound_thm3;
  double runtime_seconds;
  int has_measurement_error;
  double measurement_error;
} hf_report;

typedef struct hf_rate_fit {
  double slope;
  double intercept;
  double r_squared;
} hf_rate_fit;

HF_API const char* hf_last_error(void);
HF_API const char* hf_status_name(hf_status status);

/* Bodies. */
HF_API hf_status hf_body_parse(const char* descriptor, int dim, uint64_t seed, hf_body** out);
HF_API hf_status hf_body_ball(int dim, const double* center, double radius, hf_body** out);
HF_API hf_status hf_body_ellipsoid(int dim, const double* center, const double* semiaxes,
                                   hf_body** out);
HF_API hf_status hf_body_box(int dim, const double* lo, const double* hi, hf_body** out);
HF_API hf_status hf_body_vpolytope(int dim, size_t count, const double* vertices, hf_body** out);
HF_API hf_status hf_body_intersection(size_t count, const hf_body* const* members, hf_body** out);
HF_API void hf_body_free(hf_body* body);
HF_API int hf_body_dim(const hf_body* body);
HF_API double hf_body_outer_radius(const hf_body* body);
HF_API hf_status hf_body_project(const hf_body* body, const double* p, double* foot);
HF_API hf_status hf_body_direction_map(const hf_body* body, const double* p, double* u,
                                       double* foot);
HF_API hf_status hf_body_contains(const hf_body* body, const double* p, double tol, int* inside);
HF_API hf_status hf_body_support(const hf_body* body, const double* u, double* value);

/* Sphere nets. */
HF_API hf_status hf_net_polar(int dim, int k, hf_net** out);
HF_API hf_status hf_net_from_polytope(int dim, size_t count, const double* vertices, hf_net** out);
HF_API hf_status hf_net_read(const char* path, hf_net** out);
HF_API hf_status hf_net_write(const hf_net* net, const char* path);
HF_API void hf_net_free(hf_net* net);
HF_API int hf_net_dim(const hf_net* net);
HF_API size_t hf_net_size(const hf_net* net);
HF_API double hf_net_eps_bound(const hf_net* net);
HF_API hf_status hf_net_point(const hf_net* net, size_t index, double* out);
HF_API hf_status hf_net_covering_radius(const hf_net* net, int64_t random_probes, uint64_t seed,
                                        double* out);
HF_API hf_status hf_net_efficiency(const hf_net* net, double* theta, double* eta, int* has_eta);
HF_API hf_status hf_delta_inscribed(int dim, size_t count, const double* vertices, double* out);

/* Polytopes. */
HF_API hf_status hf_build_outer_polytope(const hf_body* body, const hf_net* net, double beta,
                                         int rescale, hf_polytope** out);
HF_API hf_status hf_support_baseline(const hf_body* body, const hf_net* net, hf_polytope** out);
HF_API void hf_polytope_free(hf_polytope* polytope);
HF_API int hf_polytope_dim(const hf_polytope* polytope);
HF_API size_t hf_polytope_size(const hf_polytope* polytope);
HF_API hf_status hf_polytope_halfspace(const hf_polytope* polytope, size_t index, double* normal,
                                       double* offset);
HF_API hf_status hf_polytope_support(const hf_polytope* polytope, const double* u, double* value,
                                     double* argmax);
/* One halfspace per line: u_1 ... u_d g. */
HF_API hf_status hf_polytope_write(const hf_polytope* polytope, const char* path);

/* Approximation runs. `polytope` may be NULL when only the report is wanted.
 * `refinement` is the measurement net resolution relative to the
 * construction (4 when <= 0). */
HF_API hf_status hf_approximate(const hf_body* body, const hf_net* net, double beta, int rescale,
                                int refinement, hf_polytope** polytope, hf_report* report);
/* `net` may be NULL: a polar grid of sufficient resolution is generated. */
HF_API hf_status hf_approximate_to_accuracy(const hf_body* body, double delta, const hf_net* net,
                                            int refinement, hf_polytope** polytope,
                                            hf_report* report);

/* Bounds and metrics. */
HF_API hf_status hf_theorem1_bound(double eps, double beta, double* out);
HF_API hf_status hf_lemma1_bound(double eps, double beta, double* out);
HF_API hf_status hf_theorem3_constant(double theta, int dim, double beta, double* out);
HF_API hf_status hf_select_epsilon(double delta, double* out);
HF_API hf_status hf_polar_resolution(int dim, double eps, int* k);
HF_API hf_status hf_measurement_net(int dim, double construction_eps, int refinement,
                                    hf_net** out);
HF_API hf_status hf_hausdorff_outer_estimate(const hf_body* body, const hf_polytope* polytope,
                                             const hf_net* directions, double* out);
HF_API hf_status hf_analytic_delta_disk_kgon(int k, double* out);
HF_API hf_status hf_fit_rate(size_t count, const double* m, const double* delta,
                             hf_rate_fit* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* HULLFORGE_HULLFORGE_H_ */
