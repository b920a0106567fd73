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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hullforge/hullforge.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitRejected = 4;

constexpr const char* kBodyGrammar = R"(Body descriptors:
  ball:R[:c1,..,cd]           ball of radius R (centered at the origin by default)
  ellipsoid:a1,..,ad[:c]      axis-aligned ellipsoid with the given semiaxes
  box:H                       cube [-H,H]^d
  box:l1,..,ld:h1,..,hd       box with corners l and h
  vpolytope:PATH              convex hull of the points in PATH (d numbers per line)
  vpolytope:random:N          hull of N seeded random points in the unit ball
  A&B                         intersection of two or more descriptors
Net sources:
  polar:K                     polar grid net with resolution K
  file:PATH                   net file written by `net gen`
Environment:
  HULLFORGE_THREADS           caps the number of worker threads)";

struct BodyDeleter {
  void operator()(hf_body* b) const { hf_body_free(b); }
};
struct NetDeleter {
  void operator()(hf_net* n) const { hf_net_free(n); }
};
struct PolytopeDeleter {
  void operator()(hf_polytope* p) const { hf_polytope_free(p); }
};
using BodyPtr = std::unique_ptr<hf_body, BodyDeleter>;
using NetPtr = std::unique_ptr<hf_net, NetDeleter>;
using PolytopePtr = std::unique_ptr<hf_polytope, PolytopeDeleter>;

/// Carries the process exit code out of a failing command.
struct CommandError {
  int exit_code;
  std::string message;
};

int ExitCodeFor(hf_status status) {
  switch (status) {
    case HF_INVALID_ARGUMENT:
    case HF_BODY_NOT_IN_UNIT_BALL:
    case HF_INVALID_REGIME:
      return kExitUsage;
    case HF_IO_ERROR:
    case HF_FORMAT_ERROR:
      return kExitIo;
    case HF_NET_TOO_COARSE:
    case HF_UNBOUNDED:
      return kExitRejected;
    default:
      return kExitFailure;
  }
}

void Check(hf_status status, const std::string& context) {
  if (status == HF_OK) return;
  std::string message = context + ": " + hf_status_name(status) + ": " + hf_last_error();
  if (status == HF_UNBOUNDED) {
    message += " (the net leaves the polytope open in some direction; use a finer net)";
  } else if (status == HF_NET_TOO_COARSE) {
    message += " (the net is too coarse for the requested accuracy)";
  }
  throw CommandError{ExitCodeFor(status), message};
}

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BodyPtr ParseBody(const std::string& descriptor, int dim, uint64_t seed) {
  hf_body* body = nullptr;
  Check(hf_body_parse(descriptor.c_str(), dim, seed, &body), "--body");
  return BodyPtr(body);
}

NetPtr PolarNet(int dim, int k) {
  hf_net* net = nullptr;
  Check(hf_net_polar(dim, k, &net), "polar net");
  return NetPtr(net);
}

NetPtr ReadNet(const std::string& path, int dim) {
  hf_net* raw = nullptr;
  Check(hf_net_read(path.c_str(), &raw), "net file " + path);
  NetPtr net(raw);
  if (dim > 0 && hf_net_dim(net.get()) != dim) {
    throw CommandError{kExitUsage, "net file " + path + " has dimension " +
                                       std::to_string(hf_net_dim(net.get())) + ", expected " +
                                       std::to_string(dim)};
  }
  return net;
}

NetPtr ParseNetSource(const std::string& source, int dim) {
  const auto colon = source.find(':');
  const std::string kind = source.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : source.substr(colon + 1);
  if (kind == "polar") {
    int k = 0;
    std::istringstream in(arg);
    if (!(in >> k) || !in.eof()) throw CommandError{kExitUsage, "--net: bad polar resolution"};
    return PolarNet(dim, k);
  }
  if (kind == "file" && !arg.empty()) return ReadNet(arg, dim);
  throw CommandError{kExitUsage, "--net: expected polar:K or file:PATH, got '" + source + "'"};
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  out << text;
  out.flush();
  if (!out) throw CommandError{kExitIo, "cannot write " + path};
}

nlohmann::ordered_json OptionalNumber(int has, double value) {
  return has ? nlohmann::ordered_json(value) : nlohmann::ordered_json(nullptr);
}

std::string ReportJson(const hf_report& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["m"] = r.m;
  j["beta"] = r.beta;
  j["eps_net"] = r.eps_net;
  j["delta_measured"] = OptionalNumber(r.has_delta_measured, r.delta_measured);
  j["delta_bound_thm1"] = OptionalNumber(r.has_delta_bound_thm1, r.delta_bound_thm1);
  j["delta_bound_thm3"] = r.delta_bound_thm3;
  j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

struct NetGenArgs {
  int dim = 0;
  int k = 0;
  std::string out;
};

void RunNetGen(const NetGenArgs& a) {
  NetPtr net = PolarNet(a.dim, a.k);
  Check(hf_net_write(net.get(), a.out.c_str()), "--out");
  double theta = 0.0, eta = 0.0;
  int has_eta = 0;
  Check(hf_net_efficiency(net.get(), &theta, &eta, &has_eta), "efficiency");
  std::cout << "d=" << a.dim << " m=" << hf_net_size(net.get())
            << " eps_bound=" << Num(hf_net_eps_bound(net.get())) << " theta=" << Num(theta);
  if (has_eta) std::cout << " eta=" << Num(eta);
  std::cout << "\n";
}

struct NetVerifyArgs {
  std::string path;
  int64_t probes = -1;
  uint64_t seed = 0;
};

int RunNetVerify(const NetVerifyArgs& a) {
  NetPtr net = ReadNet(a.path, 0);
  const auto m = static_cast<int64_t>(hf_net_size(net.get()));
  const int64_t probes = a.probes >= 0 ? a.probes : 10 * m;
  double estimate = 0.0;
  Check(hf_net_covering_radius(net.get(), probes, a.seed, &estimate), "covering radius");
  const double bound = hf_net_eps_bound(net.get());
  // Tight nets attain the bound; allow rounding in the last bits.
  const bool ok = estimate <= bound * (1.0 + 1e-12);
  std::cout << "d=" << hf_net_dim(net.get()) << " m=" << m << " eps_bound=" << Num(bound)
            << " estimate=" << Num(estimate) << " " << (ok ? "ok" : "violated") << "\n";
  return ok ? 0 : kExitFailure;
}

struct ApproxArgs {
  std::string body;
  int dim = 0;
  std::string net;
  double beta = 1.0;
  std::optional<double> target_delta;
  bool no_rescale = false;
  std::string dump;
  std::string out;
  uint64_t seed = 0;
  int refinement = 4;
};

void RunApprox(const ApproxArgs& a) {
  BodyPtr body = ParseBody(a.body, a.dim, a.seed);
  NetPtr net;
  if (!a.net.empty()) net = ParseNetSource(a.net, a.dim);
  hf_polytope* raw = nullptr;
  hf_report report{};
  if (a.target_delta) {
    Check(hf_approximate_to_accuracy(body.get(), *a.target_delta, net.get(), a.refinement, &raw,
                                     &report),
          "approx");
  } else {
    if (!net) throw CommandError{kExitUsage, "approx: give --net or --target-delta"};
    Check(hf_approximate(body.get(), net.get(), a.beta, a.no_rescale ? 0 : 1, a.refinement, &raw,
                         &report),
          "approx");
  }
  PolytopePtr polytope(raw);
  if (!a.dump.empty()) Check(hf_polytope_write(polytope.get(), a.dump.c_str()), "--dump");
  WriteText(a.out, ReportJson(report));
}

struct SweepArgs {
  std::string body;
  int dim = 0;
  std::vector<int> ks;
  std::vector<std::string> nets;
  double beta = 1.0;
  std::string baseline;
  std::string out;
  uint64_t seed = 0;
  int refinement = 4;
};

void RunSweep(const SweepArgs& a) {
  if (a.ks.empty() == a.nets.empty()) {
    throw CommandError{kExitUsage, "sweep: give a non-empty --k list or --nets list"};
  }
  if (!a.baseline.empty() && a.baseline != "support") {
    throw CommandError{kExitUsage, "--baseline: only 'support' is known"};
  }
  const bool baseline = !a.baseline.empty();
  BodyPtr body = ParseBody(a.body, a.dim, a.seed);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out);
    if (!file) throw CommandError{kExitIo, "cannot write " + a.out};
    out = &file;
  }
  *out << "m,delta,bound_thm1,bound_thm3" << (baseline ? ",delta_support_baseline" : "") << "\n"
       << std::flush;

  std::vector<double> ms, deltas;
  const size_t count = a.ks.empty() ? a.nets.size() : a.ks.size();
  for (size_t i = 0; i < count; ++i) {
    NetPtr net = a.ks.empty() ? ReadNet(a.nets[i], a.dim) : PolarNet(a.dim, a.ks[i]);
    hf_polytope* raw = nullptr;
    hf_report r{};
    Check(hf_approximate(body.get(), net.get(), a.beta, 1, a.refinement, &raw, &r), "sweep");
    PolytopePtr polytope(raw);
    if (!r.has_delta_measured) {
      throw CommandError{kExitUsage, "sweep: body has no support function to measure against"};
    }
    *out << r.m << "," << Num(r.delta_measured) << ","
         << (r.has_delta_bound_thm1 ? Num(r.delta_bound_thm1) : "") << ","
         << Num(r.delta_bound_thm3);
    if (baseline) {
      hf_polytope* raw_base = nullptr;
      Check(hf_support_baseline(body.get(), net.get(), &raw_base), "baseline");
      PolytopePtr base(raw_base);
      hf_net* raw_dirs = nullptr;
      Check(hf_measurement_net(a.dim, hf_net_eps_bound(net.get()), a.refinement, &raw_dirs),
            "measurement net");
      NetPtr dirs(raw_dirs);
      double value = 0.0;
      Check(hf_hausdorff_outer_estimate(body.get(), base.get(), dirs.get(), &value), "baseline");
      *out << "," << Num(value);
    }
    *out << "\n" << std::flush;
    ms.push_back(static_cast<double>(r.m));
    deltas.push_back(r.delta_measured);
  }

  const double target = -2.0 / (a.dim - 1);
  hf_rate_fit fit{};
  const hf_status status = hf_fit_rate(ms.size(), ms.data(), deltas.data(), &fit);
  if (status == HF_OK) {
    *out << "# slope=" << Num(fit.slope) << " intercept=" << Num(fit.intercept)
         << " r_squared=" << Num(fit.r_squared) << " target=" << Num(target) << "\n";
  } else {
    *out << "# slope=NA (" << hf_last_error() << ") target=" << Num(target) << "\n";
  }
  out->flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outer polyhedral approximation of convex bodies from projection queries"};
  app.footer(kBodyGrammar);
  app.require_subcommand(1);

  auto* net_cmd = app.add_subcommand("net", "Sphere nets");
  net_cmd->require_subcommand(1);
  NetGenArgs gen;
  auto* gen_cmd = net_cmd->add_subcommand("gen", "Write a polar grid net");
  gen_cmd->add_option("--dim", gen.dim, "Dimension")->required();
  gen_cmd->add_option("--k", gen.k, "Polar resolution")->required();
  gen_cmd->add_option("--out", gen.out, "Output net file")->required();

  NetVerifyArgs verify;
  auto* verify_cmd = net_cmd->add_subcommand("verify", "Estimate a net's covering radius");
  verify_cmd->add_option("path", verify.path, "Net file")->required();
  verify_cmd->add_option("--probes", verify.probes, "Random probes (default 10 m)");
  verify_cmd->add_option("--seed", verify.seed, "Probe seed");

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "Build one outer polytope and report");
  approx_cmd->add_option("--body", approx.body, "Body descriptor")->required();
  approx_cmd->add_option("--dim", approx.dim, "Dimension")->required();
  approx_cmd->add_option("--net", approx.net, "polar:K or file:PATH");
  approx_cmd->add_option("--beta", approx.beta, "Query distance factor");
  approx_cmd->add_option("--target-delta", approx.target_delta, "Required Hausdorff accuracy");
  approx_cmd->add_flag("--no-rescale", approx.no_rescale,
                       "Require the body to lie in the unit ball");
  approx_cmd->add_option("--dump", approx.dump, "Write halfspaces `u_1 .. u_d g`");
  approx_cmd->add_option("--out", approx.out, "JSON report path (default stdout)");
  approx_cmd->add_option("--seed", approx.seed, "Seed for random bodies");
  approx_cmd->add_option("--refinement", approx.refinement, "Measurement net refinement");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Convergence sweep over several nets");
  sweep_cmd->add_option("--body", sweep.body, "Body descriptor")->required();
  sweep_cmd->add_option("--dim", sweep.dim, "Dimension")->required();
  sweep_cmd->add_option("--k", sweep.ks, "Polar resolutions, comma separated")->delimiter(',');
  sweep_cmd->add_option("--nets", sweep.nets, "Net files, comma separated")->delimiter(',');
  sweep_cmd->add_option("--beta", sweep.beta, "Query distance factor");
  sweep_cmd->add_option("--baseline", sweep.baseline, "Add a baseline column (support)");
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default stdout)");
  sweep_cmd->add_option("--seed", sweep.seed, "Seed for random bodies");
  sweep_cmd->add_option("--refinement", sweep.refinement, "Measurement net refinement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) RunNetGen(gen);
    if (verify_cmd->parsed()) return RunNetVerify(verify);
    if (approx_cmd->parsed()) RunApprox(approx);
    if (sweep_cmd->parsed()) RunSweep(sweep);
  } catch (const CommandError& e) {
    std::cerr << "hullforge: " << e.message << "\n";
    return e.exit_code;
  }
  return 0;
}
