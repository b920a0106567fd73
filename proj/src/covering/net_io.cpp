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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hullforge/error.hpp"
#include "hullforge/sphere_net.hpp"

namespace hullforge {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

template <class T>
T ParseNumber(const std::string& tok, const std::string& where) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    Fail(ErrorCode::kFormatError, where + ": cannot parse '" + tok + "'");
  }
  return value;
}

}  // namespace

SphericalNet ReadNet(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open net file " + path);

  std::vector<std::vector<std::string>> lines;
  std::vector<int> line_numbers;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    auto toks = Tokens(line);
    if (toks.empty()) continue;
    lines.push_back(std::move(toks));
    line_numbers.push_back(number);
  }
  if (lines.empty()) Fail(ErrorCode::kFormatError, path + ": empty net file");
  if (lines[0].size() != 3) Fail(ErrorCode::kFormatError, path + ": header must be 'd m eps'");

  const int dim = ParseNumber<int>(lines[0][0], path + ":1");
  const long long count = ParseNumber<long long>(lines[0][1], path + ":1");
  const double eps = ParseNumber<double>(lines[0][2], path + ":1");
  if (dim < 2 || count < 1 || !(eps > 0.0) || !std::isfinite(eps)) {
    Fail(ErrorCode::kFormatError, path + ":1: invalid header values");
  }
  if (static_cast<long long>(lines.size()) - 1 != count) {
    Fail(ErrorCode::kFormatError, path + ": header declares " + std::to_string(count) +
                                      " points, found " + std::to_string(lines.size() - 1));
  }

  std::vector<Vector> points;
  points.reserve(static_cast<size_t>(count));
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string where = path + ":" + std::to_string(line_numbers[i]);
    if (static_cast<int>(lines[i].size()) != dim) {
      Fail(ErrorCode::kFormatError, where + ": expected " + std::to_string(dim) + " coordinates");
    }
    Vector p(dim);
    for (int j = 0; j < dim; ++j) p(j) = ParseNumber<double>(lines[i][j], where);
    if (!p.allFinite() || std::abs(p.norm() - 1.0) > 1e-6) {
      Fail(ErrorCode::kFormatError, where + ": point is not on the unit sphere");
    }
    points.push_back(p.normalized());
  }

  NetProvenance provenance;
  provenance.source = NetProvenance::Source::kFile;
  provenance.path = path;
  try {
    return SphericalNet(dim, std::move(points), eps, std::move(provenance));
  } catch (const Error& e) {
    Fail(ErrorCode::kFormatError, path + ": " + e.what());
  }
}

void WriteNet(const SphericalNet& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kIoError, "cannot open " + path + " for writing");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", net.eps_bound());
  out << net.dim() << ' ' << net.size() << ' ' << buf << '\n';
  for (const auto& p : net.points()) {
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", p(j));
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
  if (!out) Fail(ErrorCode::kIoError, "failed writing " + path);
}

}  // namespace hullforge
