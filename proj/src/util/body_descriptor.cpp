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

#include "hullforge/body_descriptor.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "hullforge/error.hpp"

namespace hullforge {
namespace {

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double ParseReal(const std::string& tok, const std::string& field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    Fail(ErrorCode::kInvalidArgument, "body descriptor: field '" + field +
                                          "': not a number: '" + tok + "'");
  }
  return value;
}

Vector ParseList(const std::string& text, int dim, const std::string& field) {
  const auto parts = Split(text, ',');
  if (static_cast<int>(parts.size()) != dim) {
    Fail(ErrorCode::kInvalidArgument, "body descriptor: field '" + field + "' needs " +
                                          std::to_string(dim) + " values, got " +
                                          std::to_string(parts.size()));
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = ParseReal(parts[i], field);
  return v;
}

ConvexBody ParseSingle(std::string_view text, int dim, uint64_t seed) {
  const auto fields = Split(text, ':');
  const std::string& kind = fields[0];
  auto arity = [&](size_t lo, size_t hi) {
    if (fields.size() < lo || fields.size() > hi) {
      Fail(ErrorCode::kInvalidArgument, "body descriptor: wrong number of fields for '" + kind +
                                            "' in '" + std::string(text) + "'");
    }
  };
  if (kind == "ball") {
    arity(2, 3);
    const double r = ParseReal(fields[1], "ball radius");
    Vector center = fields.size() == 3 ? ParseList(fields[2], dim, "ball center")
                                       : Vector::Zero(dim);
    return ConvexBody::MakeBall(std::move(center), r);
  }
  if (kind == "ellipsoid") {
    arity(2, 3);
    Vector axes = ParseList(fields[1], dim, "ellipsoid semiaxes");
    Vector center = fields.size() == 3 ? ParseList(fields[2], dim, "ellipsoid center")
                                       : Vector::Zero(dim);
    return ConvexBody::MakeEllipsoid(std::move(center), std::move(axes));
  }
  if (kind == "box") {
    arity(2, 3);
    if (fields.size() == 2) {
      const double h = ParseReal(fields[1], "box half-width");
      return ConvexBody::MakeBox(Vector::Constant(dim, -h), Vector::Constant(dim, h));
    }
    return ConvexBody::MakeBox(ParseList(fields[1], dim, "box lower corner"),
                               ParseList(fields[2], dim, "box upper corner"));
  }
  if (kind == "vpolytope") {
    arity(2, 3);
    if (fields[1] == "random") {
      arity(3, 3);
      const double n = ParseReal(fields[2], "vpolytope vertex count");
      if (n < 1 || n != std::floor(n) || n > 1e6) {
        Fail(ErrorCode::kInvalidArgument, "body descriptor: vertex count must be a positive integer");
      }
      return ConvexBody::MakeVPolytope(RandomBallPoints(dim, static_cast<int>(n), seed));
    }
    // Paths may contain ':'; rejoin the tail.
    std::string path = fields[1];
    for (size_t i = 2; i < fields.size(); ++i) path += ":" + fields[i];
    return ConvexBody::MakeVPolytope(ReadVertexFile(path, dim));
  }
  Fail(ErrorCode::kInvalidArgument, "body descriptor: unknown kind '" + kind + "'");
}

}  // namespace

ConvexBody ParseBodyDescriptor(std::string_view text, int dim, uint64_t seed) {
  if (dim < 2) Fail(ErrorCode::kInvalidArgument, "body descriptor: dimension must be at least 2");
  const auto parts = Split(text, '&');
  if (parts.size() == 1) return ParseSingle(parts[0], dim, seed);
  std::vector<ConvexBody> members;
  for (size_t i = 0; i < parts.size(); ++i) members.push_back(ParseSingle(parts[i], dim, seed + i));
  return ConvexBody::MakeIntersection(std::move(members));
}

std::vector<Vector> ReadVertexFile(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIoError, "cannot open vertex file " + path);
  std::vector<Vector> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<std::string> toks;
    std::string tok;
    while (fields >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string where = path + ":" + std::to_string(number);
    if (static_cast<int>(toks.size()) != dim) {
      Fail(ErrorCode::kInvalidArgument, where + ": expected " + std::to_string(dim) + " coordinates");
    }
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = ParseReal(toks[i], where);
    out.push_back(std::move(v));
  }
  if (out.empty()) Fail(ErrorCode::kInvalidArgument, path + ": no vertices");
  return out;
}

std::vector<Vector> RandomBallPoints(int dim, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vector> out;
  for (int i = 0; i < count; ++i) {
    Vector g(dim);
    do {
      for (int j = 0; j < dim; ++j) g(j) = normal(rng);
    } while (g.norm() < 1e-12);
    const double r = std::pow(unit(rng), 1.0 / dim);
    out.push_back(r * g.normalized());
  }
  return out;
}

}  // namespace hullforge
