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
#include <string>
#include <string_view>
#include <vector>

#include "hullforge/convex_body.hpp"

namespace hullforge {

/// Parses a one-line body descriptor:
///
///   ball:R[:c1,...,cd]            ball of radius R (centered at c, default 0)
///   ellipsoid:a1,...,ad[:c1,...]  axis-aligned ellipsoid with semiaxes a
///   box:H                         cube [-H, H]^d
///   box:l1,...,ld:h1,...,hd       box [l, h]
///   vpolytope:PATH                hull of the points in PATH, one per line
///   vpolytope:random:N            hull of N seeded points in the unit ball
///   DESC&DESC[&...]               intersection of bodies
///
/// Errors are kInvalidArgument naming the offending field.
ConvexBody ParseBodyDescriptor(std::string_view text, int dim, uint64_t seed = 0);

/// Points of a vertex file: one point per line, coordinates separated by
/// whitespace or commas; blank lines and lines starting with '#' are skipped.
std::vector<Vector> ReadVertexFile(const std::string& path, int dim);

/// N points distributed uniformly in the unit ball, from a seeded generator.
std::vector<Vector> RandomBallPoints(int dim, int count, uint64_t seed);

}  // namespace hullforge
