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

#include <Eigen/Core>
#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "hullforge/vector.hpp"

namespace hullforge::detail {

/// Static k-d tree answering nearest-distance queries.
class KdTree {
 public:
  explicit KdTree(const std::vector<Vector>& points) {
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    dim_ = points.empty() ? 0 : static_cast<int>(points.front().size());
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    Build(points, order, 0, static_cast<int>(n));
    pts_.resize(dim_, n);
    for (Eigen::Index i = 0; i < n; ++i) pts_.col(i) = points[order[i]];
  }

  double NearestDistance(const Vector& q) const {
    double best = std::numeric_limits<double>::infinity();
    if (!nodes_.empty()) Search(0, q, &best);
    return std::sqrt(best);
  }

 private:
  static constexpr int kLeafSize = 8;

  struct Node {
    int begin, end;
    int axis = -1;
    double split = 0.0;
    int left = -1, right = -1;
  };

  int Build(const std::vector<Vector>& points, std::vector<int>& order, int begin, int end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({begin, end});
    if (end - begin <= kLeafSize) return id;
    int axis = 0;
    double widest = -1.0;
    for (int a = 0; a < dim_; ++a) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (int i = begin; i < end; ++i) {
        lo = std::min(lo, points[order[i]](a));
        hi = std::max(hi, points[order[i]](a));
      }
      if (hi - lo > widest) {
        widest = hi - lo;
        axis = a;
      }
    }
    const int mid = (begin + end) / 2;
    std::nth_element(order.begin() + begin, order.begin() + mid, order.begin() + end,
                     [&](int x, int y) { return points[x](axis) < points[y](axis); });
    const double split = points[order[mid]](axis);
    const int left = Build(points, order, begin, mid);
    const int right = Build(points, order, mid, end);
    nodes_[id].axis = axis;
    nodes_[id].split = split;
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  void Search(int id, const Vector& q, double* best) const {
    const Node& node = nodes_[id];
    if (node.axis < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        *best = std::min(*best, (pts_.col(i) - q).squaredNorm());
      }
      return;
    }
    const double diff = q(node.axis) - node.split;
    const int near = diff < 0.0 ? node.left : node.right;
    const int far = diff < 0.0 ? node.right : node.left;
    Search(near, q, best);
    if (diff * diff < *best) Search(far, q, best);
  }

  int dim_ = 0;
  std::vector<Node> nodes_;
  Eigen::MatrixXd pts_;
};

}  // namespace hullforge::detail
