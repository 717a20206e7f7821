// Copyright 2026 The mipsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference implementations used only by tests. They share no code with the
// library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mip/geometry.hpp"
#include "mip/network.hpp"

namespace mip::oracle {

inline double euclid(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// All-pairs hop counts by Floyd-Warshall over the unit-disk rule.
inline std::vector<std::vector<int>> all_pairs_hops(const std::vector<Point>& pos,
                                                    double range) {
  const std::size_t n = pos.size();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && euclid(pos[i], pos[j]) <= range) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& v : row)
      if (v >= kInf) v = -1;
  return d;
}

// Nodes reachable from `root`, by repeated relaxation until nothing changes.
inline std::vector<bool> flood_fill(const std::vector<Point>& pos, double range,
                                    std::size_t root) {
  std::vector<bool> seen(pos.size(), false);
  seen[root] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (seen[i]) continue;
      for (std::size_t j = 0; j < pos.size(); ++j) {
        if (seen[j] && euclid(pos[i], pos[j]) <= range) {
          seen[i] = true;
          grew = true;
          break;
        }
      }
    }
  }
  return seen;
}

// Greedy nearest neighbor with explicit visited flags.
inline std::vector<NodeId> nearest_neighbor_order(std::vector<NodeId> ids, Point start,
                                                  const std::vector<Point>& pos) {
  std::sort(ids.begin(), ids.end());
  std::vector<bool> used(ids.size(), false);
  std::vector<NodeId> out;
  for (std::size_t step = 0; step < ids.size(); ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (used[i]) continue;
      if (pick < 0 || euclid(start, pos[ids[i]]) < euclid(start, pos[ids[pick]])) {
        pick = static_cast<int>(i);
      }
    }
    used[pick] = true;
    out.push_back(ids[pick]);
    start = pos[ids[pick]];
  }
  return out;
}

inline NodeId max_distance_scan(const std::vector<NodeId>& ids, const std::vector<Point>& pos,
                                Point sink) {
  NodeId best = ids[0];
  for (NodeId id : ids) {
    const double a = euclid(pos[id], sink);
    const double b = euclid(pos[best], sink);
    if (a > b || (a == b && id < best)) best = id;
  }
  return best;
}

// Random points in a w x h box from the standard library engine.
inline std::vector<Point> random_points(std::size_t n, double w, double h, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> ux(0.0, w), uy(0.0, h);
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {ux(gen), uy(gen)};
  return pts;
}

}  // namespace mip::oracle
