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

#include "mip/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "mip/random.hpp"

namespace mip {

namespace {

std::size_t nearest_centroid(const Point& p, const std::vector<Point>& centroids) {
  std::size_t best = 0;
  double best_d2 = squared_distance(p, centroids[0]);
  for (std::size_t c = 1; c < centroids.size(); ++c) {
    const double d2 = squared_distance(p, centroids[c]);
    if (d2 < best_d2) {
      best = c;
      best_d2 = d2;
    }
  }
  return best;
}

}  // namespace

std::vector<Partition> kmeans_partition(std::span<const NodeId> sources, std::uint32_t k,
                                        std::span<const Point> positions,
                                        std::uint64_t rng_seed) {
  if (k < 1 || k > sources.size()) {
    throw std::invalid_argument("kmeans_partition: k must be in [1, " +
                                std::to_string(sources.size()) + "]");
  }
  const std::size_t n = sources.size();
  Rng rng(rng_seed);
  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  std::vector<Point> centroids;
  for (std::size_t i : rng.sample(std::move(indices), k)) {
    centroids.push_back(positions[sources[i]]);
  }

  std::vector<std::size_t> label(n, std::numeric_limits<std::size_t>::max());
  for (int iter = 0; iter < kKmeansMaxIterations; ++iter) {
    bool changed = false;
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = nearest_centroid(positions[sources[i]], centroids);
      if (c != label[i]) changed = true;
      label[i] = c;
      ++sizes[c];
    }

    // Empty-cluster repair.
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t victim = n;
      double victim_d2 = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[label[i]] < 2) continue;
        const double d2 = squared_distance(positions[sources[i]], centroids[label[i]]);
        if (d2 > victim_d2) {
          victim = i;
          victim_d2 = d2;
        }
      }
      --sizes[label[victim]];
      label[victim] = c;
      sizes[c] = 1;
      centroids[c] = positions[sources[victim]];
      changed = true;
    }

    std::vector<Point> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
      sums[label[i]].x += positions[sources[i]].x;
      sums[label[i]].y += positions[sources[i]].y;
    }
    for (std::size_t c = 0; c < k; ++c) {
      centroids[c] = {sums[c].x / static_cast<double>(sizes[c]),
                      sums[c].y / static_cast<double>(sizes[c])};
    }
    if (!changed) break;
  }

  std::vector<Partition> partitions(k);
  for (std::size_t c = 0; c < k; ++c) partitions[c].centroid = centroids[c];
  for (std::size_t i = 0; i < n; ++i) partitions[label[i]].members.push_back(sources[i]);
  for (auto& p : partitions) std::sort(p.members.begin(), p.members.end());
  return partitions;
}

}  // namespace mip
