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

#include <cstdint>
#include <span>
#include <vector>

#include "mip/network.hpp"

namespace mip {

struct Partition {
  std::vector<NodeId> members;  // ascending
  Point centroid;
};

inline constexpr int kKmeansMaxIterations = 100;

// Lloyd's k-means over the source positions.
//
// Initial centroids are the positions of `k` distinct sources drawn with
// `rng_seed`. Points join the nearest centroid (ties to the lower partition
// index) and centroids move to member means until the assignment is stable
// or kKmeansMaxIterations passes have run. A cluster that goes empty takes
// the point lying farthest from its own centroid.
//
// Throws std::invalid_argument unless 1 <= k <= sources.size().
std::vector<Partition> kmeans_partition(std::span<const NodeId> sources, std::uint32_t k,
                                        std::span<const Point> positions,
                                        std::uint64_t rng_seed);

}  // namespace mip
