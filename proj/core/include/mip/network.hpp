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

#include "mip/geometry.hpp"

namespace mip {

using NodeId = std::uint32_t;

// Field and radio setup of one network. Defaults are the reference
// deployment: 800 nodes on a 1000 m x 500 m field, 60 m radios, sink at the
// center.
struct NetworkConfig {
  double field_width = 1000.0;
  double field_height = 500.0;
  std::uint32_t node_count = 800;
  double transmission_range = 60.0;
  Point sink_position{500.0, 250.0};
  std::uint64_t rng_seed = 1;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// Sensor nodes carry ids 0..node_count-1; the sink is the extra id
// node_count, so `positions` has node_count + 1 entries.
struct Deployment {
  std::vector<Point> positions;
  NodeId sink_id = 0;
  // Ascending, never contains sink_id.
  std::vector<NodeId> sources;

  std::uint32_t sensor_count() const { return sink_id; }
  const Point& sink_position() const { return positions[sink_id]; }
  const Point& position(NodeId id) const { return positions[id]; }
};

// Uniform independent placement over the field, seeded by config.rng_seed.
Deployment deploy_nodes(const NetworkConfig& config);

// Copy of `deployment` with `count` distinct sensor ids drawn without
// replacement as sources. Throws SimulationError("insufficient nodes") when
// count exceeds the sensor population, std::invalid_argument when count is 0.
Deployment select_sources(const Deployment& deployment, std::uint32_t count,
                          std::uint64_t rng_seed);

// Source with the greatest Euclidean distance to `sink`; ties go to the
// lowest id. Throws std::invalid_argument on an empty set.
NodeId farthest_source_node(std::span<const NodeId> sources,
                            std::span<const Point> positions, const Point& sink);

}  // namespace mip
