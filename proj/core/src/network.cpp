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

#include "mip/network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mip/errors.hpp"
#include "mip/random.hpp"

namespace mip {

void NetworkConfig::validate() const {
  if (!(field_width > 0.0)) {
    throw ConfigError("network.field_width", 0, "network.field_width must be > 0");
  }
  if (!(field_height > 0.0)) {
    throw ConfigError("network.field_height", 0, "network.field_height must be > 0");
  }
  if (node_count < 1) {
    throw ConfigError("network.node_count", 0, "network.node_count must be >= 1");
  }
  if (!(transmission_range > 0.0)) {
    throw ConfigError("network.transmission_range", 0,
                      "network.transmission_range must be > 0");
  }
  if (sink_position.x < 0.0 || sink_position.x > field_width) {
    throw ConfigError("network.sink_x", 0, "network.sink_x must lie inside the field");
  }
  if (sink_position.y < 0.0 || sink_position.y > field_height) {
    throw ConfigError("network.sink_y", 0, "network.sink_y must lie inside the field");
  }
}

Deployment deploy_nodes(const NetworkConfig& config) {
  config.validate();
  Rng rng(config.rng_seed);
  Deployment deployment;
  deployment.positions.reserve(config.node_count + 1);
  for (std::uint32_t i = 0; i < config.node_count; ++i) {
    const double x = rng.uniform01() * config.field_width;
    const double y = rng.uniform01() * config.field_height;
    deployment.positions.push_back({x, y});
  }
  deployment.positions.push_back(config.sink_position);
  deployment.sink_id = config.node_count;
  return deployment;
}

Deployment select_sources(const Deployment& deployment, std::uint32_t count,
                          std::uint64_t rng_seed) {
  if (count == 0) throw std::invalid_argument("source count must be >= 1");
  if (count > deployment.sensor_count()) {
    throw SimulationError("insufficient nodes: requested " + std::to_string(count) +
                          " sources from " + std::to_string(deployment.sensor_count()) +
                          " sensor nodes");
  }
  std::vector<NodeId> pool(deployment.sensor_count());
  std::iota(pool.begin(), pool.end(), NodeId{0});
  Rng rng(rng_seed);
  Deployment out = deployment;
  out.sources = rng.sample(std::move(pool), count);
  std::sort(out.sources.begin(), out.sources.end());
  return out;
}

NodeId farthest_source_node(std::span<const NodeId> sources,
                            std::span<const Point> positions, const Point& sink) {
  if (sources.empty()) throw std::invalid_argument("farthest_source_node: no sources");
  NodeId best = sources.front();
  double best_d2 = squared_distance(positions[best], sink);
  for (NodeId id : sources.subspan(1)) {
    const double d2 = squared_distance(positions[id], sink);
    if (d2 > best_d2 || (d2 == best_d2 && id < best)) {
      best = id;
      best_d2 = d2;
    }
  }
  return best;
}

}  // namespace mip
