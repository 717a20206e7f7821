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

#include "mip/topology.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "mip/errors.hpp"

namespace mip {

std::vector<int> Topology::hop_distances(NodeId from) const {
  std::vector<int> dist(positions_.size(), -1);
  std::deque<NodeId> frontier{from};
  dist[from] = 0;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (NodeId v : adjacency_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

Topology unit_disk_topology(std::vector<Point> positions, double transmission_range,
                            NodeId sink_id) {
  if (positions.empty()) throw std::invalid_argument("unit_disk_topology: no nodes");
  if (!(transmission_range > 0.0)) {
    throw std::invalid_argument("unit_disk_topology: transmission range must be > 0");
  }
  if (sink_id >= positions.size()) {
    throw std::out_of_range("unit_disk_topology: sink id out of range");
  }
  const double range2 = transmission_range * transmission_range;
  std::vector<std::vector<NodeId>> adjacency(positions.size());
  for (NodeId u = 0; u < positions.size(); ++u) {
    for (NodeId v = u + 1; v < positions.size(); ++v) {
      if (squared_distance(positions[u], positions[v]) <= range2) {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
      }
    }
  }
  // The inner loop appends ascending ids for both endpoints, so every list
  // is already sorted.
  return Topology(std::move(positions), std::move(adjacency), transmission_range, sink_id);
}

Topology build_topology(const Deployment& deployment, double transmission_range) {
  if (deployment.positions.empty()) {
    throw std::invalid_argument("build_topology: empty deployment");
  }
  Topology topology =
      unit_disk_topology(deployment.positions, transmission_range, deployment.sink_id);
  const std::vector<int> dist = topology.hop_distances(deployment.sink_id);
  for (NodeId id = 0; id < dist.size(); ++id) {
    if (dist[id] < 0) {
      throw NetworkPartitioned(id, "network partitioned: node " + std::to_string(id) +
                                       " cannot reach the sink");
    }
  }
  return topology;
}

std::vector<NodeId> hop_path(const Topology& topology, NodeId from, NodeId to) {
  if (from >= topology.node_count() || to >= topology.node_count()) {
    throw std::out_of_range("hop_path: node id out of range");
  }
  const std::vector<int> dist = topology.hop_distances(from);
  if (dist[to] < 0) {
    throw SimulationError("no path from node " + std::to_string(from) + " to node " +
                          std::to_string(to));
  }
  std::vector<NodeId> path(static_cast<std::size_t>(dist[to]) + 1);
  NodeId current = to;
  path.back() = to;
  for (int layer = dist[to] - 1; layer >= 0; --layer) {
    // Neighbor lists are ascending, so the first match has the lowest id.
    for (NodeId v : topology.neighbors(current)) {
      if (dist[v] == layer) {
        current = v;
        break;
      }
    }
    path[static_cast<std::size_t>(layer)] = current;
  }
  return path;
}

int hop_count(const Topology& topology, NodeId from, NodeId to) {
  if (from >= topology.node_count() || to >= topology.node_count()) {
    throw std::out_of_range("hop_count: node id out of range");
  }
  const int hops = topology.hop_distances(from)[to];
  if (hops < 0) {
    throw SimulationError("no path from node " + std::to_string(from) + " to node " +
                          std::to_string(to));
  }
  return hops;
}

}  // namespace mip
