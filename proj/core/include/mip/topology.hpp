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

// Unit-disk connectivity graph: u and v are adjacent iff their distance is
// at most the transmission range. Adjacency lists are sorted ascending.
class Topology {
 public:
  Topology(std::vector<Point> positions, std::vector<std::vector<NodeId>> adjacency,
           double transmission_range, NodeId sink_id)
      : positions_(std::move(positions)),
        adjacency_(std::move(adjacency)),
        transmission_range_(transmission_range),
        sink_id_(sink_id) {}

  std::size_t node_count() const { return positions_.size(); }
  double transmission_range() const { return transmission_range_; }
  NodeId sink_id() const { return sink_id_; }
  const std::vector<Point>& positions() const { return positions_; }
  const Point& position(NodeId id) const { return positions_[id]; }
  std::span<const NodeId> neighbors(NodeId id) const { return adjacency_[id]; }

  // Hop distance from `from` to every node; -1 marks unreachable nodes.
  std::vector<int> hop_distances(NodeId from) const;

 private:
  std::vector<Point> positions_;
  std::vector<std::vector<NodeId>> adjacency_;
  double transmission_range_;
  NodeId sink_id_;
};

// Unit-disk graph over arbitrary positions, without a connectivity check.
Topology unit_disk_topology(std::vector<Point> positions, double transmission_range,
                            NodeId sink_id);

// Builds the unit-disk graph over every node of the deployment (sink
// included) and checks that all nodes reach the sink. Throws
// NetworkPartitioned naming the lowest unreachable node.
Topology build_topology(const Deployment& deployment, double transmission_range);

// Minimum-hop path including both endpoints. Each node's predecessor is its
// lowest-id neighbor one layer closer to `from`. Throws SimulationError("no
// path") when `to` is unreachable.
std::vector<NodeId> hop_path(const Topology& topology, NodeId from, NodeId to);

// Equivalent to hop_path(...).size() - 1.
int hop_count(const Topology& topology, NodeId from, NodeId to);

}  // namespace mip
