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

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mip/network.hpp"

namespace mip {

enum class AgentKind {
  kPlain,  // dispatched from the sink, no cloning
  kMain,   // dispatched from the sink, clones itself at the clone point
  kClone,  // instantiated at the clone point, covers the itinerary suffix
};

std::string_view to_string(AgentKind kind);

struct Itinerary {
  AgentKind kind = AgentKind::kPlain;
  std::vector<NodeId> visit_order;
  // Where the agent's own walk begins: the sink for plain and main agents,
  // the clone point for a clone.
  NodeId start_anchor = 0;
  std::optional<NodeId> clone_point;

  friend bool operator==(const Itinerary&, const Itinerary&) = default;
};

struct ItinerarySet {
  std::vector<Itinerary> itineraries;
  // Ascending.
  std::vector<NodeId> covered_sources;

  friend bool operator==(const ItinerarySet&, const ItinerarySet&) = default;
};

// Builds a set and fills covered_sources from the visit orders. Throws
// std::logic_error when two itineraries visit the same source.
ItinerarySet make_itinerary_set(std::vector<Itinerary> itineraries);

// Local-closest-first: starting at `start`, repeatedly move to the nearest
// unvisited source (Euclidean), ties to the lowest id.
std::vector<NodeId> lcf_order(std::span<const NodeId> sources, const Point& start,
                              std::span<const Point> positions);

Itinerary reverse_itinerary(Itinerary itinerary);

// Splits an itinerary at `fsn`. The main agent takes the prefix up to and
// including `fsn`, reversed, so it starts at `fsn`; the clone takes the
// suffix after `fsn` unchanged and starts from `fsn`. Throws
// std::invalid_argument if `fsn` is absent, or if it is the last element
// ("no split needed").
std::pair<Itinerary, Itinerary> split_at_fsn(const Itinerary& itinerary, NodeId fsn);

}  // namespace mip
