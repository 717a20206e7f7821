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

#include "mip/itinerary.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mip {

std::string_view to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::kPlain:
      return "PLAIN";
    case AgentKind::kMain:
      return "MMA";
    case AgentKind::kClone:
      return "CMA";
  }
  return "?";
}

ItinerarySet make_itinerary_set(std::vector<Itinerary> itineraries) {
  ItinerarySet set;
  for (const auto& it : itineraries) {
    set.covered_sources.insert(set.covered_sources.end(), it.visit_order.begin(),
                               it.visit_order.end());
  }
  std::sort(set.covered_sources.begin(), set.covered_sources.end());
  const auto dup =
      std::adjacent_find(set.covered_sources.begin(), set.covered_sources.end());
  if (dup != set.covered_sources.end()) {
    throw std::logic_error("source " + std::to_string(*dup) +
                           " is visited by more than one itinerary");
  }
  set.itineraries = std::move(itineraries);
  return set;
}

std::vector<NodeId> lcf_order(std::span<const NodeId> sources, const Point& start,
                              std::span<const Point> positions) {
  std::vector<NodeId> remaining(sources.begin(), sources.end());
  std::vector<NodeId> order;
  order.reserve(remaining.size());
  Point current = start;
  while (!remaining.empty()) {
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const double d2 = squared_distance(current, positions[remaining[i]]);
      if (d2 < best_d2 || (d2 == best_d2 && remaining[i] < remaining[best])) {
        best = i;
        best_d2 = d2;
      }
    }
    order.push_back(remaining[best]);
    current = positions[remaining[best]];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return order;
}

Itinerary reverse_itinerary(Itinerary itinerary) {
  std::reverse(itinerary.visit_order.begin(), itinerary.visit_order.end());
  return itinerary;
}

std::pair<Itinerary, Itinerary> split_at_fsn(const Itinerary& itinerary, NodeId fsn) {
  const auto& order = itinerary.visit_order;
  const auto pos = std::find(order.begin(), order.end(), fsn);
  if (pos == order.end()) {
    throw std::invalid_argument("split_at_fsn: node " + std::to_string(fsn) +
                                " is not in the itinerary");
  }
  if (std::next(pos) == order.end()) {
    throw std::invalid_argument("no split needed: node " + std::to_string(fsn) +
                                " is the last source");
  }
  Itinerary main_agent;
  main_agent.kind = AgentKind::kMain;
  main_agent.visit_order.assign(std::make_reverse_iterator(std::next(pos)), order.rend());
  main_agent.start_anchor = itinerary.start_anchor;
  main_agent.clone_point = fsn;

  Itinerary clone;
  clone.kind = AgentKind::kClone;
  clone.visit_order.assign(std::next(pos), order.end());
  clone.start_anchor = fsn;
  clone.clone_point = fsn;
  return {std::move(main_agent), std::move(clone)};
}

}  // namespace mip
