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

#include "mip/planners.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mip/kmeans.hpp"

namespace mip {

std::string_view planner_name(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::kCmip:
      return "CMIP";
    case PlannerKind::kClMip:
      return "CL-MIP";
    case PlannerKind::kGigmMip:
      return "GIGM-MIP";
  }
  return "?";
}

std::optional<PlannerKind> parse_planner(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (PlannerKind kind : {PlannerKind::kCmip, PlannerKind::kClMip, PlannerKind::kGigmMip}) {
    if (upper == planner_name(kind)) return kind;
  }
  return std::nullopt;
}

std::uint32_t default_partition_count(std::size_t source_count) {
  return static_cast<std::uint32_t>((source_count + 19) / 20);
}

namespace {

Itinerary plain_lcf(std::span<const NodeId> members, const Deployment& deployment) {
  Itinerary it;
  it.kind = AgentKind::kPlain;
  it.visit_order = lcf_order(members, deployment.sink_position(), deployment.positions);
  it.start_anchor = deployment.sink_id;
  return it;
}

void require_sources(const Deployment& deployment) {
  if (deployment.sources.empty()) throw std::invalid_argument("no sources selected");
}

}  // namespace

double impact_factor(ImpactKernel kernel, double distance, double scale) {
  const double r = distance / scale;
  switch (kernel) {
    case ImpactKernel::kExponential:
      return std::exp(-r);
    case ImpactKernel::kGaussian:
      return std::exp(-r * r);
  }
  return 0.0;
}

ItinerarySet plan_clmip(const Deployment& deployment, const Topology& topology,
                        const ClMipOptions& options) {
  require_sources(deployment);
  const double scale = options.kernel_scale.value_or(topology.transmission_range());
  const double radius = options.group_radius.value_or(kDefaultGroupRadiusRanges *
                                                      topology.transmission_range());
  const auto& pos = deployment.positions;

  std::vector<NodeId> remaining = deployment.sources;
  std::vector<Itinerary> out;
  while (!remaining.empty()) {
    // remaining stays ascending, so strict > keeps the lowest id on ties.
    NodeId vcl = remaining.front();
    double best = -1.0;
    for (NodeId j : remaining) {
      double accumulated = 0.0;
      for (NodeId i : remaining) {
        accumulated += impact_factor(options.kernel, distance(pos[i], pos[j]), scale);
      }
      if (accumulated > best) {
        best = accumulated;
        vcl = j;
      }
    }
    std::vector<NodeId> group;
    std::vector<NodeId> rest;
    for (NodeId id : remaining) {
      (distance(pos[id], pos[vcl]) <= radius ? group : rest).push_back(id);
    }
    out.push_back(plain_lcf(group, deployment));
    remaining = std::move(rest);
  }
  return make_itinerary_set(std::move(out));
}

double default_ma_dpt(const AgentParams& params, std::size_t sources_per_agent) {
  return payload_after(sources_per_agent, params);
}

namespace {

// Cuts `order` into consecutive runs whose projected payload stays within
// `ma_dpt_bits`. Every run holds at least one source.
std::vector<std::vector<NodeId>> segment_by_payload(const std::vector<NodeId>& order,
                                                    std::optional<double> ma_dpt_bits,
                                                    const AgentParams& params) {
  if (!ma_dpt_bits) return {order};
  if (!(*ma_dpt_bits >= payload_after(1, params))) {
    throw std::invalid_argument(
        "ma_dpt must hold at least one source's payload contribution");
  }
  // Relative slack so a threshold written as a decimal still admits the
  // source count it was meant for.
  const double limit = *ma_dpt_bits * (1.0 + 1e-12);
  std::vector<std::vector<NodeId>> segments(1);
  for (NodeId id : order) {
    if (!segments.back().empty() &&
        payload_after(segments.back().size() + 1, params) > limit) {
      segments.emplace_back();
    }
    segments.back().push_back(id);
  }
  return segments;
}

}  // namespace

ItinerarySet plan_cmip(const Deployment& deployment, const Topology& /*topology*/,
                       std::uint32_t k, std::optional<double> ma_dpt_bits,
                       const AgentParams& params, std::uint64_t rng_seed) {
  require_sources(deployment);
  std::vector<Itinerary> out;
  for (const Partition& part :
       kmeans_partition(deployment.sources, k, deployment.positions, rng_seed)) {
    const Itinerary partition_lcf = plain_lcf(part.members, deployment);
    for (const auto& segment :
         segment_by_payload(partition_lcf.visit_order, ma_dpt_bits, params)) {
      Itinerary lcf = plain_lcf(segment, deployment);
      const NodeId fsn =
          farthest_source_node(segment, deployment.positions, deployment.sink_position());
      if (lcf.visit_order.back() == fsn) {
        out.push_back(reverse_itinerary(std::move(lcf)));
      } else {
        auto [main_agent, clone] = split_at_fsn(lcf, fsn);
        out.push_back(std::move(main_agent));
        out.push_back(std::move(clone));
      }
    }
  }
  return make_itinerary_set(std::move(out));
}

ItinerarySet plan_gigm(const Deployment& deployment, const Topology& /*topology*/,
                       std::uint32_t k, double ma_dpt_bits, const AgentParams& params,
                       std::uint64_t rng_seed) {
  require_sources(deployment);
  std::vector<Itinerary> out;
  for (const Partition& part :
       kmeans_partition(deployment.sources, k, deployment.positions, rng_seed)) {
    const Itinerary lcf = plain_lcf(part.members, deployment);
    for (auto& segment : segment_by_payload(lcf.visit_order, ma_dpt_bits, params)) {
      Itinerary agent;
      agent.visit_order = std::move(segment);
      agent.start_anchor = deployment.sink_id;
      out.push_back(std::move(agent));
    }
  }
  return make_itinerary_set(std::move(out));
}

}  // namespace mip
