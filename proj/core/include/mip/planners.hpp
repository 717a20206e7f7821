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
#include <optional>
#include <string_view>

#include "mip/agent_sim.hpp"
#include "mip/itinerary.hpp"
#include "mip/topology.hpp"

namespace mip {

enum class PlannerKind { kCmip, kClMip, kGigmMip };

std::string_view planner_name(PlannerKind kind);
// Accepts "CMIP", "CL-MIP", "GIGM-MIP" (case-insensitive).
std::optional<PlannerKind> parse_planner(std::string_view name);

// Default partition count: ceil(source_count / 20).
std::uint32_t default_partition_count(std::size_t source_count);

// Clone-based planner. Sources are split into `k` k-means partitions. Each
// partition's local-closest-first order from the sink is cut into agents by
// the payload threshold as in plan_gigm (nullopt: one agent per partition),
// and every agent's sources are reordered local-closest-first from the sink.
// If the agent's farthest source from the sink comes last, the itinerary is
// reversed into a single plain agent; otherwise it is split at that source
// into a main/clone pair.
ItinerarySet plan_cmip(const Deployment& deployment, const Topology& topology,
                       std::uint32_t k, std::optional<double> ma_dpt_bits,
                       const AgentParams& params, std::uint64_t rng_seed);

// Source-to-source influence used to pick visiting central locations.
enum class ImpactKernel {
  kExponential,  // exp(-d / scale)
  kGaussian,     // exp(-(d / scale)^2)
};

inline constexpr double kDefaultGroupRadiusRanges = 3.0;

struct ClMipOptions {
  ImpactKernel kernel = ImpactKernel::kExponential;
  // Length scale of the kernel; nullopt means the transmission range.
  std::optional<double> kernel_scale;
  // Grouping radius around each central location; nullopt means
  // kDefaultGroupRadiusRanges transmission ranges.
  std::optional<double> group_radius;
};

double impact_factor(ImpactKernel kernel, double distance, double scale);

// Central-location planner: repeatedly picks the unassigned source with the
// highest accumulated impact from all unassigned sources (itself included),
// groups every unassigned source within the radius, and gives each group a
// plain local-closest-first itinerary from the sink.
ItinerarySet plan_clmip(const Deployment& deployment, const Topology& topology,
                        const ClMipOptions& options = {});

// Memory-bounded planner: k-means partitions, then each partition's
// local-closest-first order is cut into consecutive segments so that no
// agent's projected payload exceeds `ma_dpt_bits`. Segments stay unreversed.
// Throws std::invalid_argument when ma_dpt_bits is below one source's
// contribution.
ItinerarySet plan_gigm(const Deployment& deployment, const Topology& topology,
                       std::uint32_t k, double ma_dpt_bits, const AgentParams& params,
                       std::uint64_t rng_seed);

// Payload threshold sized to hold `sources_per_agent` sources' contributions.
double default_ma_dpt(const AgentParams& params, std::size_t sources_per_agent);

}  // namespace mip
