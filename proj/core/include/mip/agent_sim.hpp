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

#include <span>
#include <vector>

#include "mip/itinerary.hpp"
#include "mip/topology.hpp"

namespace mip {

// Mobile-agent cost model. Defaults follow the reference setup; the MAC data
// rate, control delay and cloning cost are not part of it and carry
// conventional values.
struct AgentParams {
  double processing_code_bits = 1024.0;  // includes the agent packet header
  double data_rate_bps = 250e3;
  double processing_rate_bps = 50e6;
  double access_delay_s = 0.010;
  double control_delay_s = 0.002;
  double raw_data_bits = 2048.0;
  double reduction_ratio = 0.8;
  // When false the per-source data is raw * (1 - reduction_ratio); when true
  // it is raw * reduction_ratio.
  bool reduction_means_kept = false;
  double aggregation_ratio = 0.9;
  // Time to instantiate the clone at the clone point.
  double clone_delay_s = 0.010;

  // Throws ConfigError naming the offending field.
  void validate() const;

  // Reduced data contributed by one source before aggregation.
  double reduced_data_bits() const;
};

// First-order radio model.
struct EnergyParams {
  double elec_j_per_bit = 50e-9;
  double amp_j_per_bit_m2 = 100e-12;
  // Each clone is also billed for its main agent's sink-to-clone-point leg,
  // so every itinerary pays for a full sink-to-sink journey. When false the
  // shared leg is paid once, by the main agent.
  bool clone_pays_dispatch = true;

  void validate() const;
};

enum class LegPhase {
  kDispatch,  // sink (or clone point) to the first source
  kRoam,      // source to source
  kReturn,    // last source to the sink
};

struct Leg {
  NodeId from = 0;
  NodeId to = 0;
  int hops = 0;
  double ma_size_bits = 0.0;
  LegPhase phase = LegPhase::kRoam;
  double delay_s = 0.0;
  double energy_j = 0.0;
};

struct AgentTrace {
  AgentKind kind = AgentKind::kPlain;
  std::vector<Leg> legs;
  // One entry per visited source, in visit order.
  std::vector<double> processing_delays_s;
  double clone_delay_s = 0.0;
  // Time between dispatch from the sink and the start of this agent's own
  // walk; non-zero only for clones.
  double start_offset_s = 0.0;
  // Sum of leg delays, processing delays and clone_delay_s.
  double total_delay_s = 0.0;
  // Energy billed to a clone for the main agent's dispatch leg.
  double inherited_energy_j = 0.0;
  // Sum of leg energies plus inherited_energy_j.
  double total_energy_j = 0.0;
  double delivered_payload_bits = 0.0;
  std::size_t sources_visited = 0;

  double completion_time_s() const { return start_offset_s + total_delay_s; }
  double phase_delay_s(LegPhase phase) const;
  double processing_delay_s() const;
};

struct MissionResult {
  std::vector<AgentTrace> traces;
  double task_duration_s = 0.0;
  double total_energy_j = 0.0;
  double delivered_bits = 0.0;
  std::size_t delivered_sources = 0;
};

// Aggregated payload after visiting `sources_visited` sources:
// j * d * f with d the reduced per-source data and f the aggregation ratio.
double payload_after(std::size_t sources_visited, const AgentParams& params);

// (size / D_r + t_ctrl) * hops.
double leg_delay(double ma_size_bits, int hops, const AgentParams& params);

// Access delay plus raw-data processing time at one source.
double source_processing_delay(const AgentParams& params);

// Per hop (u, v): size * (elec + amp * d(u,v)^2) to transmit plus
// size * elec to receive at v.
double leg_energy(double ma_size_bits, std::span<const NodeId> path,
                  std::span<const Point> positions, const EnergyParams& energy);

// Walks one agent's itinerary. Plain and main agents leave the sink carrying
// only the processing code; a clone starts at its clone point with an empty
// payload. Every inter-node move follows hop_path. An empty plain or main
// itinerary yields an empty trace; an empty clone itinerary returns from the
// clone point straight to the sink.
AgentTrace simulate_agent(const Itinerary& itinerary, const Topology& topology,
                          const AgentParams& params, const EnergyParams& energy);

// Simulates every agent of the set. Each clone is offset by its main agent's
// dispatch delay plus the cloning delay, and inherits that leg's energy when
// energy.clone_pays_dispatch is set. Throws SimulationError when a clone has
// no matching main agent.
MissionResult simulate_mission(const ItinerarySet& set, const Topology& topology,
                               const AgentParams& params, const EnergyParams& energy);

// Abstract migration cost: agent size starts at 1 and grows by 1 per
// visited source; each leg costs size * hops. `leg_hops` lists the dispatch
// leg, the roaming legs and the return leg in order.
long long size_weighted_hop_cost(std::span<const int> leg_hops);

}  // namespace mip
