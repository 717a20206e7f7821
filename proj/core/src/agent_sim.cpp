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

#include "mip/agent_sim.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mip/errors.hpp"

namespace mip {

void AgentParams::validate() const {
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0)) throw ConfigError(field, 0, std::string(field) + " must be > 0");
  };
  positive(processing_code_bits, "agent.processing_code_bits");
  positive(data_rate_bps, "agent.data_rate_bps");
  positive(processing_rate_bps, "agent.processing_rate_bps");
  positive(access_delay_s, "agent.access_delay_s");
  positive(control_delay_s, "agent.control_delay_s");
  positive(raw_data_bits, "agent.raw_data_bits");
  if (!(reduction_ratio >= 0.0 && reduction_ratio < 1.0)) {
    throw ConfigError("agent.reduction_ratio", 0, "agent.reduction_ratio must be in [0, 1)");
  }
  if (!(aggregation_ratio > 0.0 && aggregation_ratio <= 1.0)) {
    throw ConfigError("agent.aggregation_ratio", 0,
                      "agent.aggregation_ratio must be in (0, 1]");
  }
  if (!(clone_delay_s >= 0.0)) {
    throw ConfigError("agent.clone_delay_s", 0, "agent.clone_delay_s must be >= 0");
  }
}

double AgentParams::reduced_data_bits() const {
  return raw_data_bits * (reduction_means_kept ? reduction_ratio : 1.0 - reduction_ratio);
}

void EnergyParams::validate() const {
  if (!(elec_j_per_bit > 0.0)) {
    throw ConfigError("energy.elec_j_per_bit", 0, "energy.elec_j_per_bit must be > 0");
  }
  if (!(amp_j_per_bit_m2 > 0.0)) {
    throw ConfigError("energy.amp_j_per_bit_m2", 0, "energy.amp_j_per_bit_m2 must be > 0");
  }
}

double AgentTrace::phase_delay_s(LegPhase phase) const {
  double sum = 0.0;
  for (const Leg& leg : legs) {
    if (leg.phase == phase) sum += leg.delay_s;
  }
  return sum;
}

double AgentTrace::processing_delay_s() const {
  return std::accumulate(processing_delays_s.begin(), processing_delays_s.end(), 0.0);
}

double payload_after(std::size_t sources_visited, const AgentParams& params) {
  return static_cast<double>(sources_visited) * params.reduced_data_bits() *
         params.aggregation_ratio;
}

double leg_delay(double ma_size_bits, int hops, const AgentParams& params) {
  return (ma_size_bits / params.data_rate_bps + params.control_delay_s) * hops;
}

double source_processing_delay(const AgentParams& params) {
  return params.access_delay_s + params.raw_data_bits / params.processing_rate_bps;
}

double leg_energy(double ma_size_bits, std::span<const NodeId> path,
                  std::span<const Point> positions, const EnergyParams& energy) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double d2 = squared_distance(positions[path[i - 1]], positions[path[i]]);
    const double tx = ma_size_bits * (energy.elec_j_per_bit + energy.amp_j_per_bit_m2 * d2);
    const double rx = ma_size_bits * energy.elec_j_per_bit;
    total += tx + rx;
  }
  return total;
}

namespace {

class TraceBuilder {
 public:
  TraceBuilder(AgentKind kind, const Topology& topology, const AgentParams& params,
               const EnergyParams& energy)
      : topology_(topology), params_(params), energy_(energy) {
    trace_.kind = kind;
  }

  void move(NodeId from, NodeId to, double ma_size_bits, LegPhase phase) {
    const std::vector<NodeId> path = hop_path(topology_, from, to);
    Leg leg;
    leg.from = from;
    leg.to = to;
    leg.hops = static_cast<int>(path.size()) - 1;
    leg.ma_size_bits = ma_size_bits;
    leg.phase = phase;
    leg.delay_s = leg_delay(ma_size_bits, leg.hops, params_);
    leg.energy_j = leg_energy(ma_size_bits, path, topology_.positions(), energy_);
    trace_.total_delay_s += leg.delay_s;
    trace_.total_energy_j += leg.energy_j;
    trace_.legs.push_back(leg);
  }

  void process_source() {
    const double delay = source_processing_delay(params_);
    trace_.processing_delays_s.push_back(delay);
    trace_.total_delay_s += delay;
    ++trace_.sources_visited;
    trace_.delivered_payload_bits = payload_after(trace_.sources_visited, params_);
  }

  void clone() {
    trace_.clone_delay_s = params_.clone_delay_s;
    trace_.total_delay_s += params_.clone_delay_s;
  }

  double ma_size_bits() const {
    return params_.processing_code_bits + trace_.delivered_payload_bits;
  }

  AgentTrace finish() && { return std::move(trace_); }

 private:
  const Topology& topology_;
  const AgentParams& params_;
  const EnergyParams& energy_;
  AgentTrace trace_;
};

}  // namespace

AgentTrace simulate_agent(const Itinerary& itinerary, const Topology& topology,
                          const AgentParams& params, const EnergyParams& energy) {
  TraceBuilder builder(itinerary.kind, topology, params, energy);
  const NodeId sink = topology.sink_id();
  NodeId at = itinerary.start_anchor;
  if (itinerary.kind == AgentKind::kClone) {
    if (!itinerary.clone_point) {
      throw SimulationError("clone itinerary without a clone point");
    }
    at = *itinerary.clone_point;
  }
  if (itinerary.visit_order.empty()) {
    if (itinerary.kind == AgentKind::kClone) {
      builder.move(at, sink, builder.ma_size_bits(), LegPhase::kReturn);
    }
    return std::move(builder).finish();
  }

  bool first = true;
  for (NodeId source : itinerary.visit_order) {
    builder.move(at, source, builder.ma_size_bits(),
                 first ? LegPhase::kDispatch : LegPhase::kRoam);
    if (first && itinerary.kind == AgentKind::kMain) builder.clone();
    builder.process_source();
    at = source;
    first = false;
  }
  builder.move(at, sink, builder.ma_size_bits(), LegPhase::kReturn);
  return std::move(builder).finish();
}

MissionResult simulate_mission(const ItinerarySet& set, const Topology& topology,
                               const AgentParams& params, const EnergyParams& energy) {
  MissionResult result;
  result.traces.reserve(set.itineraries.size());
  for (const Itinerary& it : set.itineraries) {
    result.traces.push_back(simulate_agent(it, topology, params, energy));
  }
  for (std::size_t i = 0; i < set.itineraries.size(); ++i) {
    const Itinerary& clone = set.itineraries[i];
    if (clone.kind != AgentKind::kClone) continue;
    const auto main_it = std::find_if(
        set.itineraries.begin(), set.itineraries.end(), [&](const Itinerary& other) {
          return other.kind == AgentKind::kMain && other.clone_point == clone.clone_point;
        });
    if (main_it == set.itineraries.end()) {
      throw SimulationError("clone at node " + std::to_string(clone.clone_point.value_or(0)) +
                            " has no main agent");
    }
    const AgentTrace& main_trace =
        result.traces[static_cast<std::size_t>(main_it - set.itineraries.begin())];
    AgentTrace& clone_trace = result.traces[i];
    clone_trace.start_offset_s =
        main_trace.phase_delay_s(LegPhase::kDispatch) + main_trace.clone_delay_s;
    if (energy.clone_pays_dispatch) {
      double inherited = 0.0;
      for (const Leg& leg : main_trace.legs) {
        if (leg.phase == LegPhase::kDispatch) inherited += leg.energy_j;
      }
      clone_trace.inherited_energy_j = inherited;
      clone_trace.total_energy_j += inherited;
    }
  }
  for (const AgentTrace& trace : result.traces) {
    result.task_duration_s = std::max(result.task_duration_s, trace.completion_time_s());
    result.total_energy_j += trace.total_energy_j;
    result.delivered_sources += trace.sources_visited;
  }
  result.delivered_bits = payload_after(result.delivered_sources, params);
  return result;
}

long long size_weighted_hop_cost(std::span<const int> leg_hops) {
  long long cost = 0;
  long long size = 1;
  for (int hops : leg_hops) {
    cost += size * hops;
    ++size;
  }
  return cost;
}

}  // namespace mip
