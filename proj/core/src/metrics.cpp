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

#include "mip/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mip {

double task_duration(const MissionResult& mission) {
  if (mission.traces.empty()) throw std::invalid_argument("task_duration: empty mission");
  double longest = 0.0;
  for (const AgentTrace& t : mission.traces) longest = std::max(longest, t.completion_time_s());
  return longest;
}

double event_to_sink_throughput(const MissionResult& mission) {
  const double duration = task_duration(mission);
  if (!(duration > 0.0)) {
    throw std::invalid_argument("event_to_sink_throughput: zero-duration mission");
  }
  return mission.delivered_bits / duration;
}

double total_energy(const MissionResult& mission) {
  double sum = 0.0;
  for (const AgentTrace& t : mission.traces) sum += t.total_energy_j;
  return sum;
}

MetricsRow measure(const MissionResult& mission, std::string planner_name,
                   std::uint32_t source_count, double aggregation_ratio,
                   std::uint64_t seed) {
  MetricsRow row;
  row.planner_name = std::move(planner_name);
  row.source_count = source_count;
  row.aggregation_ratio = aggregation_ratio;
  row.seed = seed;
  row.task_duration_s = task_duration(mission);
  row.throughput_bps = event_to_sink_throughput(mission);
  row.energy_j = total_energy(mission);
  return row;
}

}  // namespace mip
