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
#include <string>

#include "mip/agent_sim.hpp"

namespace mip {

struct MetricsRow {
  std::string planner_name;
  std::uint32_t source_count = 0;
  double aggregation_ratio = 0.0;
  std::uint64_t seed = 0;
  double task_duration_s = 0.0;
  double throughput_bps = 0.0;
  double energy_j = 0.0;
};

// Latest completion time across agents. Throws std::invalid_argument on a
// mission without traces.
double task_duration(const MissionResult& mission);

// Delivered bits over task duration. Throws std::invalid_argument when the
// duration is not positive.
double event_to_sink_throughput(const MissionResult& mission);

double total_energy(const MissionResult& mission);

MetricsRow measure(const MissionResult& mission, std::string planner_name,
                   std::uint32_t source_count, double aggregation_ratio,
                   std::uint64_t seed);

}  // namespace mip
