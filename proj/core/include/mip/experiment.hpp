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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mip/agent_sim.hpp"
#include "mip/metrics.hpp"
#include "mip/network.hpp"
#include "mip/planners.hpp"

namespace mip {

enum class Scenario { kVarySources, kVaryAggregation };

// Full description of a benchmark run. Every field has a default, so an
// empty config file reproduces the reference setup.
struct ExperimentConfig {
  NetworkConfig network;
  AgentParams agent;
  EnergyParams energy;
  ClMipOptions clmip;
  std::vector<PlannerKind> planners{PlannerKind::kCmip, PlannerKind::kClMip,
                                    PlannerKind::kGigmMip};
  // Sweep of the source-count scenario: 10, 15, ..., 80.
  std::vector<std::uint32_t> source_counts;
  // Sweep of the aggregation scenario: 0.1, 0.2, ..., 0.9.
  std::vector<double> aggregation_ratios;
  // Source count held fixed while the aggregation ratio varies.
  std::uint32_t aggregation_source_count = 80;
  // nullopt means "auto": ceil(sources / 20) partitions, and a payload
  // threshold of ma_dpt_sources contributions at the current aggregation
  // ratio.
  std::optional<std::uint32_t> k;
  std::optional<double> ma_dpt_bits;
  std::uint32_t ma_dpt_sources = 4;
  // One trial per seed. Defaults to network.rng_seed + 0..29.
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_path = "results";

  ExperimentConfig();
  void validate() const;
};

// Parses `key = value` lines with dotted section prefixes. Blank lines and
// `#` comments are ignored, and unset keys keep their defaults. Throws
// ConfigError with the line number for syntax errors and unknown keys, and
// with the field name for invalid values.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Seeds used for one (trial, source count) cell. Deployments depend on the
// trial seed only; source selection also mixes in the count, so adding
// sweep points leaves existing cells unchanged.
std::uint64_t source_selection_seed(std::uint64_t trial_seed, std::uint32_t source_count);

// Deploys, selects sources, plans, simulates and measures one cell for every
// configured planner. Planners share the deployment and the source set.
std::vector<MetricsRow> run_cell(const ExperimentConfig& config, const Deployment& network,
                                 const Topology& topology, std::uint32_t source_count,
                                 std::uint64_t trial_seed, const AgentParams& agent);

std::vector<MetricsRow> run_vary_sources(const ExperimentConfig& config);
std::vector<MetricsRow> run_vary_aggregation(const ExperimentConfig& config);

// Per-(planner, source count, aggregation ratio) averages over seeds.
struct MeanRow {
  std::string planner_name;
  std::uint32_t source_count = 0;
  double aggregation_ratio = 0.0;
  std::size_t trials = 0;
  double task_duration_s = 0.0;
  double throughput_bps = 0.0;
  double energy_j = 0.0;
};

std::vector<MeanRow> mean_rows(const std::vector<MetricsRow>& rows);

inline constexpr std::string_view kCsvHeader =
    "planner,source_count,aggregation_ratio,seed,task_duration_s,throughput_bps,energy_j";
inline constexpr std::string_view kMeansCsvHeader =
    "planner,source_count,aggregation_ratio,trials,task_duration_s,throughput_bps,energy_j";

// Rows sorted by (planner, source_count, aggregation_ratio, seed), numbers at
// nine significant digits.
std::string format_csv(std::vector<MetricsRow> rows);
std::string format_means_csv(const std::vector<MeanRow>& rows);

// Throw std::invalid_argument on empty input and SimulationError when the
// file cannot be written.
void emit_csv(const std::vector<MetricsRow>& rows, const std::filesystem::path& path);
void emit_means_csv(const std::vector<MeanRow>& rows, const std::filesystem::path& path);

// Gnuplot script drawing task duration, throughput and energy against the
// scenario's swept variable from a means CSV, one series per planner present
// in `rows`.
std::string format_plot_script(const std::vector<MetricsRow>& rows, Scenario scenario,
                               const std::string& means_csv_name,
                               const std::string& output_prefix);
void emit_plot_script(const std::vector<MetricsRow>& rows, Scenario scenario,
                      const std::filesystem::path& means_csv,
                      const std::filesystem::path& path);

}  // namespace mip
