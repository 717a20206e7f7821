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

// mip_sim: runs the itinerary-planning benchmark scenarios and writes CSV
// results plus gnuplot scripts.
//
//   mip_sim simulate --config run.cfg --scenario both --out results/

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mip/errors.hpp"
#include "mip/experiment.hpp"

namespace {

constexpr int kExitConfigError = 1;
constexpr int kExitSimulationError = 2;

struct Options {
  std::string config_path;
  std::string scenario = "both";
  std::string out_dir;
  std::vector<std::string> planners;
  std::string seeds;
  std::size_t trials = 0;
  std::string k;
  std::string ma_dpt;
  bool quiet = false;
};

// "4", "1,2,3" or "1..30".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw mip::ConfigError("--seeds", 0, "--seeds range is empty");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    seeds.push_back(std::stoull(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return seeds;
}

mip::ExperimentConfig resolve_config(const Options& opt) {
  mip::ExperimentConfig config =
      opt.config_path.empty() ? mip::ExperimentConfig{} : mip::load_config(opt.config_path);
  try {
    if (!opt.planners.empty()) {
      config.planners.clear();
      for (const auto& name : opt.planners) {
        const auto kind = mip::parse_planner(name);
        if (!kind) throw mip::ConfigError("--planner", 0, "unknown planner '" + name + "'");
        config.planners.push_back(*kind);
      }
    }
    if (!opt.seeds.empty()) config.seeds = parse_seeds(opt.seeds);
    if (opt.trials > 0) {
      config.seeds.clear();
      for (std::size_t i = 0; i < opt.trials; ++i) config.seeds.push_back(config.network.rng_seed + i);
    }
    if (!opt.k.empty()) {
      config.k = opt.k == "auto" ? std::nullopt
                                 : std::optional(static_cast<std::uint32_t>(std::stoul(opt.k)));
    }
    if (!opt.ma_dpt.empty()) {
      config.ma_dpt_bits = opt.ma_dpt == "auto" ? std::nullopt : std::optional(std::stod(opt.ma_dpt));
    }
  } catch (const std::logic_error& e) {
    // std::stoull and friends report malformed numbers this way.
    throw mip::ConfigError("", 0, std::string("invalid command-line value: ") + e.what());
  }
  if (!opt.out_dir.empty()) config.output_path = opt.out_dir;
  config.validate();
  return config;
}

void print_means(const std::vector<mip::MeanRow>& means, bool by_sources) {
  std::printf("%-9s %8s %12s %16s %12s\n", "planner",
              by_sources ? "sources" : "f", "duration_s", "throughput_bps", "energy_j");
  for (const auto& m : means) {
    if (by_sources) {
      std::printf("%-9s %8u %12.6f %16.3f %12.6f\n", m.planner_name.c_str(), m.source_count,
                  m.task_duration_s, m.throughput_bps, m.energy_j);
    } else {
      std::printf("%-9s %8.2f %12.6f %16.3f %12.6f\n", m.planner_name.c_str(),
                  m.aggregation_ratio, m.task_duration_s, m.throughput_bps, m.energy_j);
    }
  }
}

void run_scenario(const mip::ExperimentConfig& config, mip::Scenario scenario, bool quiet) {
  const bool by_sources = scenario == mip::Scenario::kVarySources;
  const std::string stem = by_sources ? "sources" : "aggregation";
  const auto rows =
      by_sources ? mip::run_vary_sources(config) : mip::run_vary_aggregation(config);
  const auto means = mip::mean_rows(rows);
  const auto dir = config.output_path;
  mip::emit_csv(rows, dir / (stem + ".csv"));
  mip::emit_means_csv(means, dir / (stem + "_means.csv"));
  mip::emit_plot_script(rows, scenario, dir / (stem + "_means.csv"), dir / (stem + ".gp"));
  if (!quiet) {
    std::printf("== scenario %s: %zu rows -> %s\n", stem.c_str(), rows.size(),
                (dir / (stem + ".csv")).string().c_str());
    print_means(means, by_sources);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobile-agent itinerary planning benchmark harness"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* simulate = app.add_subcommand("simulate", "Run benchmark scenarios");
  simulate->add_option("--config", opt.config_path, "Key-value config file")
      ->check(CLI::ExistingFile);
  simulate->add_option("--scenario", opt.scenario, "sources, aggregation or both")
      ->check(CLI::IsMember({"sources", "aggregation", "both"}));
  simulate->add_option("--out", opt.out_dir, "Output directory (overrides experiment.output_path)");
  simulate->add_option("--planner", opt.planners, "Planner to run (repeatable): CMIP, CL-MIP, GIGM-MIP")
      ->delimiter(',');
  simulate->add_option("--seeds", opt.seeds, "Trial seeds: N, a,b,c or lo..hi");
  simulate->add_option("--trials", opt.trials, "Number of consecutive seeds from network.rng_seed")
      ->excludes("--seeds");
  simulate->add_option("--k", opt.k, "Partition count or 'auto'");
  simulate->add_option("--ma-dpt", opt.ma_dpt, "Agent payload threshold in bits or 'auto'");
  simulate->add_flag("-q,--quiet", opt.quiet, "Do not print the means table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  mip::ExperimentConfig config;
  try {
    config = resolve_config(opt);
    std::filesystem::create_directories(config.output_path);
  } catch (const mip::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSimulationError;
  }

  try {
    if (opt.scenario != "aggregation") {
      run_scenario(config, mip::Scenario::kVarySources, opt.quiet);
    }
    if (opt.scenario != "sources") {
      run_scenario(config, mip::Scenario::kVaryAggregation, opt.quiet);
    }
  } catch (const std::exception& e) {
    std::cerr << "simulation error: " << e.what() << '\n';
    return kExitSimulationError;
  }
  return 0;
}
