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

#include "mip/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gtest/gtest.h"
#include "mip/errors.hpp"

namespace mip {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mipsim_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentConfig small_config(std::string extra = "") {
  return parse_config("experiment.planners = CMIP, CL-MIP, GIGM-MIP\n"
                      "experiment.source_counts = [10, 20]\n"
                      "experiment.aggregation_ratios = [0.5, 0.9]\n"
                      "experiment.aggregation_source_count = 20\n"
                      "experiment.seeds = 1, 2\n" +
                      extra);
}

TEST(ParseConfig, EmptyTextGivesReferenceDefaults) {
  const ExperimentConfig c = parse_config("");
  EXPECT_EQ(c.network.field_width, 1000.0);
  EXPECT_EQ(c.network.field_height, 500.0);
  EXPECT_EQ(c.network.node_count, 800u);
  EXPECT_EQ(c.network.transmission_range, 60.0);
  EXPECT_EQ(c.agent.processing_code_bits, 1024.0);
  EXPECT_EQ(c.agent.data_rate_bps, 250e3);
  EXPECT_EQ(c.agent.processing_rate_bps, 50e6);
  EXPECT_EQ(c.agent.access_delay_s, 0.010);
  EXPECT_EQ(c.agent.control_delay_s, 0.002);
  EXPECT_EQ(c.agent.raw_data_bits, 2048.0);
  EXPECT_EQ(c.agent.reduction_ratio, 0.8);
  EXPECT_EQ(c.agent.aggregation_ratio, 0.9);
  EXPECT_EQ(c.energy.elec_j_per_bit, 50e-9);
  EXPECT_EQ(c.energy.amp_j_per_bit_m2, 100e-12);
  EXPECT_EQ(c.source_counts.size(), 15u);
  EXPECT_EQ(c.source_counts.front(), 10u);
  EXPECT_EQ(c.source_counts.back(), 80u);
  EXPECT_EQ(c.aggregation_ratios.size(), 9u);
  EXPECT_EQ(c.seeds.size(), 30u);
  EXPECT_EQ(c.planners.size(), 3u);
}

TEST(ParseConfig, SingletonList) {
  EXPECT_EQ(parse_config("experiment.source_counts = [10]").source_counts,
            std::vector<std::uint32_t>{10});
}

TEST(ParseConfig, CommentsAndBlankLines) {
  const ExperimentConfig c = parse_config("# header\n\nnetwork.node_count = 400  # fewer\n");
  EXPECT_EQ(c.network.node_count, 400u);
}

TEST(ParseConfig, NegativeRangeNamesTheField) {
  try {
    parse_config("network.transmission_range = -5");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "network.transmission_range");
  }
}

TEST(ParseConfig, UnknownKeyReportsLine) {
  try {
    parse_config("network.node_count = 10\nnetwork.colour = blue\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseConfig, SyntaxErrorReportsLine) {
  try {
    parse_config("\n\nthis line has no equals sign\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseConfig, BadNumberNamesField) {
  try {
    parse_config("agent.data_rate_bps = fast");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "agent.data_rate_bps");
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(ParseConfig, TrialsAndSeedsAreExclusive) {
  EXPECT_EQ(parse_config("experiment.trials = 3").seeds, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_THROW(parse_config("experiment.trials = 3\nexperiment.seeds = 4"), ConfigError);
}

TEST(ParseConfig, AutoKnobs) {
  const ExperimentConfig c = parse_config("planner.k = auto\nplanner.ma_dpt = 2000\n");
  EXPECT_FALSE(c.k.has_value());
  EXPECT_EQ(c.ma_dpt_bits, std::optional<double>{2000.0});
}

TEST(LoadConfig, MissingFile) {
  EXPECT_THROW(load_config("/nonexistent/mipsim.cfg"), ConfigError);
}

TEST(RunVarySources, RowCountIsPlannersTimesCountsTimesSeeds) {
  const auto rows = run_vary_sources(small_config());
  EXPECT_EQ(rows.size(), 3u * 2u * 2u);
}

TEST(RunVarySources, SingleCell) {
  const auto rows = run_vary_sources(parse_config(
      "experiment.planners = CMIP\nexperiment.source_counts = [10]\nexperiment.seeds = 1\n"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].planner_name, "CMIP");
  EXPECT_EQ(rows[0].source_count, 10u);
  EXPECT_GT(rows[0].task_duration_s, 0.0);
}

TEST(RunVarySources, PlannersDeliverTheSameBitsPerCell) {
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::vector<double>> delivered;
  for (const MetricsRow& row : run_vary_sources(small_config())) {
    delivered[{row.source_count, row.seed}].push_back(row.throughput_bps * row.task_duration_s);
  }
  for (const auto& [cell, bits] : delivered) {
    ASSERT_EQ(bits.size(), 3u);
    EXPECT_NEAR(bits[0], bits[1], 1e-6 * bits[0]);
    EXPECT_NEAR(bits[0], bits[2], 1e-6 * bits[0]);
  }
}

TEST(RunVaryAggregation, TopRatioMatchesSourceSweep) {
  const ExperimentConfig c = small_config();
  const auto a = run_vary_sources(c);
  const auto b = run_vary_aggregation(c);
  EXPECT_EQ(b.size(), 3u * 2u * 2u);
  for (const MetricsRow& rb : b) {
    if (rb.aggregation_ratio != 0.9) continue;
    const auto match = std::find_if(a.begin(), a.end(), [&](const MetricsRow& ra) {
      return ra.planner_name == rb.planner_name && ra.seed == rb.seed && ra.source_count == 20;
    });
    ASSERT_NE(match, a.end());
    EXPECT_EQ(match->task_duration_s, rb.task_duration_s);
    EXPECT_EQ(match->energy_j, rb.energy_j);
    EXPECT_EQ(match->throughput_bps, rb.throughput_bps);
  }
}

TEST(RunVaryAggregation, DeliveredBitsScaleLinearlyWithRatio) {
  const auto rows = run_vary_aggregation(small_config());
  std::map<std::pair<std::string, std::uint64_t>, std::map<double, double>> bits;
  for (const MetricsRow& r : rows) {
    bits[{r.planner_name, r.seed}][r.aggregation_ratio] = r.throughput_bps * r.task_duration_s;
  }
  for (const auto& [key, by_ratio] : bits) {
    EXPECT_NEAR(by_ratio.at(0.9) / by_ratio.at(0.5), 0.9 / 0.5, 1e-9);
  }
}

TEST(Csv, HeaderAndSortedRows) {
  std::vector<MetricsRow> rows{{"GIGM-MIP", 10, 0.9, 2, 1.0, 2.0, 3.0},
                               {"CMIP", 20, 0.9, 1, 1.0, 2.0, 3.0},
                               {"CMIP", 10, 0.9, 2, 1.0, 2.0, 3.0},
                               {"CMIP", 10, 0.9, 1, 0.5, 1e6, 1.25e-3}};
  const std::string csv = format_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  std::getline(in, line);
  EXPECT_EQ(line, "CMIP,10,0.9,1,0.5,1000000,0.00125");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 10), "CMIP,10,0.");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 8), "CMIP,20,");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 9), "GIGM-MIP,");
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Csv, EmitSingleRowAndRepeatByteIdentical) {
  const fs::path dir = scratch_dir("csv");
  const std::vector<MetricsRow> rows{{"CMIP", 10, 0.9, 1, 0.5, 1000.0, 0.01}};
  emit_csv(rows, dir / "a.csv");
  emit_csv(rows, dir / "b.csv");
  const std::string a = slurp(dir / "a.csv");
  EXPECT_EQ(a, slurp(dir / "b.csv"));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 2);
}

TEST(Csv, Errors) {
  const fs::path dir = scratch_dir("csv_err");
  EXPECT_THROW(emit_csv({}, dir / "x.csv"), std::invalid_argument);
  const std::vector<MetricsRow> rows{{"CMIP", 10, 0.9, 1, 0.5, 1000.0, 0.01}};
  EXPECT_THROW(emit_csv(rows, dir / "missing" / "x.csv"), SimulationError);
}

TEST(Csv, SameConfigSameBytes) {
  const ExperimentConfig c = small_config();
  EXPECT_EQ(format_csv(run_vary_sources(c)), format_csv(run_vary_sources(c)));
}

TEST(MeanRows, AveragesAcrossSeeds) {
  const std::vector<MetricsRow> rows{{"CMIP", 10, 0.9, 1, 1.0, 10.0, 2.0},
                                     {"CMIP", 10, 0.9, 2, 3.0, 30.0, 4.0},
                                     {"CL-MIP", 10, 0.9, 1, 5.0, 50.0, 6.0}};
  const auto means = mean_rows(rows);
  ASSERT_EQ(means.size(), 2u);
  const auto cmip = std::find_if(means.begin(), means.end(),
                                 [](const MeanRow& m) { return m.planner_name == "CMIP"; });
  ASSERT_NE(cmip, means.end());
  EXPECT_EQ(cmip->trials, 2u);
  EXPECT_DOUBLE_EQ(cmip->task_duration_s, 2.0);
  EXPECT_DOUBLE_EQ(cmip->throughput_bps, 20.0);
  EXPECT_DOUBLE_EQ(cmip->energy_j, 3.0);
  const std::string csv = format_means_csv(means);
  EXPECT_EQ(csv.substr(0, kMeansCsvHeader.size()), kMeansCsvHeader);
}

TEST(PlotScript, ThreePlotsOneSeriesPerPlanner) {
  const std::vector<MetricsRow> rows{{"CMIP", 10, 0.9, 1, 1.0, 10.0, 2.0},
                                     {"GIGM-MIP", 10, 0.9, 1, 1.0, 10.0, 2.0}};
  const std::string gp = format_plot_script(rows, Scenario::kVarySources, "m.csv", "out");
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = gp.find(needle); pos != std::string::npos; pos = gp.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("set output"), 3u);
  EXPECT_EQ(count("title 'CMIP'"), 3u);
  EXPECT_EQ(count("title 'GIGM-MIP'"), 3u);
  EXPECT_EQ(count("'CL-MIP'"), 0u);
  EXPECT_NE(gp.find("using 2:"), std::string::npos);
  EXPECT_NE(gp.find("m.csv"), std::string::npos);

  const std::string agg = format_plot_script(rows, Scenario::kVaryAggregation, "m.csv", "out");
  EXPECT_NE(agg.find("using 3:"), std::string::npos);
}

TEST(PlotScript, EmitWritesFile) {
  const fs::path dir = scratch_dir("plot");
  const std::vector<MetricsRow> rows{{"CMIP", 10, 0.9, 1, 1.0, 10.0, 2.0}};
  emit_plot_script(rows, Scenario::kVarySources, dir / "m.csv", dir / "p.gp");
  EXPECT_TRUE(fs::exists(dir / "p.gp"));
  EXPECT_THROW(emit_plot_script({}, Scenario::kVarySources, dir / "m.csv", dir / "q.gp"),
               std::invalid_argument);
}

TEST(SourceSelectionSeed, DependsOnTrialAndCount) {
  EXPECT_EQ(source_selection_seed(1, 10), source_selection_seed(1, 10));
  EXPECT_NE(source_selection_seed(1, 10), source_selection_seed(1, 15));
  EXPECT_NE(source_selection_seed(1, 10), source_selection_seed(2, 10));
}

}  // namespace
}  // namespace mip
