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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "mip/errors.hpp"
#include "mip/topology.hpp"

namespace mip {

namespace {

constexpr std::size_t kDefaultTrials = 30;

std::vector<std::uint64_t> consecutive_seeds(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = base + i;
  return seeds;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Parser state for one `key = value` line.
struct Field {
  std::string key;
  std::string_view value;
  int line;

  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError(key, line,
                      "line " + std::to_string(line) + ": invalid value for " + key + ": " + why);
  }

  double number() const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      fail("expected a number, got '" + std::string(value) + "'");
    }
    return v;
  }

  template <typename Int>
  Int integer(std::string_view text) const {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail("expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
  }

  template <typename Int>
  Int integer() const {
    return integer<Int>(value);
  }

  bool boolean() const {
    const std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail("expected true or false");
  }

  bool is_auto() const { return lower(value) == "auto"; }

  std::vector<std::string_view> items() const {
    std::string_view body = value;
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') fail("unterminated list");
      body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<std::string_view> out;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view item = trim(body.substr(0, comma));
      if (item.empty()) fail("empty list element");
      out.push_back(item);
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return out;
  }

  std::vector<double> numbers() const {
    std::vector<double> out;
    for (std::string_view item : items()) {
      Field sub{key, item, line};
      out.push_back(sub.number());
    }
    return out;
  }
};

using Setter = std::function<void(ExperimentConfig&, const Field&)>;

struct ParseState {
  std::optional<std::size_t> trials;
  bool seeds_given = false;
};

std::unordered_map<std::string, Setter> make_setters(ParseState& state) {
  std::unordered_map<std::string, Setter> s;
  s["network.field_width"] = [](auto& c, const Field& f) { c.network.field_width = f.number(); };
  s["network.field_height"] = [](auto& c, const Field& f) { c.network.field_height = f.number(); };
  s["network.node_count"] = [](auto& c, const Field& f) {
    c.network.node_count = f.template integer<std::uint32_t>();
  };
  s["network.transmission_range"] = [](auto& c, const Field& f) {
    c.network.transmission_range = f.number();
  };
  s["network.sink_x"] = [](auto& c, const Field& f) { c.network.sink_position.x = f.number(); };
  s["network.sink_y"] = [](auto& c, const Field& f) { c.network.sink_position.y = f.number(); };
  s["network.rng_seed"] = [](auto& c, const Field& f) {
    c.network.rng_seed = f.template integer<std::uint64_t>();
  };

  s["agent.processing_code_bits"] = [](auto& c, const Field& f) {
    c.agent.processing_code_bits = f.number();
  };
  s["agent.data_rate_bps"] = [](auto& c, const Field& f) { c.agent.data_rate_bps = f.number(); };
  s["agent.processing_rate_bps"] = [](auto& c, const Field& f) {
    c.agent.processing_rate_bps = f.number();
  };
  s["agent.access_delay_s"] = [](auto& c, const Field& f) { c.agent.access_delay_s = f.number(); };
  s["agent.control_delay_s"] = [](auto& c, const Field& f) {
    c.agent.control_delay_s = f.number();
  };
  s["agent.raw_data_bits"] = [](auto& c, const Field& f) { c.agent.raw_data_bits = f.number(); };
  s["agent.reduction_ratio"] = [](auto& c, const Field& f) {
    c.agent.reduction_ratio = f.number();
  };
  s["agent.reduction_means_kept"] = [](auto& c, const Field& f) {
    c.agent.reduction_means_kept = f.boolean();
  };
  s["agent.aggregation_ratio"] = [](auto& c, const Field& f) {
    c.agent.aggregation_ratio = f.number();
  };
  s["agent.clone_delay_s"] = [](auto& c, const Field& f) { c.agent.clone_delay_s = f.number(); };

  s["energy.elec_j_per_bit"] = [](auto& c, const Field& f) {
    c.energy.elec_j_per_bit = f.number();
  };
  s["energy.amp_j_per_bit_m2"] = [](auto& c, const Field& f) {
    c.energy.amp_j_per_bit_m2 = f.number();
  };

  s["energy.clone_pays_dispatch"] = [](auto& c, const Field& f) {
    c.energy.clone_pays_dispatch = f.boolean();
  };

  s["planner.k"] = [](auto& c, const Field& f) {
    c.k = f.is_auto() ? std::nullopt : std::optional(f.template integer<std::uint32_t>());
  };
  s["planner.ma_dpt"] = [](auto& c, const Field& f) {
    c.ma_dpt_bits = f.is_auto() ? std::nullopt : std::optional(f.number());
  };
  s["planner.ma_dpt_sources"] = [](auto& c, const Field& f) {
    c.ma_dpt_sources = f.template integer<std::uint32_t>();
  };
  s["planner.impact_kernel"] = [](auto& c, const Field& f) {
    const std::string v = lower(f.value);
    if (v == "exponential") {
      c.clmip.kernel = ImpactKernel::kExponential;
    } else if (v == "gaussian") {
      c.clmip.kernel = ImpactKernel::kGaussian;
    } else {
      f.fail("expected exponential or gaussian");
    }
  };
  s["planner.impact_scale"] = [](auto& c, const Field& f) {
    c.clmip.kernel_scale = f.is_auto() ? std::nullopt : std::optional(f.number());
  };
  s["planner.clmip_radius"] = [](auto& c, const Field& f) {
    c.clmip.group_radius = f.is_auto() ? std::nullopt : std::optional(f.number());
  };

  s["experiment.planners"] = [](auto& c, const Field& f) {
    c.planners.clear();
    for (std::string_view item : f.items()) {
      const auto kind = parse_planner(item);
      if (!kind) f.fail("unknown planner '" + std::string(item) + "'");
      c.planners.push_back(*kind);
    }
  };
  s["experiment.source_counts"] = [](auto& c, const Field& f) {
    c.source_counts.clear();
    for (std::string_view item : f.items()) {
      c.source_counts.push_back(f.template integer<std::uint32_t>(item));
    }
  };
  s["experiment.aggregation_ratios"] = [](auto& c, const Field& f) {
    c.aggregation_ratios = f.numbers();
  };
  s["experiment.aggregation_source_count"] = [](auto& c, const Field& f) {
    c.aggregation_source_count = f.template integer<std::uint32_t>();
  };
  s["experiment.seeds"] = [&state](auto& c, const Field& f) {
    c.seeds.clear();
    for (std::string_view item : f.items()) {
      c.seeds.push_back(f.template integer<std::uint64_t>(item));
    }
    state.seeds_given = true;
  };
  s["experiment.trials"] = [&state](auto&, const Field& f) {
    state.trials = f.template integer<std::size_t>();
  };
  s["experiment.output_path"] = [](auto& c, const Field& f) {
    c.output_path = std::string(f.value);
  };
  return s;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  for (std::uint32_t n = 10; n <= 80; n += 5) source_counts.push_back(n);
  for (int i = 1; i <= 9; ++i) aggregation_ratios.push_back(i / 10.0);
  seeds = consecutive_seeds(network.rng_seed, kDefaultTrials);
}

void ExperimentConfig::validate() const {
  network.validate();
  agent.validate();
  energy.validate();
  if (planners.empty()) throw ConfigError("experiment.planners", 0, "no planners selected");
  if (std::set<PlannerKind>(planners.begin(), planners.end()).size() != planners.size()) {
    throw ConfigError("experiment.planners", 0, "experiment.planners lists a planner twice");
  }
  auto check_count = [&](std::uint32_t n, const char* field) {
    if (n < 1 || n > network.node_count) {
      throw ConfigError(field, 0,
                        std::string(field) + " must be in [1, network.node_count]");
    }
  };
  if (source_counts.empty()) {
    throw ConfigError("experiment.source_counts", 0, "experiment.source_counts is empty");
  }
  for (std::uint32_t n : source_counts) check_count(n, "experiment.source_counts");
  check_count(aggregation_source_count, "experiment.aggregation_source_count");
  if (aggregation_ratios.empty()) {
    throw ConfigError("experiment.aggregation_ratios", 0,
                      "experiment.aggregation_ratios is empty");
  }
  for (double f : aggregation_ratios) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ConfigError("experiment.aggregation_ratios", 0,
                        "experiment.aggregation_ratios entries must be in (0, 1]");
    }
  }
  if (seeds.empty()) throw ConfigError("experiment.seeds", 0, "experiment.seeds is empty");
  if (k && *k < 1) throw ConfigError("planner.k", 0, "planner.k must be >= 1");
  if (ma_dpt_bits && !(*ma_dpt_bits > 0.0)) {
    throw ConfigError("planner.ma_dpt", 0, "planner.ma_dpt must be > 0");
  }
  if (ma_dpt_sources < 1) {
    throw ConfigError("planner.ma_dpt_sources", 0, "planner.ma_dpt_sources must be >= 1");
  }
  if (clmip.kernel_scale && !(*clmip.kernel_scale > 0.0)) {
    throw ConfigError("planner.impact_scale", 0, "planner.impact_scale must be > 0");
  }
  if (clmip.group_radius && !(*clmip.group_radius > 0.0)) {
    throw ConfigError("planner.clmip_radius", 0, "planner.clmip_radius must be > 0");
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  ParseState state;
  const auto setters = make_setters(state);
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", line_no,
                        "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto setter = setters.find(key);
    if (setter == setters.end()) {
      throw ConfigError(key, line_no,
                        "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    const Field field{key, value, line_no};
    if (value.empty()) field.fail("missing value");
    setter->second(config, field);
  }
  if (state.seeds_given && state.trials) {
    throw ConfigError("experiment.trials", 0,
                      "experiment.trials and experiment.seeds are mutually exclusive");
  }
  if (!state.seeds_given) {
    config.seeds = consecutive_seeds(config.network.rng_seed, state.trials.value_or(kDefaultTrials));
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, "cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::uint64_t source_selection_seed(std::uint64_t trial_seed, std::uint32_t source_count) {
  // splitmix64 finalizer over the packed cell coordinates.
  std::uint64_t z = trial_seed * 0x9E3779B97F4A7C15ULL + source_count;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<MetricsRow> run_cell(const ExperimentConfig& config, const Deployment& network,
                                 const Topology& topology, std::uint32_t source_count,
                                 std::uint64_t trial_seed, const AgentParams& agent) {
  const std::uint64_t cell_seed = source_selection_seed(trial_seed, source_count);
  const Deployment deployment = select_sources(network, source_count, cell_seed);
  const std::uint32_t k = config.k.value_or(default_partition_count(source_count));
  const double ma_dpt = config.ma_dpt_bits.value_or(default_ma_dpt(agent, config.ma_dpt_sources));

  std::vector<MetricsRow> rows;
  for (PlannerKind planner : config.planners) {
    try {
      ItinerarySet plan;
      switch (planner) {
        case PlannerKind::kCmip:
          plan = plan_cmip(deployment, topology, k, ma_dpt, agent, cell_seed);
          break;
        case PlannerKind::kClMip:
          plan = plan_clmip(deployment, topology, config.clmip);
          break;
        case PlannerKind::kGigmMip:
          plan = plan_gigm(deployment, topology, k, ma_dpt, agent, cell_seed);
          break;
      }
      const MissionResult mission = simulate_mission(plan, topology, agent, config.energy);
      rows.push_back(measure(mission, std::string(planner_name(planner)), source_count,
                             agent.aggregation_ratio, trial_seed));
    } catch (const std::exception& e) {
      throw SimulationError(std::string(planner_name(planner)) + ", " +
                            std::to_string(source_count) + " sources, seed " +
                            std::to_string(trial_seed) + ": " + e.what());
    }
  }
  return rows;
}

namespace {

struct Trial {
  Deployment network;
  Topology topology;
};

Trial prepare_trial(const ExperimentConfig& config, std::uint64_t seed) {
  NetworkConfig net = config.network;
  net.rng_seed = seed;
  try {
    Deployment network = deploy_nodes(net);
    Topology topology = build_topology(network, net.transmission_range);
    return {std::move(network), std::move(topology)};
  } catch (const SimulationError& e) {
    throw SimulationError("seed " + std::to_string(seed) + ": " + e.what());
  }
}

}  // namespace

std::vector<MetricsRow> run_vary_sources(const ExperimentConfig& config) {
  config.validate();
  std::vector<MetricsRow> rows;
  for (std::uint64_t seed : config.seeds) {
    const Trial trial = prepare_trial(config, seed);
    for (std::uint32_t count : config.source_counts) {
      auto cell = run_cell(config, trial.network, trial.topology, count, seed, config.agent);
      rows.insert(rows.end(), cell.begin(), cell.end());
    }
  }
  return rows;
}

std::vector<MetricsRow> run_vary_aggregation(const ExperimentConfig& config) {
  config.validate();
  std::vector<MetricsRow> rows;
  for (std::uint64_t seed : config.seeds) {
    const Trial trial = prepare_trial(config, seed);
    for (double f : config.aggregation_ratios) {
      AgentParams agent = config.agent;
      agent.aggregation_ratio = f;
      auto cell = run_cell(config, trial.network, trial.topology,
                           config.aggregation_source_count, seed, agent);
      rows.insert(rows.end(), cell.begin(), cell.end());
    }
  }
  return rows;
}

std::vector<MeanRow> mean_rows(const std::vector<MetricsRow>& rows) {
  std::map<std::tuple<std::string, std::uint32_t, double>, MeanRow> groups;
  for (const MetricsRow& r : rows) {
    MeanRow& m = groups[{r.planner_name, r.source_count, r.aggregation_ratio}];
    m.planner_name = r.planner_name;
    m.source_count = r.source_count;
    m.aggregation_ratio = r.aggregation_ratio;
    ++m.trials;
    m.task_duration_s += r.task_duration_s;
    m.throughput_bps += r.throughput_bps;
    m.energy_j += r.energy_j;
  }
  std::vector<MeanRow> out;
  for (auto& [key, m] : groups) {
    const double n = static_cast<double>(m.trials);
    m.task_duration_s /= n;
    m.throughput_bps /= n;
    m.energy_j /= n;
    out.push_back(m);
  }
  return out;
}

namespace {

std::string g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SimulationError("cannot write " + path.string());
  out << contents;
  if (!out.flush()) throw SimulationError("cannot write " + path.string());
}

}  // namespace

std::string format_csv(std::vector<MetricsRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
    return std::tie(a.planner_name, a.source_count, a.aggregation_ratio, a.seed) <
           std::tie(b.planner_name, b.source_count, b.aggregation_ratio, b.seed);
  });
  std::string out(kCsvHeader);
  out += '\n';
  for (const MetricsRow& r : rows) {
    out += r.planner_name + ',' + std::to_string(r.source_count) + ',' +
           g9(r.aggregation_ratio) + ',' + std::to_string(r.seed) + ',' +
           g9(r.task_duration_s) + ',' + g9(r.throughput_bps) + ',' + g9(r.energy_j) + '\n';
  }
  return out;
}

std::string format_means_csv(const std::vector<MeanRow>& rows) {
  std::string out(kMeansCsvHeader);
  out += '\n';
  for (const MeanRow& r : rows) {
    out += r.planner_name + ',' + std::to_string(r.source_count) + ',' +
           g9(r.aggregation_ratio) + ',' + std::to_string(r.trials) + ',' +
           g9(r.task_duration_s) + ',' + g9(r.throughput_bps) + ',' + g9(r.energy_j) + '\n';
  }
  return out;
}

void emit_csv(const std::vector<MetricsRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
  write_file(path, format_csv(rows));
}

void emit_means_csv(const std::vector<MeanRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("emit_means_csv: no rows");
  write_file(path, format_means_csv(rows));
}

std::string format_plot_script(const std::vector<MetricsRow>& rows, Scenario scenario,
                               const std::string& means_csv_name,
                               const std::string& output_prefix) {
  std::set<std::string> planners;
  for (const MetricsRow& r : rows) planners.insert(r.planner_name);

  const bool by_sources = scenario == Scenario::kVarySources;
  const int x_column = by_sources ? 2 : 3;
  const char* x_label = by_sources ? "Number of source nodes" : "Aggregation ratio f";
  struct Metric {
    const char* name;
    const char* label;
    int column;
  };
  const Metric metrics[] = {{"duration", "Task duration (s)", 5},
                            {"throughput", "Event-to-sink throughput (bit/s)", 6},
                            {"energy", "Energy consumption (J)", 7}};

  std::ostringstream gp;
  gp << "# Generated by mip_sim. Run from the directory holding " << means_csv_name << ".\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 800,600 enhanced\n"
     << "set key top left\n"
     << "set grid\n"
     << "set xlabel '" << x_label << "'\n";
  for (const Metric& m : metrics) {
    gp << "\nset output '" << output_prefix << '_' << m.name << ".png'\n"
       << "set ylabel '" << m.label << "'\n";
    if (planners.empty()) {
      gp << "# no planner series present\n";
      continue;
    }
    gp << "plot";
    bool first = true;
    for (const std::string& p : planners) {
      gp << (first ? " " : ", \\\n     ") << "'" << means_csv_name << "' every ::1 using "
         << x_column << ":(strcol(1) eq '" << p << "' ? $" << m.column
         << " : 1/0) with linespoints title '" << p << "'";
      first = false;
    }
    gp << '\n';
  }
  return gp.str();
}

void emit_plot_script(const std::vector<MetricsRow>& rows, Scenario scenario,
                      const std::filesystem::path& means_csv,
                      const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("emit_plot_script: no rows");
  write_file(path, format_plot_script(rows, scenario, means_csv.filename().string(),
                                      path.stem().string()));
}

}  // namespace mip
