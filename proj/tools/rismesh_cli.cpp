// Copyright 2026 The rismesh Authors
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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rismesh/config.hpp"
#include "rismesh/experiment.hpp"
#include "rismesh/fixture.hpp"
#include "rismesh/metrics.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

int run_command(const std::string& config_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed, const rismesh::RunOptions& options) {
  rismesh::ExperimentConfig config = rismesh::load_config(config_path);
  if (seed) config.seed = *seed;
  const auto outcomes = rismesh::run_experiment(config, out_dir, options);
  std::size_t rows = 0;
  for (const auto& o : outcomes) rows += o.reports.size();
  std::cout << "wrote " << rows << " rows to " << (std::filesystem::path(out_dir) / "results.csv").string()
            << "\n";
  return 0;
}

int golden_command(const std::string& fixture_path, std::uint64_t seed) {
  const rismesh::GoldenFixture fixture = rismesh::load_fixture(fixture_path);
  const rismesh::GoldenResult result = rismesh::run_golden(fixture, seed);
  const std::size_t c_zim = rismesh::conflict_complexity(result.graphs.front());
  for (const auto& g : result.graphs) {
    const auto report = rismesh::make_report(g, result.num_pairs, c_zim);
    std::cout << rismesh::to_string(g.method) << " C=" << report.conflicts
              << " ratio_vs_zim=" << rismesh::format_ratio(report.ratio_vs_zim)
              << " A=" << report.average_conflicts << " F=" << report.fraction_of_time << "\n";
    for (const auto& [a, b] : g.edges) {
      std::cout << "  edge " << result.names[static_cast<std::size_t>(a)] << " "
                << result.names[static_cast<std::size_t>(b)] << "\n";
    }
  }
  return 0;
}

int validate_command(const std::string& config_path) {
  const rismesh::ExperimentConfig config = rismesh::load_config(config_path);
  std::cout << rismesh::format_config(config);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interference graphs for RIS/relay mesh networks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  rismesh::RunOptions options;
  auto* run = app.add_subcommand("run", "Run the randomized experiment and write CSV");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--seed", seed, "Override the master seed");
  run->add_flag("--dump-graphs", options.dump_graphs, "Write per-test graph dumps");
  run->add_option("--threads", options.threads, "Worker threads (0 = default)");
  run->add_flag("--timing", options.record_timing, "Fill build_time_ms (breaks byte stability)");

  std::string fixture_path;
  std::uint64_t golden_seed = 0;
  auto* golden = app.add_subcommand("golden", "Replay an abstract conflict fixture");
  golden->add_option("--fixture", fixture_path, "Fixture file")->required();
  golden->add_option("--seed", golden_seed, "Seed for random conflict selection");

  auto* validate = app.add_subcommand("validate", "Parse and echo a config");
  validate->add_option("--config", config_path, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*run) return run_command(config_path, out_dir, seed, options);
    if (*golden) return golden_command(fixture_path, golden_seed);
    if (*validate) return validate_command(config_path);
  } catch (const rismesh::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
