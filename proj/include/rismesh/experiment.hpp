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

#ifndef RISMESH_EXPERIMENT_HPP_
#define RISMESH_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rismesh/config.hpp"
#include "rismesh/interference.hpp"
#include "rismesh/mapping.hpp"
#include "rismesh/metrics.hpp"
#include "rismesh/network.hpp"

namespace rismesh {

inline constexpr Method kAllMethods[] = {Method::kZim, Method::kRcs, Method::kDcs,
                                         Method::kIcs};

// Everything derived from one scenario, up to the conflict matrix.
struct TestInstance {
  Scenario scenario;
  std::vector<TransmissionPath> paths;
  std::vector<Segment> segments;
  std::vector<BeamChain> chains;
  ConflictMatrix matrix;
  std::size_t routed_pairs = 0;
  std::size_t blocked_pairs = 0;
};

struct TestOutcome {
  int test_id = 0;
  std::size_t num_pairs = 0;
  std::size_t blocked_pairs = 0;
  std::size_t num_segments = 0;
  std::vector<std::string> vertex_names;
  std::vector<InterferenceGraph> graphs;  // in kAllMethods order
  std::vector<MetricsReport> reports;
  double build_time_ms = 0.0;  // matrix + all four mappings
};

// Scenario, routes, segments and chains for one seed; the matrix is left
// empty so callers can time or swap the kernel.
TestInstance prepare_instance(const ExperimentConfig& config, std::uint64_t seed);

TestOutcome run_test(const ExperimentConfig& config, int test_id);

struct RunOptions {
  int threads = 0;  // 0: OpenMP default
  bool dump_graphs = false;
  bool record_timing = false;  // otherwise build_time_ms is written as 0
};

std::vector<TestOutcome> run_tests(const ExperimentConfig& config, const RunOptions& options);

// Writes results.csv (and graphs/ when requested) under `out_dir`.
std::vector<TestOutcome> run_experiment(const ExperimentConfig& config,
                                        const std::filesystem::path& out_dir,
                                        const RunOptions& options = {});

void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const TestOutcome& outcome, bool record_timing);

// `method NAME`, `vertices N`, one `vertex ID NAME` per vertex and one
// `edge A B` per edge, edges sorted.
void write_graph_dump(std::ostream& out, const InterferenceGraph& graph,
                      const std::vector<std::string>& names);

std::string format_ratio(double ratio);

}  // namespace rismesh

#endif  // RISMESH_EXPERIMENT_HPP_
