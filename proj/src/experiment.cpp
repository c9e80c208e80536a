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

#include "rismesh/experiment.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>

namespace rismesh {

TestInstance prepare_instance(const ExperimentConfig& config, std::uint64_t seed) {
  TestInstance inst;
  inst.scenario = generate_scenario(config.scenario, seed);
  const ReachabilityGraph graph = reachability_graph(inst.scenario);
  const PathFinder finder(inst.scenario, graph, config.channel, config.search);
  for (const CommunicationPair& pair : inst.scenario.pairs) {
    auto path = finder.find(pair);
    if (!path) {
      ++inst.blocked_pairs;
      continue;
    }
    ++inst.routed_pairs;
    const bool relay_free = path->relays == 0;
    inst.paths.push_back(std::move(*path));
    if (config.backup && relay_free) {
      if (auto backup = finder.find_with_relays(pair, 1)) {
        backup->is_backup = true;
        inst.paths.push_back(std::move(*backup));
      }
    }
  }
  inst.segments = segment_paths(inst.paths);
  inst.chains = build_chains(inst.segments, config.channel, inst.scenario.ris);
  return inst;
}

TestOutcome run_test(const ExperimentConfig& config, int test_id) {
  const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(test_id);
  TestInstance inst = prepare_instance(config, seed);

  TestOutcome out;
  out.test_id = test_id;
  out.num_pairs = inst.routed_pairs;
  out.blocked_pairs = inst.blocked_pairs;
  out.num_segments = inst.segments.size();

  const auto start = std::chrono::steady_clock::now();
  inst.matrix = build_conflict_matrix(inst.segments, inst.chains, config.channel, inst.scenario.ris);
  for (Method m : kAllMethods) out.graphs.push_back(map_interference(inst.matrix, m, seed));
  const auto stop = std::chrono::steady_clock::now();
  out.vertex_names = inst.matrix.names;
  out.build_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  const std::size_t c_zim = conflict_complexity(out.graphs.front());
  for (const InterferenceGraph& g : out.graphs) {
    out.reports.push_back(make_report(g, out.num_pairs, c_zim));
  }
  return out;
}

std::vector<TestOutcome> run_tests(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  const int n = config.num_tests;
  std::vector<TestOutcome> outcomes(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int t = 0; t < n; ++t) {
    try {
      outcomes[static_cast<std::size_t>(t)] = run_test(config, t);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outcomes;
}

std::string format_ratio(double ratio) {
  if (std::isinf(ratio)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", ratio);
  return buf;
}

namespace {

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "test_id,method,num_pairs,blocked_pairs,num_segments,C,ratio_vs_zim,A,F,build_time_ms\n";
}

void write_csv_rows(std::ostream& out, const TestOutcome& o, bool record_timing) {
  for (const MetricsReport& r : o.reports) {
    out << o.test_id << ',' << to_string(r.method) << ',' << o.num_pairs << ','
        << o.blocked_pairs << ',' << o.num_segments << ',' << r.conflicts << ','
        << format_ratio(r.ratio_vs_zim) << ',' << fixed(r.average_conflicts, 6) << ','
        << fixed(r.fraction_of_time, 6) << ','
        << fixed(record_timing ? o.build_time_ms : 0.0, 3) << '\n';
  }
}

void write_graph_dump(std::ostream& out, const InterferenceGraph& graph,
                      const std::vector<std::string>& names) {
  out << "method " << to_string(graph.method) << '\n';
  out << "vertices " << graph.vertex_count << '\n';
  for (int v = 0; v < graph.vertex_count; ++v) {
    out << "vertex " << v;
    if (static_cast<std::size_t>(v) < names.size()) out << ' ' << names[static_cast<std::size_t>(v)];
    out << '\n';
  }
  for (const auto& [a, b] : graph.edges) out << "edge " << a << ' ' << b << '\n';
}

std::vector<TestOutcome> run_experiment(const ExperimentConfig& config,
                                        const std::filesystem::path& out_dir,
                                        const RunOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<TestOutcome> outcomes = run_tests(config, options);

  std::ofstream csv(out_dir / "results.csv");
  if (!csv) throw IoError("cannot write " + (out_dir / "results.csv").string());
  write_csv_header(csv);
  for (const TestOutcome& o : outcomes) write_csv_rows(csv, o, options.record_timing);
  if (!csv) throw IoError("write failed: " + (out_dir / "results.csv").string());

  if (options.dump_graphs) {
    const auto graph_dir = out_dir / "graphs";
    std::filesystem::create_directories(graph_dir, ec);
    if (ec) throw IoError("cannot create " + graph_dir.string() + ": " + ec.message());
    for (const TestOutcome& o : outcomes) {
      for (const InterferenceGraph& g : o.graphs) {
        char file[64];
        std::snprintf(file, sizeof file, "test_%04d_%s.txt", o.test_id, to_string(g.method));
        std::ofstream dump(graph_dir / file);
        if (!dump) throw IoError("cannot write " + (graph_dir / file).string());
        write_graph_dump(dump, g, o.vertex_names);
      }
    }
  }
  return outcomes;
}

}  // namespace rismesh
