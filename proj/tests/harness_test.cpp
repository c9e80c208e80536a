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


#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rismesh/config.hpp"
#include "rismesh/experiment.hpp"
#include "rismesh/fixture.hpp"

namespace rismesh {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("rismesh_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int line_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Config, DefaultsMatchShippedFile) {
  const ExperimentConfig c = load_config(RISMESH_SOURCE_DIR "/fixtures/default.conf");
  const ExperimentConfig d;
  EXPECT_EQ(c.scenario.num_bs, 28);
  EXPECT_EQ(c.scenario.num_ue, 28);
  EXPECT_EQ(c.scenario.num_ris, 28);
  EXPECT_EQ(c.scenario.num_rn, 14);
  EXPECT_EQ(c.scenario.num_pairs, 200);
  EXPECT_EQ(c.num_tests, 100);
  EXPECT_DOUBLE_EQ(c.scenario.box_m, 32.0);
  EXPECT_DOUBLE_EQ(c.scenario.reach_m, 20.0);
  EXPECT_NEAR(c.channel.alpha_rad, d.channel.alpha_rad, 1e-15);
  EXPECT_DOUBLE_EQ(c.channel.f_hz, 1e12);
  EXPECT_DOUBLE_EQ(c.channel.w_hz, 3e9);
  EXPECT_DOUBLE_EQ(c.channel.k_f, 0.0016);
  EXPECT_DOUBLE_EQ(c.channel.p_be_w, 0.1);
  EXPECT_DOUBLE_EQ(c.channel.t_noise_kelvin, 300.0);
  EXPECT_DOUBLE_EQ(c.channel.t_snr_db, 10.0);
  EXPECT_DOUBLE_EQ(c.scenario.ris.elements, 1e4);
  EXPECT_DOUBLE_EQ(c.scenario.ris.dx, 1.5e-4);
}

TEST(Config, RoundTripsThroughFormat) {
  ExperimentConfig c = parse_config("alpha_deg = 12\nseed = 9\nbackup = on\npairs = 7\n");
  EXPECT_TRUE(c.backup);
  const ExperimentConfig again = parse_config(format_config(c));
  EXPECT_EQ(format_config(again), format_config(c));
  EXPECT_EQ(again.seed, 9u);
  EXPECT_EQ(again.scenario.num_pairs, 7);
}

TEST(Config, HalfWavelengthElementsFollowFrequency) {
  const ExperimentConfig c = parse_config("f_hz = 5e11\n");
  EXPECT_DOUBLE_EQ(c.scenario.ris.dx, 3e-4);
  EXPECT_DOUBLE_EQ(parse_config("f_hz = 5e11\ndx_m = 1e-3").scenario.ris.dx, 1e-3);
}

TEST(Config, Errors) {
  auto message = [](std::string_view text) -> std::string {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message("\ncolour = blue").find("line 2"), std::string::npos);
  EXPECT_NE(message("seed = 1\nseed = 2").find("duplicate"), std::string::npos);
  EXPECT_NE(message("seed 1").find("line 1"), std::string::npos);
  EXPECT_NE(message("box_m = wide").find("not a number"), std::string::npos);
  EXPECT_NE(message("W_hz = -3").find("W_hz"), std::string::npos);
  EXPECT_FALSE(message("tests = 0").empty());
  EXPECT_FALSE(message("alpha_deg = 180").empty());
  EXPECT_TRUE(message("# nothing\n\n").empty());
  EXPECT_THROW(load_config("/nonexistent/rismesh.conf"), IoError);
}

TEST(Fixture, ParsesShippedExample) {
  const GoldenFixture f = load_fixture(RISMESH_SOURCE_DIR "/fixtures/six_segment.fixture");
  EXPECT_EQ(f.vertices.size(), 6u);
  EXPECT_EQ(f.num_pairs, 4u);
  EXPECT_EQ(f.conflicts.size(), 6u);
  EXPECT_EQ(f.exempt.size(), 2u);
  EXPECT_DOUBLE_EQ(f.numerator[3], 1000.0);
  EXPECT_DOUBLE_EQ(f.threshold_linear, 10.0);
}

TEST(Fixture, ErrorsCarryLineNumbers) {
  EXPECT_EQ(line_of([] { parse_fixture("vertex A\nconflict A B 3\n"); }), 2);
  EXPECT_EQ(line_of([] { parse_fixture("vertex A\nvertex A\n"); }), 2);
  EXPECT_EQ(line_of([] { parse_fixture("# c\n\nnoise loud\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_fixture("vertex A\nvertex B\nconflict A B -1\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_fixture("edge A B\n"); }), 1);
  EXPECT_EQ(line_of([] { parse_fixture("vertex A\nconflict A A 1\n"); }), 2);
  EXPECT_EQ(line_of([] { parse_fixture("pairs 2.5\n"); }), 1);
  EXPECT_EQ(line_of([] { parse_fixture("threshold\n"); }), 1);
}

TEST(Golden, AllDeltasTolerated) {
  const GoldenFixture f = parse_fixture(
      "numerator 1000\nnoise 1\nthreshold 10\n"
      "vertex A\nvertex B\nvertex C\nvertex D\n"
      "conflict A B 5\nconflict B A 5\nconflict A C 5\nstructural C D\n");
  const GoldenResult r = run_golden(f);
  EXPECT_EQ(r.graphs[0].edges.size(), 3u);
  for (std::size_t m = 1; m < 4; ++m) {
    EXPECT_EQ(r.graphs[m].edges, (std::vector<Edge>{{2, 3}}));
  }
}

TEST(Golden, SingleVertex) {
  const GoldenResult r = run_golden(parse_fixture("vertex A\n"));
  for (const auto& g : r.graphs) EXPECT_TRUE(g.edges.empty());
}

TEST(Experiment, ZeroPairsGivesTrivialRows) {
  ExperimentConfig c;
  c.num_tests = 1;
  c.scenario.num_pairs = 0;
  const fs::path dir = scratch("zero");
  run_experiment(c, dir);
  EXPECT_EQ(slurp(dir / "results.csv"),
            "test_id,method,num_pairs,blocked_pairs,num_segments,C,ratio_vs_zim,A,F,build_time_ms\n"
            "0,ZIM,0,0,0,0,1.000000,0.000000,1.000000,0.000\n"
            "0,RCS,0,0,0,0,1.000000,0.000000,1.000000,0.000\n"
            "0,DCS,0,0,0,0,1.000000,0.000000,1.000000,0.000\n"
            "0,ICS,0,0,0,0,1.000000,0.000000,1.000000,0.000\n");
  fs::remove_all(dir);
}

TEST(Experiment, GraphDumpFormat) {
  InterferenceGraph g;
  g.method = Method::kDcs;
  g.vertex_count = 3;
  g.edges = {{0, 2}, {1, 2}};
  std::ostringstream out;
  write_graph_dump(out, g, {"BS0-UE5", "BS1-RN3", "RN3-UE6"});
  EXPECT_EQ(out.str(),
            "method DCS\nvertices 3\nvertex 0 BS0-UE5\nvertex 1 BS1-RN3\nvertex 2 RN3-UE6\n"
            "edge 0 2\nedge 1 2\n");
  EXPECT_EQ(format_ratio(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_ratio(1.25), "1.250000");
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.num_tests = 4;
  c.scenario.num_pairs = 60;
  c.seed = 11;
  return c;
}

std::string dump_tree(const fs::path& dir) {
  std::string all;
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += fs::relative(f, dir).string() + "\n" + slurp(f);
  return all;
}

TEST(Experiment, ByteStableAcrossRunsAndThreads) {
  const ExperimentConfig c = small_config();
  const fs::path a = scratch("det_a"), b = scratch("det_b"), t = scratch("det_t");
  run_experiment(c, a, {1, true, false});
  run_experiment(c, b, {1, true, false});
  run_experiment(c, t, {4, true, false});
  const std::string first = dump_tree(a);
  EXPECT_NE(first.find("graphs/test_0003_ICS.txt"), std::string::npos);
  EXPECT_EQ(first, dump_tree(b));
  EXPECT_EQ(first, dump_tree(t));
  for (const auto& d : {a, b, t}) fs::remove_all(d);
}

TEST(Experiment, BackupModeAddsExemptAlternatives) {
  ExperimentConfig c = small_config();
  c.backup = true;
  const TestInstance inst = prepare_instance(c, 5);
  std::size_t backups = 0;
  for (const auto& p : inst.paths) backups += p.is_backup;
  EXPECT_GT(backups, 0u);
  const ConflictMatrix m = build_conflict_matrix(inst.segments, inst.chains, c.channel, c.scenario.ris);
  std::size_t exempt = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (const ConflictEntry& e : m.rows[p]) {
      exempt += e.exempt;
      const Segment& a = inst.segments[p];
      const Segment& b = inst.segments[static_cast<std::size_t>(e.secondary)];
      const bool cross = a.pair_id == b.pair_id && a.backup_of.has_value() != b.backup_of.has_value();
      EXPECT_EQ(e.exempt, cross);
    }
  }
  EXPECT_GT(exempt, 0u);
  // Backups are alternatives, not extra pairs.
  EXPECT_EQ(run_test(c, 0).num_pairs, prepare_instance(c, c.seed).routed_pairs);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RISMESH_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch("cli");
  {
    std::ofstream(dir / "bad.conf") << "colour = blue\n";
    std::ofstream(dir / "tiny.conf") << "tests = 1\npairs = 5\n";
  }
  EXPECT_EQ(run_cli("golden --fixture " RISMESH_SOURCE_DIR "/fixtures/six_segment.fixture"), 0);
  EXPECT_EQ(run_cli("validate --config " RISMESH_SOURCE_DIR "/fixtures/default.conf"), 0);
  EXPECT_EQ(run_cli("validate --config " + (dir / "bad.conf").string()), 1);
  EXPECT_EQ(run_cli("validate --config " + (dir / "missing.conf").string()), 2);
  EXPECT_EQ(run_cli("golden --fixture " + (dir / "bad.conf").string()), 1);
  EXPECT_EQ(run_cli("run --config " + (dir / "tiny.conf").string() + " --out " +
                    (dir / "out").string() + " --dump-graphs"),
            0);
  EXPECT_TRUE(fs::exists(dir / "out" / "results.csv"));
  EXPECT_TRUE(fs::exists(dir / "out" / "graphs" / "test_0000_ZIM.txt"));
  EXPECT_EQ(run_cli("run --config " + (dir / "tiny.conf").string() + " --out /proc/rismesh"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 1);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace rismesh
