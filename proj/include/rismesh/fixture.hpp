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

#ifndef RISMESH_FIXTURE_HPP_
#define RISMESH_FIXTURE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rismesh/interference.hpp"
#include "rismesh/mapping.hpp"

namespace rismesh {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Abstract conflict scenario that bypasses geometry entirely:
//
//   numerator 1000          # default SNIR numerator for every vertex
//   noise 1
//   threshold 10            # linear
//   pairs 4                 # N_p for the fraction-of-time metric
//   vertex BS0-UE0 [numerator]
//   conflict PRIMARY SECONDARY [delta]
//   exempt A B
//   structural A B
struct GoldenFixture {
  struct Conflict {
    int primary = -1;
    int secondary = -1;
    double delta = 0.0;
  };

  std::vector<std::string> vertices;
  std::vector<double> numerator;
  double noise = 1.0;
  double threshold_linear = 10.0;
  std::size_t num_pairs = 0;
  std::vector<Conflict> conflicts;
  std::vector<Edge> exempt;
  std::vector<Edge> structural;
};

GoldenFixture parse_fixture(std::string_view text);
GoldenFixture load_fixture(const std::filesystem::path& path);

ConflictMatrix fixture_matrix(const GoldenFixture& fixture);

struct GoldenResult {
  std::vector<InterferenceGraph> graphs;  // ZIM, RCS, DCS, ICS
  std::vector<std::string> names;
  std::size_t num_pairs = 0;
};

GoldenResult run_golden(const GoldenFixture& fixture, std::uint64_t seed = 0);

}  // namespace rismesh

#endif  // RISMESH_FIXTURE_HPP_
