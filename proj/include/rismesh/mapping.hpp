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

#ifndef RISMESH_MAPPING_HPP_
#define RISMESH_MAPPING_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rismesh/interference.hpp"
#include "rismesh/segment.hpp"

namespace rismesh {

enum class Method { kZim, kRcs, kDcs, kIcs };

const char* to_string(Method method);

using Edge = std::pair<int, int>;  // first < second

struct InterferenceGraph {
  Method method = Method::kZim;
  int vertex_count = 0;
  std::vector<Edge> edges;  // sorted, unique
  // directed_conflicts[p]: secondaries p conflicts with through its own
  // accumulated interference (ascending ids). Structural edges live apart.
  std::vector<std::vector<int>> directed_conflicts;
  std::vector<Edge> structural;

  bool has_edge(int a, int b) const;
};

enum class OrderKind { kIncreasing, kDecreasing, kRandom };

struct OrderingPolicy {
  OrderKind kind = OrderKind::kDecreasing;
  std::uint64_t seed = 0;
};

// Candidate secondaries of one primary: non-exempt, overlapping and not
// structural. Ordered by ascending secondary id.
struct Candidate {
  int secondary = -1;
  double delta = 0.0;
};

std::vector<Candidate> candidates_of(const ConflictMatrix& matrix, int primary);

// Index of the first candidate whose addition pushes SNIR to or below the
// threshold; ordered.size() when the whole set is tolerated.
std::size_t crossing_index(std::span<const double> ordered_deltas, double numerator,
                           double noise, double threshold_linear);

// Permutation of `candidates` for one primary under a policy. Ties in delta
// resolve by ascending id; random orders draw from a stream keyed by
// (seed, primary).
std::vector<Candidate> order_candidates(std::vector<Candidate> candidates,
                                        const OrderingPolicy& policy, int primary);

using OrderFn = std::function<std::vector<Candidate>(std::vector<Candidate>, int primary)>;

InterferenceGraph zim(const ConflictMatrix& matrix);
InterferenceGraph ordered_mapping(const ConflictMatrix& matrix, const OrderingPolicy& policy);
InterferenceGraph ordered_mapping(const ConflictMatrix& matrix, Method method,
                                  const OrderFn& order);
InterferenceGraph map_interference(const ConflictMatrix& matrix, Method method,
                                   std::uint64_t seed = 0);

std::vector<Edge> structural_edges(std::span<const Segment> segments);

}  // namespace rismesh

#endif  // RISMESH_MAPPING_HPP_
