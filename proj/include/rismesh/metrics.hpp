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

#ifndef RISMESH_METRICS_HPP_
#define RISMESH_METRICS_HPP_

#include <cstddef>

#include "rismesh/mapping.hpp"

namespace rismesh {

struct FractionOfTime {
  double average_conflicts = 0.0;  // A, uncapped
  double fraction = 1.0;           // F, capped at 1
  bool defined = true;             // false when conflicts exist but no pairs do
};

struct MetricsReport {
  Method method = Method::kZim;
  std::size_t conflicts = 0;  // C
  std::size_t num_pairs = 0;  // N_p
  double average_conflicts = 0.0;
  double fraction_of_time = 1.0;
  double ratio_vs_zim = 1.0;  // +inf when this method has no conflicts but ZIM does
};

std::size_t conflict_complexity(const InterferenceGraph& graph);
double reduction_ratio(std::size_t c_zim, std::size_t c_method);
FractionOfTime fraction_of_time(std::size_t conflicts, std::size_t num_pairs);

MetricsReport make_report(const InterferenceGraph& graph, std::size_t num_pairs,
                          std::size_t c_zim);

}  // namespace rismesh

#endif  // RISMESH_METRICS_HPP_
