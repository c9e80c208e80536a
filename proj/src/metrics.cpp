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

#include "rismesh/metrics.hpp"

#include <algorithm>
#include <limits>

namespace rismesh {

std::size_t conflict_complexity(const InterferenceGraph& graph) { return 2 * graph.edges.size(); }

double reduction_ratio(std::size_t c_zim, std::size_t c_method) {
  if (c_method == 0) return c_zim == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(c_zim) / static_cast<double>(c_method);
}

FractionOfTime fraction_of_time(std::size_t conflicts, std::size_t num_pairs) {
  FractionOfTime out;
  if (conflicts == 0) return out;  // nobody to share the spectrum with
  if (num_pairs == 0) {
    out.defined = false;
    out.average_conflicts = std::numeric_limits<double>::quiet_NaN();
    out.fraction = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.average_conflicts = static_cast<double>(conflicts) / static_cast<double>(num_pairs);
  out.fraction = std::min(1.0, 1.0 / out.average_conflicts);
  return out;
}

MetricsReport make_report(const InterferenceGraph& graph, std::size_t num_pairs,
                          std::size_t c_zim) {
  MetricsReport r;
  r.method = graph.method;
  r.conflicts = conflict_complexity(graph);
  r.num_pairs = num_pairs;
  const FractionOfTime f = fraction_of_time(r.conflicts, num_pairs);
  r.average_conflicts = f.average_conflicts;
  r.fraction_of_time = f.fraction;
  r.ratio_vs_zim = reduction_ratio(c_zim, r.conflicts);
  return r;
}

}  // namespace rismesh
