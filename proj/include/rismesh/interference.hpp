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

#ifndef RISMESH_INTERFERENCE_HPP_
#define RISMESH_INTERFERENCE_HPP_

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rismesh/channel.hpp"
#include "rismesh/geometry.hpp"
#include "rismesh/segment.hpp"

namespace rismesh {

enum class HitKind { kDirectAtReceiver, kAtRis };

struct OverlapHit {
  HitKind kind = HitKind::kDirectAtReceiver;
  int ris_id = -1;
  int ris_index = -1;    // 0-based position of the RIS in the primary's chain
  double n_iota = 0.0;   // elements lit by both beams (kAtRis only)
  int hop_index = 0;     // covering solid on the secondary chain, 1-based
  double axis_offset = 0.0;
};

inline constexpr double kStructuralDelta = std::numeric_limits<double>::infinity();

// One (primary, secondary) cell of the conflict matrix.
struct ConflictEntry {
  int secondary = -1;
  bool overlap = false;
  bool structural = false;  // half-duplex relay shared in opposite roles
  bool exempt = false;      // main path vs. its own backup
  double delta = 0.0;       // W, or kStructuralDelta
  std::vector<OverlapHit> hits;
};

// Sparse, row-per-primary conflict matrix plus what the mapping step needs
// to evaluate SNIR for each primary.
struct ConflictMatrix {
  std::vector<std::vector<ConflictEntry>> rows;  // sorted by secondary
  std::vector<std::string> names;
  std::vector<double> numerator;
  double noise = 0.0;
  double threshold_linear = 0.0;

  std::size_t size() const { return rows.size(); }
  const ConflictEntry* find(int primary, int secondary) const;
};

// Segments sharing a relay where one receives and the other transmits.
bool shares_relay_opposite(const Segment& a, const Segment& b);

std::vector<OverlapHit> detect_overlaps(const Segment& primary, const BeamChain& primary_chain,
                                        const Segment& secondary,
                                        const BeamChain& secondary_chain,
                                        const RisGeometry& ris);

// Interference power the secondary delivers to the primary's receiver,
// summed over hits and weighted by both antenna gains.
double interference_delta(const Segment& primary, const Segment& secondary,
                          std::span<const OverlapHit> hits, const ChannelParams& params);

// Every ordered pair of segments, rows computed in parallel.
ConflictMatrix build_conflict_matrix(const std::vector<Segment>& segments,
                                     const std::vector<BeamChain>& chains,
                                     const ChannelParams& params, const RisGeometry& ris);

// Straight nested loop kept as the reference for the parallel kernel.
ConflictMatrix build_conflict_matrix_serial(const std::vector<Segment>& segments,
                                            const std::vector<BeamChain>& chains,
                                            const ChannelParams& params,
                                            const RisGeometry& ris);

// Chains for all segments, last hops extended to each one's threshold distance.
std::vector<BeamChain> build_chains(const std::vector<Segment>& segments,
                                    const ChannelParams& params, const RisGeometry& ris);

}  // namespace rismesh

#endif  // RISMESH_INTERFERENCE_HPP_
