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

#ifndef RISMESH_SEGMENT_HPP_
#define RISMESH_SEGMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rismesh/core.hpp"

namespace rismesh {

// One relay-delimited transmission: a BS or RN transmitter, a chain of
// zero or more RISs, and an RN or UE receiver. `nodes` holds the positions
// of transmitter, RISs and receiver in propagation order, so
// hop_distances[i] == distance(nodes[i], nodes[i + 1]).
struct Segment {
  int id = -1;
  int pair_id = -1;
  std::optional<int> backup_of;  // pair id whose main path this backs up

  int transmitter = -1;
  int receiver = -1;
  DeviceKind transmitter_kind = DeviceKind::kBS;
  DeviceKind receiver_kind = DeviceKind::kUE;
  std::vector<int> ris_chain;
  std::vector<Point3> nodes;
  std::vector<double> hop_distances;
  std::vector<double> n_prime;  // illuminated elements, one per RIS

  double p_eu = 0.0;        // received power, W
  double snr_linear = 0.0;  // SNR at the receiver, linear

  std::size_t ris_count() const { return ris_chain.size(); }
  std::size_t hop_count() const { return hop_distances.size(); }
  double total_length() const;
  std::string label() const;
};

}  // namespace rismesh

#endif  // RISMESH_SEGMENT_HPP_
