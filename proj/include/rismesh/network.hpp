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

#ifndef RISMESH_NETWORK_HPP_
#define RISMESH_NETWORK_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rismesh/channel.hpp"
#include "rismesh/core.hpp"
#include "rismesh/segment.hpp"

namespace rismesh {

struct Device {
  int id = -1;
  DeviceKind kind = DeviceKind::kBS;
  Point3 position;
};

struct CommunicationPair {
  int id = -1;
  int bs = -1;
  int ue = -1;
};

struct ScenarioConfig {
  int num_bs = 28;
  int num_ue = 28;
  int num_ris = 28;
  int num_rn = 14;
  double box_m = 32.0;
  double reach_m = 20.0;
  int num_pairs = 200;
  RisGeometry ris;

  void validate() const;
};

// Devices are numbered BS first, then RIS, RN and UE.
struct Scenario {
  std::vector<Device> devices;
  std::vector<CommunicationPair> pairs;
  double box_m = 0.0;
  double reach_m = 0.0;
  RisGeometry ris;
  std::uint64_t seed = 0;

  const Device& device(int id) const { return devices.at(static_cast<std::size_t>(id)); }
  int count(DeviceKind kind) const;
};

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

// Undirected adjacency over devices. An edge needs distance <= reach and a
// legal role combination; use can_transmit() for the direction.
struct ReachabilityGraph {
  std::vector<std::vector<int>> adjacency;

  bool has_edge(int a, int b) const;
};

bool can_transmit(DeviceKind from, DeviceKind to);

ReachabilityGraph reachability_graph(const Scenario& scenario);

struct PathSearchOptions {
  int max_hops = 6;
  int max_relays = 2;
};

struct TransmissionPath {
  int pair_id = -1;
  std::vector<int> nodes;  // device ids, BS first, UE last
  std::vector<Segment> segments;
  double total_length = 0.0;
  int relays = 0;
  bool is_backup = false;
};

// Splits a device route at every RN and evaluates each piece's channel.
std::vector<Segment> split_route(const Scenario& scenario, const std::vector<int>& nodes,
                                 const ChannelParams& params);

// Route search over one scenario. Holds a per-device table bounding how much
// amplitude any continuation through RISs can still deliver, which prunes
// RIS chains that can no longer reach the SNR threshold.
class PathFinder {
 public:
  PathFinder(const Scenario& scenario, const ReachabilityGraph& graph,
             const ChannelParams& params, PathSearchOptions options = {});

  std::optional<TransmissionPath> find(const CommunicationPair& pair) const;
  std::optional<TransmissionPath> find_with_relays(const CommunicationPair& pair,
                                                   int min_relays) const;

 private:
  std::optional<TransmissionPath> search(const CommunicationPair& pair, int relays) const;

  const Scenario* scenario_;
  const ReachabilityGraph* graph_;
  ChannelParams params_;
  PathSearchOptions options_;
  double min_power_;  // received power that exactly meets the threshold
  std::vector<std::vector<double>> reach_bound_;  // [device][hops left]
};

// Shortest route with every segment above the SNR threshold, preferring
// fewer relays. nullopt means the pair is blocked.
std::optional<TransmissionPath> find_path(const Scenario& scenario,
                                          const ReachabilityGraph& graph,
                                          const CommunicationPair& pair,
                                          const ChannelParams& params,
                                          const PathSearchOptions& options = {});

// Best route using at least one relay. Used as a backup next to a relay-free
// main path.
std::optional<TransmissionPath> find_relay_path(const Scenario& scenario,
                                                const ReachabilityGraph& graph,
                                                const CommunicationPair& pair,
                                                const ChannelParams& params,
                                                const PathSearchOptions& options = {});

// Flattens paths into graph vertices, numbering segments in path order.
std::vector<Segment> segment_paths(const std::vector<TransmissionPath>& paths);

}  // namespace rismesh

#endif  // RISMESH_NETWORK_HPP_
