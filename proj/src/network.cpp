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

#include "rismesh/network.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

#include "rismesh/geometry.hpp"

namespace rismesh {

namespace {

// Exact-width draws so scenarios are bit-identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

bool is_receiver(DeviceKind kind) { return kind == DeviceKind::kRN || kind == DeviceKind::kUE; }

}  // namespace

void ScenarioConfig::validate() const {
  if (num_bs <= 0 || num_ue <= 0 || num_ris < 0 || num_rn < 0) {
    throw DomainError("scenario needs at least one BS and one UE, and no negative counts");
  }
  if (!(box_m > 0.0) || !(reach_m > 0.0)) throw DomainError("box and reach must be positive");
  if (num_pairs < 0) throw DomainError("pair count must be nonnegative");
  if (!(ris.elements > 0.0 && ris.dx > 0.0 && ris.dy > 0.0)) {
    throw DomainError("RIS geometry must be positive");
  }
}

int Scenario::count(DeviceKind kind) const {
  return static_cast<int>(
      std::count_if(devices.begin(), devices.end(), [&](const Device& d) { return d.kind == kind; }));
}

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  Scenario scenario;
  scenario.box_m = config.box_m;
  scenario.reach_m = config.reach_m;
  scenario.ris = config.ris;
  scenario.seed = seed;

  std::mt19937_64 rng(seed);
  auto add = [&](DeviceKind kind, int count) {
    for (int i = 0; i < count; ++i) {
      Device d;
      d.id = static_cast<int>(scenario.devices.size());
      d.kind = kind;
      d.position.x = uniform01(rng) * config.box_m;
      d.position.y = uniform01(rng) * config.box_m;
      d.position.z = uniform01(rng) * config.box_m;
      scenario.devices.push_back(d);
    }
  };
  add(DeviceKind::kBS, config.num_bs);
  add(DeviceKind::kRIS, config.num_ris);
  add(DeviceKind::kRN, config.num_rn);
  add(DeviceKind::kUE, config.num_ue);

  const int first_ue = config.num_bs + config.num_ris + config.num_rn;
  for (int i = 0; i < config.num_pairs; ++i) {
    CommunicationPair pair;
    pair.id = i;
    pair.bs = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(config.num_bs)));
    pair.ue = first_ue + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(config.num_ue)));
    scenario.pairs.push_back(pair);
  }
  return scenario;
}

bool can_transmit(DeviceKind from, DeviceKind to) {
  return from != DeviceKind::kUE && to != DeviceKind::kBS;
}

bool ReachabilityGraph::has_edge(int a, int b) const {
  const auto& row = adjacency.at(static_cast<std::size_t>(a));
  return std::binary_search(row.begin(), row.end(), b);
}

ReachabilityGraph reachability_graph(const Scenario& scenario) {
  const std::size_t n = scenario.devices.size();
  ReachabilityGraph graph;
  graph.adjacency.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Device& da = scenario.devices[a];
      const Device& db = scenario.devices[b];
      if (!can_transmit(da.kind, db.kind) && !can_transmit(db.kind, da.kind)) continue;
      if (distance(da.position, db.position) > scenario.reach_m) continue;
      graph.adjacency[a].push_back(static_cast<int>(b));
      graph.adjacency[b].push_back(static_cast<int>(a));
    }
  }
  return graph;
}

std::vector<Segment> split_route(const Scenario& scenario, const std::vector<int>& nodes,
                                 const ChannelParams& params) {
  if (nodes.size() < 2) throw DomainError("split_route: route needs two devices");
  std::vector<Segment> segments;
  Segment current;
  auto start = [&](int id) {
    current = Segment{};
    current.transmitter = id;
    current.transmitter_kind = scenario.device(id).kind;
    current.nodes.push_back(scenario.device(id).position);
  };
  start(nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Device& d = scenario.device(nodes[i]);
    current.nodes.push_back(d.position);
    if (d.kind == DeviceKind::kRIS) {
      current.ris_chain.push_back(d.id);
      continue;
    }
    current.receiver = d.id;
    current.receiver_kind = d.kind;
    evaluate_segment(current, scenario.ris, params);
    segments.push_back(current);
    if (i + 1 < nodes.size()) start(d.id);
  }
  return segments;
}

PathFinder::PathFinder(const Scenario& scenario, const ReachabilityGraph& graph,
                       const ChannelParams& params, PathSearchOptions options)
    : scenario_(&scenario), graph_(&graph), params_(params), options_(options) {
  const double g = antenna_gain(params.alpha_rad);
  min_power_ = params.threshold_linear() *
               noise_power(params.t_noise_kelvin, params.w_hz, params.k_boltzmann) / (g * g);

  // reach_bound_[x][k]: largest amplitude factor any walk of at most k hops
  // from RIS x through further RISs can add before landing on an RN or UE.
  // Each RIS is credited with all N elements, so the bound is admissible.
  const std::size_t n = scenario.devices.size();
  const int max_hops = std::max(options.max_hops, 1);
  reach_bound_.assign(n, std::vector<double>(static_cast<std::size_t>(max_hops) + 1, 0.0));
  for (int k = 1; k <= max_hops; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (scenario.devices[x].kind != DeviceKind::kRIS) continue;
      double best = 0.0;
      for (int y : graph.adjacency[x]) {
        const Device& dy = scenario.device(y);
        const double h = transfer_gain(params.f_hz, distance(scenario.devices[x].position,
                                                             dy.position),
                                       params.k_f, params.light_speed);
        if (is_receiver(dy.kind)) {
          best = std::max(best, h);
        } else if (dy.kind == DeviceKind::kRIS) {
          best = std::max(best, h * scenario.ris.elements *
                                    reach_bound_[static_cast<std::size_t>(y)]
                                                [static_cast<std::size_t>(k - 1)]);
        }
      }
      reach_bound_[x][static_cast<std::size_t>(k)] = best;
    }
  }
}

namespace {

struct Label {
  double f = 0.0;  // g plus straight-line distance to the UE
  double g = 0.0;
  std::uint64_t order = 0;
  std::vector<int> nodes;
  int relays = 0;
  double seg_amplitude = 1.0;
  double seg_n_prime = 0.0;
  int seg_hops = 0;
};

struct LabelAfter {
  bool operator()(const Label& a, const Label& b) const {
    if (a.f != b.f) return a.f > b.f;
    return a.order > b.order;
  }
};

}  // namespace

std::optional<TransmissionPath> PathFinder::search(const CommunicationPair& pair,
                                                   int relays) const {
  const Scenario& sc = *scenario_;
  const Point3 target = sc.device(pair.ue).position;
  auto power = [&](double amplitude) { return params_.p_be_w * amplitude * amplitude; };
  auto gain = [&](double d) {
    return transfer_gain(params_.f_hz, d, params_.k_f, params_.light_speed);
  };

  std::priority_queue<Label, std::vector<Label>, LabelAfter> open;
  std::uint64_t order = 0;
  Label root;
  root.f = distance(sc.device(pair.bs).position, target);
  root.order = order++;
  root.nodes = {pair.bs};
  open.push(std::move(root));

  while (!open.empty()) {
    Label label = open.top();
    open.pop();
    const int x = label.nodes.back();
    if (x == pair.ue) {
      TransmissionPath path;
      path.pair_id = pair.id;
      path.nodes = label.nodes;
      path.segments = split_route(sc, path.nodes, params_);
      const double t_lin = params_.threshold_linear();
      const bool feasible = std::all_of(path.segments.begin(), path.segments.end(),
                                        [&](const Segment& s) { return s.snr_linear > t_lin; });
      if (!feasible) continue;  // rounding at the threshold boundary
      path.total_length = label.g;
      path.relays = label.relays;
      return path;
    }

    const int hops_used = static_cast<int>(label.nodes.size()) - 1;
    if (hops_used >= options_.max_hops) continue;
    const int hops_left = options_.max_hops - hops_used - 1;  // after the next hop
    const Device& dx = sc.device(x);

    for (int y : graph_->adjacency[static_cast<std::size_t>(x)]) {
      const Device& dy = sc.device(y);
      if (!can_transmit(dx.kind, dy.kind)) continue;
      if (dy.kind == DeviceKind::kUE && y != pair.ue) continue;
      if (std::find(label.nodes.begin(), label.nodes.end(), y) != label.nodes.end()) continue;

      const double d = distance(dx.position, dy.position);
      Label next;
      next.g = label.g + d;
      next.f = next.g + distance(dy.position, target);
      next.nodes = label.nodes;
      next.nodes.push_back(y);
      next.relays = label.relays;

      if (dy.kind == DeviceKind::kRIS) {
        if (hops_left < 1) continue;
        next.seg_n_prime =
            label.seg_hops == 0
                ? illumination(footprint_radius(params_.alpha_rad, d), sc.ris).n_prime
                : label.seg_n_prime;
        next.seg_amplitude = label.seg_amplitude * gain(d) * next.seg_n_prime;
        next.seg_hops = label.seg_hops + 1;
        const double bound =
            next.seg_amplitude *
            reach_bound_[static_cast<std::size_t>(y)][static_cast<std::size_t>(hops_left)];
        if (power(bound) <= min_power_) continue;
      } else {
        const double amplitude = label.seg_amplitude * gain(d);
        if (power(amplitude) <= min_power_) continue;
        if (dy.kind == DeviceKind::kRN) {
          if (label.relays + 1 > relays || hops_left < 1) continue;
          next.relays = label.relays + 1;
        } else if (label.relays != relays) {
          continue;
        } else {
          next.f = next.g;
        }
        next.seg_amplitude = 1.0;
        next.seg_n_prime = 0.0;
        next.seg_hops = 0;
      }
      next.order = order++;
      open.push(std::move(next));
    }
  }
  return std::nullopt;
}

std::optional<TransmissionPath> PathFinder::find(const CommunicationPair& pair) const {
  return find_with_relays(pair, 0);
}

std::optional<TransmissionPath> PathFinder::find_with_relays(const CommunicationPair& pair,
                                                             int min_relays) const {
  for (int r = min_relays; r <= options_.max_relays; ++r) {
    if (auto path = search(pair, r)) return path;
  }
  return std::nullopt;
}

std::optional<TransmissionPath> find_path(const Scenario& scenario,
                                          const ReachabilityGraph& graph,
                                          const CommunicationPair& pair,
                                          const ChannelParams& params,
                                          const PathSearchOptions& options) {
  return PathFinder(scenario, graph, params, options).find(pair);
}

std::optional<TransmissionPath> find_relay_path(const Scenario& scenario,
                                                const ReachabilityGraph& graph,
                                                const CommunicationPair& pair,
                                                const ChannelParams& params,
                                                const PathSearchOptions& options) {
  auto path = PathFinder(scenario, graph, params, options).find_with_relays(pair, 1);
  if (path) path->is_backup = true;
  return path;
}

std::vector<Segment> segment_paths(const std::vector<TransmissionPath>& paths) {
  std::vector<Segment> out;
  for (const TransmissionPath& path : paths) {
    for (Segment s : path.segments) {
      s.id = static_cast<int>(out.size());
      s.pair_id = path.pair_id;
      s.backup_of = path.is_backup ? std::optional<int>(path.pair_id) : std::nullopt;
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace rismesh
