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

#include "rismesh/interference.hpp"

#include <algorithm>

namespace rismesh {

const ConflictEntry* ConflictMatrix::find(int primary, int secondary) const {
  const auto& row = rows.at(static_cast<std::size_t>(primary));
  auto it = std::lower_bound(row.begin(), row.end(), secondary,
                             [](const ConflictEntry& e, int s) { return e.secondary < s; });
  return it != row.end() && it->secondary == secondary ? &*it : nullptr;
}

bool shares_relay_opposite(const Segment& a, const Segment& b) {
  const bool a_feeds_b = a.receiver_kind == DeviceKind::kRN &&
                         b.transmitter_kind == DeviceKind::kRN && a.receiver == b.transmitter;
  const bool b_feeds_a = b.receiver_kind == DeviceKind::kRN &&
                         a.transmitter_kind == DeviceKind::kRN && b.receiver == a.transmitter;
  return a_feeds_b || b_feeds_a;
}

std::vector<OverlapHit> detect_overlaps(const Segment& primary, const BeamChain& primary_chain,
                                        const Segment& secondary,
                                        const BeamChain& secondary_chain,
                                        const RisGeometry& ris) {
  (void)secondary;
  std::vector<OverlapHit> hits;
  if (auto hit = beam_covers_point(secondary_chain, primary.nodes.back())) {
    OverlapHit h;
    h.kind = HitKind::kDirectAtReceiver;
    h.hop_index = hit->hop_index;
    h.axis_offset = hit->axis_offset;
    hits.push_back(h);
  }
  for (std::size_t j = 0; j < primary.ris_chain.size(); ++j) {
    auto hit = beam_covers_point(secondary_chain, primary.nodes[j + 1]);
    if (!hit) continue;
    OverlapHit h;
    h.kind = HitKind::kAtRis;
    h.ris_id = primary.ris_chain[j];
    h.ris_index = static_cast<int>(j);
    h.hop_index = hit->hop_index;
    h.axis_offset = hit->axis_offset;
    h.n_iota = ris_overlap_elements(primary_chain.phi_ira, hit->covering_radius,
                                    hit->axis_offset, ris);
    hits.push_back(h);
  }
  return hits;
}

double interference_delta(const Segment& primary, const Segment& secondary,
                          std::span<const OverlapHit> hits, const ChannelParams& params) {
  const double g = antenna_gain(params.alpha_rad);
  double total = 0.0;
  std::vector<double> distances;
  std::vector<double> n_primes;
  for (const OverlapHit& hit : hits) {
    const auto k = static_cast<std::size_t>(hit.hop_index);
    if (k < 1 || k > secondary.hop_count()) throw DomainError("interference_delta: bad hop index");
    // The secondary's own hops up to the node that launches the covering solid.
    distances.assign(secondary.hop_distances.begin(),
                     secondary.hop_distances.begin() + static_cast<std::ptrdiff_t>(k - 1));
    n_primes.assign(secondary.n_prime.begin(),
                    secondary.n_prime.begin() + static_cast<std::ptrdiff_t>(k - 1));
    const Point3& launch = secondary.nodes[k - 1];

    if (hit.kind == HitKind::kDirectAtReceiver) {
      distances.push_back(distance(launch, primary.nodes.back()));
    } else {
      // Energy caught by the primary's RIS follows the primary's remaining hops.
      const auto j = static_cast<std::size_t>(hit.ris_index);
      distances.push_back(distance(launch, primary.nodes[j + 1]));
      n_primes.push_back(hit.n_iota);
      distances.insert(distances.end(),
                       primary.hop_distances.begin() + static_cast<std::ptrdiff_t>(j + 1),
                       primary.hop_distances.end());
      n_primes.insert(n_primes.end(),
                      primary.n_prime.begin() + static_cast<std::ptrdiff_t>(j + 1),
                      primary.n_prime.end());
    }
    if (!(distances.back() > 0.0)) continue;
    total += received_power(params.p_be_w, distances, n_primes, params) * g * g;
  }
  return total;
}

std::vector<BeamChain> build_chains(const std::vector<Segment>& segments,
                                    const ChannelParams& params, const RisGeometry& ris) {
  std::vector<BeamChain> chains;
  chains.reserve(segments.size());
  for (const Segment& s : segments) {
    chains.push_back(build_beam_chain(s, threshold_distance(s, params), params.alpha_rad, ris));
  }
  return chains;
}

namespace {

bool exempt_pair(const Segment& a, const Segment& b) {
  return a.pair_id == b.pair_id && a.backup_of.has_value() != b.backup_of.has_value();
}

// Cell (p, s); nullopt when the pair neither overlaps nor shares a relay.
std::optional<ConflictEntry> compute_entry(const Segment& p, const BeamChain& p_chain,
                                           const Segment& s, const BeamChain& s_chain,
                                           const ChannelParams& params, const RisGeometry& ris,
                                           bool skip_geometry) {
  ConflictEntry entry;
  entry.secondary = s.id;
  entry.structural = shares_relay_opposite(p, s);
  entry.exempt = exempt_pair(p, s);
  if (!skip_geometry) entry.hits = detect_overlaps(p, p_chain, s, s_chain, ris);
  if (!entry.structural && entry.hits.empty()) return std::nullopt;
  entry.overlap = true;
  entry.delta = entry.structural ? kStructuralDelta
                                 : interference_delta(p, s, entry.hits, params);
  return entry;
}

void fill_header(ConflictMatrix& m, const std::vector<Segment>& segments,
                 const ChannelParams& params) {
  m.rows.assign(segments.size(), {});
  m.names.clear();
  m.numerator.clear();
  for (const Segment& s : segments) {
    m.names.push_back(s.label());
    m.numerator.push_back(signal_numerator(s, params));
  }
  m.noise = noise_power(params.t_noise_kelvin, params.w_hz, params.k_boltzmann);
  m.threshold_linear = params.threshold_linear();
}

void check_ids(const std::vector<Segment>& segments, const std::vector<BeamChain>& chains) {
  if (segments.size() != chains.size()) throw DomainError("conflict matrix: chain count mismatch");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].id != static_cast<int>(i) || chains[i].segment_id != segments[i].id) {
      throw DomainError("conflict matrix: segment ids must be 0..n-1 in order");
    }
  }
}

struct Box {
  Point3 lo{1e300, 1e300, 1e300};
  Point3 hi{-1e300, -1e300, -1e300};

  void add(const Point3& p, double pad) {
    lo = {std::min(lo.x, p.x - pad), std::min(lo.y, p.y - pad), std::min(lo.z, p.z - pad)};
    hi = {std::max(hi.x, p.x + pad), std::max(hi.y, p.y + pad), std::max(hi.z, p.z + pad)};
  }
  bool contains(const Point3& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
           p.z <= hi.z;
  }
};

// Loose axis-aligned box around every solid of a chain.
Box chain_box(const BeamChain& chain) {
  Box box;
  for (const ChainSolid& cs : chain.solids) {
    if (const auto* cone = std::get_if<Cone>(&cs.solid)) {
      const double r = cone->radius_at(cone->length) * 1.001 + 1e-9;
      box.add(cone->apex, 1e-9);
      box.add(cone->apex + cone->length * cone->axis, r);
    } else {
      const auto& cyl = std::get<Cylinder>(cs.solid);
      const double r = cyl.radius * 1.001 + 1e-9;
      box.add(cyl.base_center, r);
      box.add(cyl.base_center + cyl.length * cyl.axis, r);
    }
  }
  return box;
}

bool any_probe_inside(const Segment& p, const Box& box) {
  // Probes are the primary's RISs and receiver; its transmitter is never one.
  for (std::size_t i = 1; i < p.nodes.size(); ++i) {
    if (box.contains(p.nodes[i])) return true;
  }
  return false;
}

}  // namespace

ConflictMatrix build_conflict_matrix(const std::vector<Segment>& segments,
                                     const std::vector<BeamChain>& chains,
                                     const ChannelParams& params, const RisGeometry& ris) {
  check_ids(segments, chains);
  ConflictMatrix m;
  fill_header(m, segments, params);
  const auto n = static_cast<std::ptrdiff_t>(segments.size());

  std::vector<Box> boxes(segments.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) boxes[static_cast<std::size_t>(i)] = chain_box(chains[static_cast<std::size_t>(i)]);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t pi = 0; pi < n; ++pi) {
    const auto p = static_cast<std::size_t>(pi);
    auto& row = m.rows[p];
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (s == p) continue;
      const bool skip = !any_probe_inside(segments[p], boxes[s]);
      if (auto e = compute_entry(segments[p], chains[p], segments[s], chains[s], params, ris,
                                 skip)) {
        row.push_back(std::move(*e));
      }
    }
  }
  return m;
}

ConflictMatrix build_conflict_matrix_serial(const std::vector<Segment>& segments,
                                            const std::vector<BeamChain>& chains,
                                            const ChannelParams& params,
                                            const RisGeometry& ris) {
  check_ids(segments, chains);
  ConflictMatrix m;
  fill_header(m, segments, params);
  for (std::size_t p = 0; p < segments.size(); ++p) {
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (s == p) continue;
      if (auto e = compute_entry(segments[p], chains[p], segments[s], chains[s], params, ris,
                                 false)) {
        m.rows[p].push_back(std::move(*e));
      }
    }
  }
  return m;
}

}  // namespace rismesh
