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

#include "rismesh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rismesh {

Point3 direction(const Point3& from, const Point3& to) {
  const Point3 v = to - from;
  const double n = norm(v);
  if (!(n > 0.0)) throw DomainError("direction: coincident points");
  return (1.0 / n) * v;
}

const char* to_string(DeviceKind kind) {
  switch (kind) {
    case DeviceKind::kBS: return "BS";
    case DeviceKind::kRIS: return "RIS";
    case DeviceKind::kRN: return "RN";
    case DeviceKind::kUE: return "UE";
  }
  return "?";
}

double Segment::total_length() const {
  double total = 0.0;
  for (double d : hop_distances) total += d;
  return total;
}

std::string Segment::label() const {
  std::string out = std::string(to_string(transmitter_kind)) + std::to_string(transmitter);
  for (int r : ris_chain) out += "-RIS" + std::to_string(r);
  out += "-" + std::string(to_string(receiver_kind)) + std::to_string(receiver);
  return out;
}

double Cone::volume() const {
  const double r = radius_at(length);
  return kPi * r * r * length / 3.0;
}

double footprint_radius(double alpha, double d1) {
  if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("footprint_radius: alpha outside (0, pi)");
  if (!(d1 > 0.0)) throw DomainError("footprint_radius: nonpositive distance");
  return std::tan(alpha / 2.0) * d1;
}

Illumination illumination(double phi_fp, const RisGeometry& ris) {
  if (!(phi_fp > 0.0)) throw DomainError("illumination: nonpositive footprint radius");
  if (!(ris.elements > 0.0 && ris.dx > 0.0 && ris.dy > 0.0)) {
    throw DomainError("illumination: invalid RIS geometry");
  }
  Illumination out;
  out.footprint_area = kPi * phi_fp * phi_fp;
  out.area = std::min(out.footprint_area, ris.area());
  out.phi_ira = std::min(phi_fp, ris.radius());
  out.n_prime = std::min(out.area / ris.element_area(), ris.elements);
  return out;
}

BeamChain build_beam_chain(const Segment& segment, double d_th, double alpha,
                           const RisGeometry& ris) {
  const std::size_t h = segment.hop_count();
  if (h == 0 || segment.nodes.size() != h + 1) {
    throw DomainError("build_beam_chain: malformed segment");
  }
  double fixed = 0.0;
  for (std::size_t j = 0; j + 1 < h; ++j) fixed += segment.hop_distances[j];
  const double d_last = d_th - fixed;
  if (!(d_last > 0.0)) {
    throw InfeasibleSegment("build_beam_chain: threshold distance " + std::to_string(d_th) +
                            " does not reach past the fixed hops of segment " +
                            std::to_string(segment.id));
  }

  BeamChain chain;
  chain.segment_id = segment.id;
  chain.d_th = d_th;
  chain.d_last = d_last;

  // Without a RIS the cone itself carries the extension.
  const double cone_length = h == 1 ? d_last : segment.hop_distances[0];
  chain.phi_fp = footprint_radius(alpha, cone_length);
  chain.footprint_area = kPi * chain.phi_fp * chain.phi_fp;
  if (h > 1) {
    const Illumination ill = illumination(chain.phi_fp, ris);
    chain.phi_ira = ill.phi_ira;
    chain.illuminated_area = ill.area;
  }

  Cone cone{segment.nodes[0], direction(segment.nodes[0], segment.nodes[1]), alpha / 2.0,
            cone_length};
  chain.volumes.push_back(kPi * chain.phi_fp * chain.phi_fp * cone_length / 3.0);
  chain.solids.push_back({1, cone});

  for (std::size_t i = 1; i < h; ++i) {
    const double length = i + 1 == h ? d_last : segment.hop_distances[i];
    Cylinder cyl{segment.nodes[i], direction(segment.nodes[i], segment.nodes[i + 1]),
                 chain.phi_ira, length};
    chain.volumes.push_back(cyl.volume());
    chain.solids.push_back({static_cast<int>(i + 1), cyl});
  }
  return chain;
}

namespace {

// Closed-boundary slack, relative to the quantity compared.
constexpr double kBoundarySlack = 1e-12;

std::optional<CoverageHit> contains(const Cone& cone, const Point3& p) {
  const Point3 v = p - cone.apex;
  const double t = dot(v, cone.axis);
  if (!(t > 0.0) || t > cone.length * (1.0 + kBoundarySlack)) return std::nullopt;
  const double lateral = norm(v - t * cone.axis);
  const double radius = cone.radius_at(t);
  if (lateral > radius * (1.0 + kBoundarySlack)) return std::nullopt;
  return CoverageHit{0, lateral, radius};
}

std::optional<CoverageHit> contains(const Cylinder& cyl, const Point3& p) {
  const Point3 v = p - cyl.base_center;
  const double t = dot(v, cyl.axis);
  const double slack = kBoundarySlack * cyl.length;
  if (t < -slack || t > cyl.length + slack) return std::nullopt;
  const double lateral = norm(v - t * cyl.axis);
  if (lateral > cyl.radius * (1.0 + kBoundarySlack)) return std::nullopt;
  return CoverageHit{0, lateral, cyl.radius};
}

}  // namespace

std::optional<CoverageHit> solid_contains(const Solid& solid, const Point3& p) {
  return std::visit([&](const auto& s) { return contains(s, p); }, solid);
}

std::optional<CoverageHit> beam_covers_point(const BeamChain& chain, const Point3& p) {
  for (const ChainSolid& cs : chain.solids) {
    if (auto hit = solid_contains(cs.solid, p)) {
      hit->hop_index = cs.hop;
      return hit;
    }
  }
  return std::nullopt;
}

double circle_overlap_area(double r1, double r2, double offset) {
  if (!(r1 > 0.0 && r2 > 0.0) || offset < 0.0) {
    throw DomainError("circle_overlap_area: invalid radii or offset");
  }
  if (r1 < r2) std::swap(r1, r2);  // exact symmetry in the radii
  if (offset >= r1 + r2) return 0.0;
  const double r_min = std::min(r1, r2);
  if (offset <= std::abs(r1 - r2)) return kPi * r_min * r_min;

  const double d2 = offset * offset;
  const double a1 = std::clamp((d2 + r1 * r1 - r2 * r2) / (2.0 * offset * r1), -1.0, 1.0);
  const double a2 = std::clamp((d2 + r2 * r2 - r1 * r1) / (2.0 * offset * r2), -1.0, 1.0);
  const double k = (-offset + r1 + r2) * (offset + r1 - r2) * (offset - r1 + r2) *
                   (offset + r1 + r2);
  const double area = r1 * r1 * std::acos(a1) + r2 * r2 * std::acos(a2) -
                      0.5 * std::sqrt(std::max(k, 0.0));
  return std::clamp(area, 0.0, kPi * r_min * r_min);
}

double ris_overlap_elements(double primary_radius, double secondary_radius, double offset,
                            const RisGeometry& ris) {
  const double area = circle_overlap_area(primary_radius, secondary_radius, offset);
  return std::clamp(area, 0.0, ris.area()) / ris.element_area();
}

}  // namespace rismesh
