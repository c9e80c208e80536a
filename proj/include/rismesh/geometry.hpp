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

#ifndef RISMESH_GEOMETRY_HPP_
#define RISMESH_GEOMETRY_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "rismesh/core.hpp"
#include "rismesh/segment.hpp"

namespace rismesh {

// Conical beam leaving a BS or RN antenna.
struct Cone {
  Point3 apex;
  Point3 axis;  // unit
  double half_angle = 0.0;
  double length = 0.0;

  double radius_at(double t) const { return std::tan(half_angle) * t; }
  double volume() const;
};

// Collimated beam re-radiated by a RIS.
struct Cylinder {
  Point3 base_center;
  Point3 axis;  // unit
  double radius = 0.0;
  double length = 0.0;

  double volume() const { return kPi * radius * radius * length; }
};

using Solid = std::variant<Cone, Cylinder>;

struct ChainSolid {
  int hop = 0;  // 1-based hop index within the segment
  Solid solid;
};

// Every solid swept by one segment's transmission, with the last hop
// stretched to the threshold distance.
struct BeamChain {
  int segment_id = -1;
  std::vector<ChainSolid> solids;
  double phi_fp = 0.0;
  double footprint_area = 0.0;
  double phi_ira = 0.0;
  double illuminated_area = 0.0;
  std::vector<double> volumes;
  double d_th = 0.0;
  double d_last = 0.0;
};

// Which solid of a chain contains a point, and how far off-axis it sits.
struct CoverageHit {
  int hop_index = 0;
  double axis_offset = 0.0;
  double covering_radius = 0.0;  // beam radius at the point's axial position
};

struct Illumination {
  double footprint_area = 0.0;
  double area = 0.0;
  double phi_ira = 0.0;
  double n_prime = 0.0;
};

double footprint_radius(double alpha, double d1);

Illumination illumination(double phi_fp, const RisGeometry& ris);

BeamChain build_beam_chain(const Segment& segment, double d_th, double alpha,
                           const RisGeometry& ris);

std::optional<CoverageHit> solid_contains(const Solid& solid, const Point3& p);

// First solid (lowest hop) of the chain containing `p`. Solids are closed;
// a cone's apex itself is excluded.
std::optional<CoverageHit> beam_covers_point(const BeamChain& chain, const Point3& p);

// Area of the lens shared by two circles whose centres are `offset` apart.
double circle_overlap_area(double r1, double r2, double offset);

// Elements of a RIS lit by both a primary and a secondary beam.
double ris_overlap_elements(double primary_radius, double secondary_radius, double offset,
                            const RisGeometry& ris);

}  // namespace rismesh

#endif  // RISMESH_GEOMETRY_HPP_
