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


// Random beam chains and probe points shared by the geometry checks.

#ifndef RISMESH_TESTS_RANDOM_CHAINS_HPP_
#define RISMESH_TESTS_RANDOM_CHAINS_HPP_

#include <random>

#include "rismesh/geometry.hpp"

namespace rismesh::testing {

inline BeamChain random_chain(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), len(0.3, 0.9);
  std::uniform_int_distribution<int> ris_count(0, 2);
  const int n_ris = ris_count(rng);
  std::vector<Point3> pts{{u(rng), u(rng), u(rng)}};
  for (int i = 0; i <= n_ris; ++i) {
    Point3 d{u(rng), u(rng), u(rng)};
    pts.push_back(pts.back() + len(rng) * ((1.0 / norm(d)) * d));
  }
  Segment s;
  s.id = 0;
  s.nodes = pts;
  for (int i = 0; i < n_ris; ++i) s.ris_chain.push_back(i);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) s.hop_distances.push_back(distance(pts[i], pts[i + 1]));
  // Larger RIS so cylinders are several voxels wide.
  const RisGeometry ris{4.0, 0.1, 0.1};
  std::uniform_real_distribution<double> alpha(8 * kPi / 180, 30 * kPi / 180), extra(0.0, 0.5);
  return build_beam_chain(s, s.total_length() + extra(rng), alpha(rng), ris);
}

// Half the probes near a random solid's axis, half anywhere around the chain.
inline Point3 probe_point(const BeamChain& chain, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), unit(0.0, 1.0);
  if (unit(rng) < 0.5) return {2.5 * u(rng), 2.5 * u(rng), 2.5 * u(rng)};
  const auto& cs = chain.solids[static_cast<std::size_t>(unit(rng) * chain.solids.size()) % chain.solids.size()];
  Point3 origin, axis;
  double length = 0.0, radius = 0.0;
  if (const auto* cone = std::get_if<Cone>(&cs.solid)) {
    origin = cone->apex, axis = cone->axis, length = cone->length, radius = cone->radius_at(length);
  } else {
    const auto& cyl = std::get<Cylinder>(cs.solid);
    origin = cyl.base_center, axis = cyl.axis, length = cyl.length, radius = cyl.radius;
  }
  const double t = (unit(rng) * 1.2 - 0.1) * length;
  return origin + t * axis + (1.5 * radius) * Point3{u(rng), u(rng), u(rng)};
}

}  // namespace rismesh::testing

#endif  // RISMESH_TESTS_RANDOM_CHAINS_HPP_
