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

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#ifndef RISMESH_TESTS_ORACLES_HPP_
#define RISMESH_TESTS_ORACLES_HPP_

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <tuple>
#include <variant>
#include <unordered_set>
#include <vector>

#include "rismesh/geometry.hpp"

namespace rismesh::oracle {

using Big = boost::multiprecision::cpp_dec_float_50;

inline Big big_pi() { return boost::math::constants::pi<Big>(); }

inline Big gain(const Big& alpha_rad) {
  using boost::multiprecision::cos;
  return Big(2) / (Big(1) - cos(alpha_rad / 2));
}

inline Big transfer(const Big& f, const Big& d, const Big& k, const Big& c) {
  using boost::multiprecision::exp;
  return c / (4 * big_pi() * f * d) * exp(-k * d / 2);
}

inline Big deg(double degrees) { return Big(degrees) * big_pi() / 180; }

// Lens area by stratified sampling: one jittered point per grid cell over the
// lens's bounding box (x clipped to where both discs reach).
inline double lens_area_sampled(double r1, double r2, double offset, int per_side,
                                std::uint64_t seed) {
  // Smaller circle at the origin, the other on the x axis.
  const double r_small = std::min(r1, r2);
  const double r_big = std::max(r1, r2);
  const double cx = offset;
  const double lo_x = std::max(-r_small, cx - r_big);
  const double hi_x = std::min(r_small, cx + r_big);
  if (!(hi_x > lo_x)) return 0.0;
  const double cell_x = (hi_x - lo_x) / per_side;
  const double cell_y = 2.0 * r_small / per_side;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uint64_t inside = 0;
  for (int i = 0; i < per_side; ++i) {
    for (int j = 0; j < per_side; ++j) {
      const double x = lo_x + (i + u(rng)) * cell_x;
      const double y = -r_small + (j + u(rng)) * cell_y;
      if (x * x + y * y <= r_small * r_small && (x - cx) * (x - cx) + y * y <= r_big * r_big) {
        ++inside;
      }
    }
  }
  return static_cast<double>(inside) * cell_x * cell_y;
}

// Solids rasterised onto a cubic voxel grid by dense volumetric sampling.
class VoxelSet {
 public:
  explicit VoxelSet(double voxel) : voxel_(voxel) {}

  void add_chain(const BeamChain& chain) {
    for (const ChainSolid& cs : chain.solids) {
      if (const auto* cone = std::get_if<Cone>(&cs.solid)) {
        sweep(cone->apex, cone->axis, cone->length,
              [&](double t) { return std::tan(cone->half_angle) * t; });
      } else {
        const auto& cyl = std::get<Cylinder>(cs.solid);
        sweep(cyl.base_center, cyl.axis, cyl.length, [&](double) { return cyl.radius; });
      }
    }
  }

  // +1 inside, -1 outside, 0 when any sampled surface lies in the 3x3x3
  // neighbourhood (the one-voxel boundary band).
  int classify(const Point3& p) const {
    const auto [i, j, k] = cell(p);
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          if (surface_.count(key(i + a, j + b, k + c))) return 0;
    return filled_.count(key(i, j, k)) ? 1 : -1;
  }

  std::size_t size() const { return filled_.size(); }

 private:
  static std::uint64_t key(long i, long j, long k) {
    auto z = [](long v) { return static_cast<std::uint64_t>(v + (1L << 20)) & 0x1fffff; };
    return z(i) | (z(j) << 21) | (z(k) << 42);
  }
  std::tuple<long, long, long> cell(const Point3& p) const {
    return {static_cast<long>(std::floor(p.x / voxel_)), static_cast<long>(std::floor(p.y / voxel_)),
            static_cast<long>(std::floor(p.z / voxel_))};
  }

  template <typename RadiusFn>
  void sweep(const Point3& origin, const Point3& axis, double length, RadiusFn radius) {
    // Orthonormal frame around the axis.
    Point3 helper = std::abs(axis.x) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
    Point3 u{axis.y * helper.z - axis.z * helper.y, axis.z * helper.x - axis.x * helper.z,
             axis.x * helper.y - axis.y * helper.x};
    u = (1.0 / norm(u)) * u;
    const Point3 v{axis.y * u.z - axis.z * u.y, axis.z * u.x - axis.x * u.z,
                   axis.x * u.y - axis.y * u.x};
    const double step = voxel_ * 0.4;
    auto mark = [&](std::unordered_set<std::uint64_t>& set, const Point3& p) {
      const auto [i, j, k] = cell(p);
      set.insert(key(i, j, k));
    };
    auto disc = [&](double t, double r, std::unordered_set<std::uint64_t>& set) {
      for (double a = -r; a <= r; a += step) {
        for (double b = -r; b <= r; b += step) {
          if (a * a + b * b <= r * r) mark(set, origin + t * axis + a * u + b * v);
        }
      }
    };
    for (double t = step * 0.5; t <= length; t += step) {
      const double r = radius(t);
      disc(t, r, filled_);
      const int around = std::max(8, static_cast<int>(2.0 * kPi * r / step) + 1);
      for (int m = 0; m < around; ++m) {
        const double phi = 2.0 * kPi * m / around;
        mark(surface_, origin + t * axis + (r * std::cos(phi)) * u + (r * std::sin(phi)) * v);
      }
    }
    disc(0.0, radius(0.0), surface_);
    disc(length, radius(length), surface_);
  }

  double voxel_;
  std::unordered_set<std::uint64_t> filled_;
  std::unordered_set<std::uint64_t> surface_;
};

// Walks the ordered interference list the slow way: tolerated count is the
// longest prefix whose running sum keeps numerator/(noise+sum) above T.
inline std::size_t tolerated_prefix(const std::vector<double>& ordered, double numerator,
                                    double noise, double threshold) {
  std::size_t best = 0;
  for (std::size_t len = 1; len <= ordered.size(); ++len) {
    double sum = 0.0;
    for (std::size_t i = 0; i < len; ++i) sum += ordered[i];
    if (numerator / (noise + sum) > threshold) {
      best = len;
    } else {
      break;
    }
  }
  return best;
}

}  // namespace rismesh::oracle

#endif  // RISMESH_TESTS_ORACLES_HPP_
