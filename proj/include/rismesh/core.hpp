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

#ifndef RISMESH_CORE_HPP_
#define RISMESH_CORE_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rismesh {

inline constexpr double kPi = std::numbers::pi;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point3 operator*(double s, const Point3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline double dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }
inline bool is_finite(const Point3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Unit vector from `from` toward `to`. Throws when the points coincide.
Point3 direction(const Point3& from, const Point3& to);

enum class DeviceKind { kBS, kRIS, kRN, kUE };

const char* to_string(DeviceKind kind);

// Element grid of a reflecting surface, modelled as a disc of equal area.
struct RisGeometry {
  double elements = 10000.0;
  double dx = 1.5e-4;
  double dy = 1.5e-4;

  double element_area() const { return dx * dy; }
  double area() const { return elements * dx * dy; }
  double radius() const { return std::sqrt(area() / kPi); }
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A segment whose SNR cannot reach the threshold at the requested length.
class InfeasibleSegment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rismesh

#endif  // RISMESH_CORE_HPP_
