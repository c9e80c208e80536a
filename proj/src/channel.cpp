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

#include "rismesh/channel.hpp"

#include <cmath>
#include <string>

#include "rismesh/geometry.hpp"

namespace rismesh {

void ChannelParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("channel parameter must be positive: ") + name);
    }
  };
  positive(f_hz, "f_hz");
  positive(w_hz, "W_hz");
  positive(k_f, "k_f");
  positive(p_be_w, "P_be_w");
  positive(alpha_rad, "alpha");
  positive(t_noise_kelvin, "T0_kelvin");
  if (!std::isfinite(t_snr_db)) throw DomainError("channel parameter T_db must be finite");
  positive(k_boltzmann, "k_B");
  positive(light_speed, "c");
  if (alpha_rad >= kPi) throw DomainError("channel parameter alpha must be below 180 degrees");
}

double antenna_gain(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0 * kPi)) {
    throw DomainError("antenna_gain: alpha outside (0, 2pi)");
  }
  return 2.0 / (1.0 - std::cos(alpha / 2.0));
}

double transfer_gain(double f_hz, double d, double k_f, double light_speed) {
  if (!(d > 0.0)) throw DomainError("transfer_gain: distance must be positive");
  return light_speed / (4.0 * kPi * f_hz * d) * std::exp(-0.5 * k_f * d);
}

double noise_power(double t_kelvin, double w_hz, double k_boltzmann) {
  return k_boltzmann * t_kelvin * w_hz;
}

double received_power(double p_be, std::span<const double> distances,
                      std::span<const double> n_primes, const ChannelParams& params) {
  if (distances.empty() || n_primes.size() + 1 != distances.size()) {
    throw DomainError("received_power: need one more hop than RIS");
  }
  double amplitude = 1.0;
  for (double d : distances) {
    amplitude *= transfer_gain(params.f_hz, d, params.k_f, params.light_speed);
  }
  for (double n : n_primes) amplitude *= n;
  return p_be * amplitude * amplitude;
}

double signal_numerator(const Segment& segment, const ChannelParams& params) {
  const double g = antenna_gain(params.alpha_rad);
  return segment.p_eu * g * g;
}

double snr(const Segment& segment, const ChannelParams& params) {
  return signal_numerator(segment, params) /
         noise_power(params.t_noise_kelvin, params.w_hz, params.k_boltzmann);
}

double snir(double numerator, double noise, double delta_total) {
  return numerator / (noise + delta_total);
}

double snir(const Segment& segment, const ChannelParams& params, double delta_total) {
  if (delta_total < 0.0) throw DomainError("snir: negative interference");
  return snir(signal_numerator(segment, params),
              noise_power(params.t_noise_kelvin, params.w_hz, params.k_boltzmann),
              delta_total);
}

void evaluate_segment(Segment& segment, const RisGeometry& ris, const ChannelParams& params) {
  const std::size_t n = segment.nodes.size();
  if (n < 2 || segment.ris_chain.size() + 2 != n) {
    throw DomainError("evaluate_segment: node list does not match RIS chain");
  }
  segment.hop_distances.clear();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    segment.hop_distances.push_back(distance(segment.nodes[i], segment.nodes[i + 1]));
  }
  segment.n_prime.clear();
  if (!segment.ris_chain.empty()) {
    // The cone's footprint on the first RIS fixes the illuminated radius for
    // the whole chain; every later RIS sees a cylinder of that radius.
    const double phi_fp = footprint_radius(params.alpha_rad, segment.hop_distances[0]);
    const Illumination first = illumination(phi_fp, ris);
    for (std::size_t i = 0; i < segment.ris_chain.size(); ++i) {
      segment.n_prime.push_back(i == 0 ? first.n_prime
                                       : illumination(first.phi_ira, ris).n_prime);
    }
  }
  segment.p_eu = received_power(params.p_be_w, segment.hop_distances, segment.n_prime, params);
  segment.snr_linear = snr(segment, params);
}

namespace {

constexpr int kMaxIterations = 200;

double snr_with_last_hop(const Segment& segment, const ChannelParams& params, double last) {
  std::vector<double> d = segment.hop_distances;
  d.back() = last;
  Segment probe = segment;
  probe.p_eu = received_power(params.p_be_w, d, segment.n_prime, params);
  return snr(probe, params);
}

}  // namespace

double threshold_distance(const Segment& segment, const ChannelParams& params) {
  if (segment.hop_distances.empty()) throw DomainError("threshold_distance: empty segment");
  const double target = params.threshold_linear();
  const double fixed = segment.total_length() - segment.hop_distances.back();
  double lo = segment.hop_distances.back();
  const double at_length = snr_with_last_hop(segment, params, lo);
  if (std::abs(at_length - target) <= 1e-12 * target) return fixed + lo;
  if (at_length < target) {
    throw InfeasibleSegment("threshold_distance: SNR below threshold at actual length");
  }

  double hi = 2.0 * lo;
  int iter = 0;
  while (snr_with_last_hop(segment, params, hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (++iter > kMaxIterations) throw DomainError("threshold_distance: no bracket found");
  }
  for (iter = 0; iter < kMaxIterations && hi - lo > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (snr_with_last_hop(segment, params, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return fixed + lo;
}

}  // namespace rismesh
