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

#ifndef RISMESH_CHANNEL_HPP_
#define RISMESH_CHANNEL_HPP_

#include <span>
#include <vector>

#include "rismesh/core.hpp"
#include "rismesh/segment.hpp"

namespace rismesh {

// Link-budget parameters. Defaults are the indoor sub-THz campus setup:
// 1 THz carrier, 3 GHz bandwidth, 10 degree beams, 0.1 W transmitters,
// 300 K noise temperature and a 10 dB SNR threshold.
struct ChannelParams {
  double f_hz = 1e12;
  double w_hz = 3e9;
  double k_f = 0.0016;         // molecular absorption, 1/m
  double p_be_w = 0.1;
  double alpha_rad = 10.0 * kPi / 180.0;
  double t_noise_kelvin = 300.0;
  double t_snr_db = 10.0;
  double k_boltzmann = 1.380649e-23;
  double light_speed = 3e8;

  double threshold_linear() const { return std::pow(10.0, t_snr_db / 10.0); }
  void validate() const;
};

// Gain of an ideal cone antenna with full beamwidth `alpha`.
double antenna_gain(double alpha);

// Free-space spreading times molecular absorption, as an amplitude.
double transfer_gain(double f_hz, double d, double k_f, double light_speed = 3e8);

double noise_power(double t_kelvin, double w_hz, double k_boltzmann = 1.380649e-23);

// Power after a chain of hops. `n_primes` holds one entry per RIS between
// consecutive hops, so n_primes.size() + 1 == distances.size(). The amplitude
// is the plain product of every hop's transfer gain and every RIS's
// illuminated element count.
double received_power(double p_be, std::span<const double> distances,
                      std::span<const double> n_primes, const ChannelParams& params);

// P_eu * G_be * G_eu for a segment: the SNR/SNIR numerator.
double signal_numerator(const Segment& segment, const ChannelParams& params);

double snr(const Segment& segment, const ChannelParams& params);

double snir(double numerator, double noise, double delta_total);
double snir(const Segment& segment, const ChannelParams& params, double delta_total);

// Recomputes n_prime, p_eu and snr_linear from the segment's node positions.
void evaluate_segment(Segment& segment, const RisGeometry& ris, const ChannelParams& params);

// Largest total length, extending only the final hop, at which the SNR still
// reaches the threshold. Throws InfeasibleSegment when the segment is already
// below threshold at its real length.
double threshold_distance(const Segment& segment, const ChannelParams& params);

}  // namespace rismesh

#endif  // RISMESH_CHANNEL_HPP_
