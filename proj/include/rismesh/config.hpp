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

#ifndef RISMESH_CONFIG_HPP_
#define RISMESH_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rismesh/channel.hpp"
#include "rismesh/network.hpp"

namespace rismesh {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  ScenarioConfig scenario;
  ChannelParams channel;
  PathSearchOptions search;
  int num_tests = 100;
  std::uint64_t seed = 1;
  bool backup = false;

  void validate() const;
};

// Flat `key = value` text; '#' starts a comment. Unknown or repeated keys are
// rejected. Angles are given in degrees. When dx_m/dy_m are omitted they
// default to half a wavelength at f_hz.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

std::string format_config(const ExperimentConfig& config);

}  // namespace rismesh

#endif  // RISMESH_CONFIG_HPP_
