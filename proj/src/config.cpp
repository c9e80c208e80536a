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

#include "rismesh/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace rismesh {

void ExperimentConfig::validate() const {
  try {
    scenario.validate();
    channel.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (num_tests < 1) throw ConfigError("tests must be at least 1");
  if (search.max_hops < 1) throw ConfigError("max_hops must be at least 1");
  if (search.max_relays < 0) throw ConfigError("max_relays must be nonnegative");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(int line) { return "line " + std::to_string(line) + ": "; }

double to_double(std::string_view v, int line) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(where(line) + "not a number: '" + std::string(v) + "'");
  }
  return out;
}

long long to_int(std::string_view v, int line) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(where(line) + "not an integer: '" + std::string(v) + "'");
  }
  return out;
}

bool to_bool(std::string_view v, int line) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ConfigError(where(line) + "not a boolean: '" + std::string(v) + "'");
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, int)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"alpha_deg", [](auto& c, auto v, int l) { c.channel.alpha_rad = to_double(v, l) * kPi / 180.0; }},
      {"k_f", [](auto& c, auto v, int l) { c.channel.k_f = to_double(v, l); }},
      {"W_hz", [](auto& c, auto v, int l) { c.channel.w_hz = to_double(v, l); }},
      {"f_hz", [](auto& c, auto v, int l) { c.channel.f_hz = to_double(v, l); }},
      {"P_be_w", [](auto& c, auto v, int l) { c.channel.p_be_w = to_double(v, l); }},
      {"T0_kelvin", [](auto& c, auto v, int l) { c.channel.t_noise_kelvin = to_double(v, l); }},
      {"T_db", [](auto& c, auto v, int l) { c.channel.t_snr_db = to_double(v, l); }},
      {"N_elements", [](auto& c, auto v, int l) { c.scenario.ris.elements = to_double(v, l); }},
      {"dx_m", [](auto& c, auto v, int l) { c.scenario.ris.dx = to_double(v, l); }},
      {"dy_m", [](auto& c, auto v, int l) { c.scenario.ris.dy = to_double(v, l); }},
      {"num_bs", [](auto& c, auto v, int l) { c.scenario.num_bs = static_cast<int>(to_int(v, l)); }},
      {"num_ue", [](auto& c, auto v, int l) { c.scenario.num_ue = static_cast<int>(to_int(v, l)); }},
      {"num_ris", [](auto& c, auto v, int l) { c.scenario.num_ris = static_cast<int>(to_int(v, l)); }},
      {"num_rn", [](auto& c, auto v, int l) { c.scenario.num_rn = static_cast<int>(to_int(v, l)); }},
      {"box_m", [](auto& c, auto v, int l) { c.scenario.box_m = to_double(v, l); }},
      {"reach_m", [](auto& c, auto v, int l) { c.scenario.reach_m = to_double(v, l); }},
      {"pairs", [](auto& c, auto v, int l) { c.scenario.num_pairs = static_cast<int>(to_int(v, l)); }},
      {"tests", [](auto& c, auto v, int l) { c.num_tests = static_cast<int>(to_int(v, l)); }},
      {"seed", [](auto& c, auto v, int l) { c.seed = static_cast<std::uint64_t>(to_int(v, l)); }},
      {"backup", [](auto& c, auto v, int l) { c.backup = to_bool(v, l); }},
      {"max_relays", [](auto& c, auto v, int l) { c.search.max_relays = static_cast<int>(to_int(v, l)); }},
      {"max_hops", [](auto& c, auto v, int l) { c.search.max_hops = static_cast<int>(to_int(v, l)); }},
  };
  return table;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where(line_no) + "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where(line_no) + "unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(where(line_no) + "duplicate key '" + std::string(key) + "'");
    }
    it->second(config, value, line_no);
  }
  // Half-wavelength elements unless given explicitly.
  const double half_wave = config.channel.light_speed / (2.0 * config.channel.f_hz);
  if (!seen.contains("dx_m")) config.scenario.ris.dx = half_wave;
  if (!seen.contains("dy_m")) config.scenario.ris.dy = half_wave;
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "alpha_deg = " << c.channel.alpha_rad * 180.0 / kPi << "\n"
      << "k_f = " << c.channel.k_f << "\n"
      << "W_hz = " << c.channel.w_hz << "\n"
      << "f_hz = " << c.channel.f_hz << "\n"
      << "P_be_w = " << c.channel.p_be_w << "\n"
      << "T0_kelvin = " << c.channel.t_noise_kelvin << "\n"
      << "T_db = " << c.channel.t_snr_db << "\n"
      << "N_elements = " << c.scenario.ris.elements << "\n"
      << "dx_m = " << c.scenario.ris.dx << "\n"
      << "dy_m = " << c.scenario.ris.dy << "\n"
      << "num_bs = " << c.scenario.num_bs << "\n"
      << "num_ue = " << c.scenario.num_ue << "\n"
      << "num_ris = " << c.scenario.num_ris << "\n"
      << "num_rn = " << c.scenario.num_rn << "\n"
      << "box_m = " << c.scenario.box_m << "\n"
      << "reach_m = " << c.scenario.reach_m << "\n"
      << "pairs = " << c.scenario.num_pairs << "\n"
      << "tests = " << c.num_tests << "\n"
      << "seed = " << c.seed << "\n"
      << "backup = " << (c.backup ? "true" : "false") << "\n"
      << "max_relays = " << c.search.max_relays << "\n"
      << "max_hops = " << c.search.max_hops << "\n";
  return out.str();
}

}  // namespace rismesh
