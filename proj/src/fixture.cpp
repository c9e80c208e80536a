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

#include "rismesh/fixture.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rismesh/config.hpp"

namespace rismesh {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

double number(const std::string& s, int line) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "not a number: '" + s + "'");
  }
  return out;
}

}  // namespace

GoldenFixture parse_fixture(std::string_view text) {
  GoldenFixture f;
  double default_numerator = 1.0;
  std::vector<bool> explicit_numerator;
  std::map<std::string, int> index;
  bool pairs_given = false;

  auto vertex = [&](const std::string& name, int line) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown vertex '" + name + "'");
    return it->second;
  };
  auto expect = [](const std::vector<std::string>& t, std::size_t lo, std::size_t hi, int line) {
    if (t.size() < lo || t.size() > hi) throw ParseError(line, "wrong field count for '" + t[0] + "'");
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto t = tokens(line);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (kw == "numerator") {
      expect(t, 2, 2, line_no);
      default_numerator = number(t[1], line_no);
    } else if (kw == "noise") {
      expect(t, 2, 2, line_no);
      f.noise = number(t[1], line_no);
    } else if (kw == "threshold") {
      expect(t, 2, 2, line_no);
      f.threshold_linear = number(t[1], line_no);
    } else if (kw == "pairs") {
      expect(t, 2, 2, line_no);
      const double n = number(t[1], line_no);
      if (n < 0 || n != static_cast<double>(static_cast<std::size_t>(n))) {
        throw ParseError(line_no, "pairs must be a nonnegative integer");
      }
      f.num_pairs = static_cast<std::size_t>(n);
      pairs_given = true;
    } else if (kw == "vertex") {
      expect(t, 2, 3, line_no);
      if (index.contains(t[1])) throw ParseError(line_no, "duplicate vertex '" + t[1] + "'");
      index[t[1]] = static_cast<int>(f.vertices.size());
      f.vertices.push_back(t[1]);
      f.numerator.push_back(t.size() == 3 ? number(t[2], line_no) : 0.0);
      explicit_numerator.push_back(t.size() == 3);
    } else if (kw == "conflict") {
      expect(t, 3, 4, line_no);
      GoldenFixture::Conflict c;
      c.primary = vertex(t[1], line_no);
      c.secondary = vertex(t[2], line_no);
      if (c.primary == c.secondary) throw ParseError(line_no, "self conflict");
      c.delta = t.size() == 4 ? number(t[3], line_no) : 0.0;
      if (c.delta < 0.0) throw ParseError(line_no, "negative delta");
      f.conflicts.push_back(c);
    } else if (kw == "exempt" || kw == "structural") {
      expect(t, 3, 3, line_no);
      const int a = vertex(t[1], line_no);
      const int b = vertex(t[2], line_no);
      if (a == b) throw ParseError(line_no, "self pair");
      (kw == "exempt" ? f.exempt : f.structural).push_back({std::min(a, b), std::max(a, b)});
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    if (!explicit_numerator[i]) f.numerator[i] = default_numerator;
  }
  if (!pairs_given) f.num_pairs = f.vertices.size();
  return f;
}

GoldenFixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read fixture " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

ConflictMatrix fixture_matrix(const GoldenFixture& f) {
  ConflictMatrix m;
  m.rows.assign(f.vertices.size(), {});
  m.names = f.vertices;
  m.numerator = f.numerator;
  m.noise = f.noise;
  m.threshold_linear = f.threshold_linear;

  auto entry = [&](int p, int s) -> ConflictEntry& {
    auto& row = m.rows[static_cast<std::size_t>(p)];
    for (auto& e : row) {
      if (e.secondary == s) return e;
    }
    row.push_back(ConflictEntry{});
    row.back().secondary = s;
    return row.back();
  };
  for (const auto& c : f.conflicts) {
    ConflictEntry& e = entry(c.primary, c.secondary);
    e.overlap = true;
    e.delta += c.delta;
  }
  for (const auto& [a, b] : f.structural) {
    for (auto [p, s] : {std::pair{a, b}, std::pair{b, a}}) {
      ConflictEntry& e = entry(p, s);
      e.overlap = true;
      e.structural = true;
      e.delta = kStructuralDelta;
    }
  }
  for (const auto& [a, b] : f.exempt) {
    for (auto [p, s] : {std::pair{a, b}, std::pair{b, a}}) {
      auto& row = m.rows[static_cast<std::size_t>(p)];
      auto it = std::find_if(row.begin(), row.end(), [&](const ConflictEntry& e) { return e.secondary == s; });
      if (it != row.end()) it->exempt = true;
    }
  }
  for (auto& row : m.rows) {
    std::sort(row.begin(), row.end(),
              [](const ConflictEntry& x, const ConflictEntry& y) { return x.secondary < y.secondary; });
  }
  return m;
}

GoldenResult run_golden(const GoldenFixture& fixture, std::uint64_t seed) {
  const ConflictMatrix m = fixture_matrix(fixture);
  GoldenResult r;
  r.names = fixture.vertices;
  r.num_pairs = fixture.num_pairs;
  for (Method method : {Method::kZim, Method::kRcs, Method::kDcs, Method::kIcs}) {
    r.graphs.push_back(map_interference(m, method, seed));
  }
  return r;
}

}  // namespace rismesh
