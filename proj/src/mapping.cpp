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

#include "rismesh/mapping.hpp"

#include <algorithm>
#include <random>

#include "rismesh/channel.hpp"

namespace rismesh {

const char* to_string(Method method) {
  switch (method) {
    case Method::kZim: return "ZIM";
    case Method::kRcs: return "RCS";
    case Method::kDcs: return "DCS";
    case Method::kIcs: return "ICS";
  }
  return "?";
}

bool InterferenceGraph::has_edge(int a, int b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<Candidate> candidates_of(const ConflictMatrix& matrix, int primary) {
  std::vector<Candidate> out;
  for (const ConflictEntry& e : matrix.rows.at(static_cast<std::size_t>(primary))) {
    if (e.overlap && !e.exempt && !e.structural) out.push_back({e.secondary, e.delta});
  }
  return out;
}

std::size_t crossing_index(std::span<const double> ordered_deltas, double numerator,
                           double noise, double threshold_linear) {
  double accumulated = 0.0;
  for (std::size_t j = 0; j < ordered_deltas.size(); ++j) {
    accumulated += ordered_deltas[j];
    if (snir(numerator, noise, accumulated) <= threshold_linear) return j;
  }
  return ordered_deltas.size();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

std::vector<Candidate> order_candidates(std::vector<Candidate> candidates,
                                        const OrderingPolicy& policy, int primary) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.secondary < b.secondary; });
  switch (policy.kind) {
    case OrderKind::kIncreasing:
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) { return a.delta < b.delta; });
      break;
    case OrderKind::kDecreasing:
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) { return a.delta > b.delta; });
      break;
    case OrderKind::kRandom: {
      std::mt19937_64 rng(
          splitmix64(policy.seed ^ splitmix64(static_cast<std::uint64_t>(primary) + 1)));
      for (std::size_t i = candidates.size(); i > 1; --i) {
        std::swap(candidates[i - 1], candidates[bounded(rng, i)]);
      }
      break;
    }
  }
  return candidates;
}

namespace {

void finish_edges(InterferenceGraph& g, const ConflictMatrix& matrix) {
  for (std::size_t p = 0; p < matrix.size(); ++p) {
    for (const ConflictEntry& e : matrix.rows[p]) {
      if (!e.structural) continue;
      const int a = static_cast<int>(p);
      g.structural.push_back({std::min(a, e.secondary), std::max(a, e.secondary)});
    }
  }
  std::sort(g.structural.begin(), g.structural.end());
  g.structural.erase(std::unique(g.structural.begin(), g.structural.end()), g.structural.end());

  g.edges = g.structural;
  for (std::size_t p = 0; p < g.directed_conflicts.size(); ++p) {
    const int a = static_cast<int>(p);
    for (int s : g.directed_conflicts[p]) g.edges.push_back({std::min(a, s), std::max(a, s)});
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

}  // namespace

InterferenceGraph zim(const ConflictMatrix& matrix) {
  InterferenceGraph g;
  g.method = Method::kZim;
  g.vertex_count = static_cast<int>(matrix.size());
  g.directed_conflicts.resize(matrix.size());
  for (std::size_t p = 0; p < matrix.size(); ++p) {
    for (const Candidate& c : candidates_of(matrix, static_cast<int>(p))) {
      g.directed_conflicts[p].push_back(c.secondary);
    }
  }
  finish_edges(g, matrix);
  return g;
}

InterferenceGraph ordered_mapping(const ConflictMatrix& matrix, Method method,
                                  const OrderFn& order) {
  InterferenceGraph g;
  g.method = method;
  g.vertex_count = static_cast<int>(matrix.size());
  g.directed_conflicts.resize(matrix.size());
  const auto n = static_cast<std::ptrdiff_t>(matrix.size());

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t pi = 0; pi < n; ++pi) {
    const auto p = static_cast<std::size_t>(pi);
    const int primary = static_cast<int>(p);
    std::vector<Candidate> ordered = order(candidates_of(matrix, primary), primary);
    std::vector<double> deltas;
    deltas.reserve(ordered.size());
    for (const Candidate& c : ordered) deltas.push_back(c.delta);
    const std::size_t cross =
        crossing_index(deltas, matrix.numerator[p], matrix.noise, matrix.threshold_linear);
    auto& out = g.directed_conflicts[p];
    for (std::size_t j = cross; j < ordered.size(); ++j) out.push_back(ordered[j].secondary);
    std::sort(out.begin(), out.end());
  }
  finish_edges(g, matrix);
  return g;
}

InterferenceGraph ordered_mapping(const ConflictMatrix& matrix, const OrderingPolicy& policy) {
  const Method method = policy.kind == OrderKind::kIncreasing   ? Method::kIcs
                        : policy.kind == OrderKind::kDecreasing ? Method::kDcs
                                                                : Method::kRcs;
  return ordered_mapping(matrix, method, [policy](std::vector<Candidate> c, int primary) {
    return order_candidates(std::move(c), policy, primary);
  });
}

InterferenceGraph map_interference(const ConflictMatrix& matrix, Method method,
                                   std::uint64_t seed) {
  switch (method) {
    case Method::kZim: return zim(matrix);
    case Method::kRcs: return ordered_mapping(matrix, {OrderKind::kRandom, seed});
    case Method::kDcs: return ordered_mapping(matrix, {OrderKind::kDecreasing, seed});
    case Method::kIcs: return ordered_mapping(matrix, {OrderKind::kIncreasing, seed});
  }
  throw DomainError("map_interference: unknown method");
}

std::vector<Edge> structural_edges(std::span<const Segment> segments) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      if (shares_relay_opposite(segments[i], segments[j])) {
        out.push_back({std::min(segments[i].id, segments[j].id),
                       std::max(segments[i].id, segments[j].id)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rismesh
