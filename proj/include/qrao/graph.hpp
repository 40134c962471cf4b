// Copyright 2026 The qrao-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrao/random.hpp"

namespace qrao {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

/// Weighted undirected graph. Edges are stored with u < v and no duplicates.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

struct Coloring {
  std::vector<int> colors;  // colors[i] = color of vertex i

  int num_colors() const {
    int c = 0;
    for (int x : colors) c = std::max(c, x + 1);
    return c;
  }
};

struct CutSolution {
  std::vector<std::uint8_t> bits;  // side of each vertex, b in {0,1}
  double value = 0.0;
};

/// Throws if the edge list violates the canonical form (0 <= u < v < n,
/// no duplicates).
inline void validate_graph(const Graph& g) {
  if (g.n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.v >= g.n || e.u >= e.v)
      throw std::invalid_argument("graph: edge endpoints must satisfy 0 <= u < v < n");
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
}

/// Adjacency lists as (neighbor, weight) pairs.
inline std::vector<std::vector<std::pair<int, double>>> adjacency(const Graph& g) {
  std::vector<std::vector<std::pair<int, double>>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  return adj;
}

inline std::vector<int> vertex_degrees(const Graph& g) {
  std::vector<int> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

/// Random degree-regular simple graph via the configuration model: pair up
/// vertex stubs uniformly, reject pairings containing self-loops or
/// multi-edges. Deterministic for a fixed seed.
inline Graph generate_regular_graph(int n, int degree, std::uint64_t seed) {
  if (n <= 0 || degree < 0) throw std::invalid_argument("generate_regular_graph: bad arguments");
  if (degree >= n) throw std::invalid_argument("generate_regular_graph: degree must be < n");
  if ((static_cast<long long>(n) * degree) % 2 != 0)
    throw std::invalid_argument("generate_regular_graph: n*degree must be even");

  Graph g;
  g.n = n;
  if (degree == 0) return g;

  constexpr int kMaxAttempts = 1000;
  Rng rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * degree);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < degree; ++k) stubs.push_back(v);
    rng.shuffle(stubs);

    std::set<std::pair<int, int>> pairs;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        simple = false;
        break;
      }
      if (!pairs.insert({std::min(a, b), std::max(a, b)}).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;

    g.edges.clear();
    for (const auto& [u, v] : pairs) g.edges.push_back({u, v, 1.0});
    return g;
  }
  throw std::runtime_error("generate_regular_graph: no simple pairing found within attempt budget");
}

/// Re-weights every edge to +1 or -1 with equal probability.
inline Graph assign_random_signs(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  Graph out = g;
  for (Edge& e : out.edges) e.w = rng.next_bit() ? -1.0 : 1.0;
  return out;
}

/// Total weight of edges whose endpoints lie on opposite sides.
inline double cut_value(const Graph& g, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != g.n)
    throw std::invalid_argument("cut_value: bit vector length mismatch");
  double total = 0.0;
  for (const Edge& e : g.edges)
    if (bits[e.u] != bits[e.v]) total += e.w;
  return total;
}

/// Exact MaxCut by Gray-code enumeration with O(1) incremental cut updates.
/// bits[0] is fixed to 0 (complement symmetry); ties are broken towards the
/// lexicographically smallest bit vector. Limited to n <= 30.
inline CutSolution brute_force_max_cut(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("brute_force_max_cut: empty graph");
  if (g.n > 30) throw std::invalid_argument("brute_force_max_cut: n > 30 exceeds oracle limit");

  const auto adj = adjacency(g);
  std::vector<std::uint8_t> bits(g.n, 0);
  std::vector<std::uint8_t> best_bits = bits;
  double value = 0.0;  // cut of the all-zeros assignment
  double best = 0.0;

  const std::uint64_t steps = g.n > 1 ? (1ull << (g.n - 1)) : 1;
  for (std::uint64_t k = 1; k < steps; ++k) {
    // Gray code over vertices 1..n-1: step k flips vertex ctz(k)+1.
    const int v = std::countr_zero(k) + 1;
    double delta = 0.0;
    for (const auto& [u, w] : adj[v]) delta += (bits[u] == bits[v]) ? w : -w;
    bits[v] ^= 1u;
    value += delta;
    if (value > best) {
      best = value;
      best_bits = bits;
    } else if (value == best &&
               std::lexicographical_compare(bits.begin(), bits.end(), best_bits.begin(),
                                            best_bits.end())) {
      best_bits = bits;
    }
  }
  // Recompute from scratch so the reported value carries no incremental drift.
  return CutSolution{best_bits, cut_value(g, best_bits)};
}

/// Greedy proper coloring: vertices in descending-degree order (ties by
/// index), each assigned the smallest color not used by its colored neighbors.
inline Coloring greedy_color(const Graph& g) {
  const auto adj = adjacency(g);
  const auto deg = vertex_degrees(g);
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });

  Coloring c;
  c.colors.assign(g.n, -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(g.n + 1, 0);
    for (const auto& [u, w] : adj[v]) {
      (void)w;
      if (c.colors[u] >= 0) used[c.colors[u]] = 1;
    }
    int color = 0;
    while (used[color]) ++color;
    c.colors[v] = color;
  }
  return c;
}

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.n) return false;
  for (int x : c.colors)
    if (x < 0) return false;
  for (const Edge& e : g.edges)
    if (c.colors[e.u] == c.colors[e.v]) return false;
  return true;
}

/// Text format: first line "n m", then m lines "u v w" (0-based, decimal
/// weight). Integer weights round-trip exactly.
inline void write_graph(std::ostream& os, const Graph& g) {
  os << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) {
    os << e.u << ' ' << e.v << ' ';
    double ipart;
    if (std::modf(e.w, &ipart) == 0.0 && std::abs(e.w) < 1e15) {
      os << static_cast<long long>(e.w);
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", e.w);
      os << buf;
    }
    os << '\n';
  }
}

inline Graph read_graph(std::istream& is) {
  Graph g;
  std::size_t m = 0;
  if (!(is >> g.n >> m)) throw std::runtime_error("read_graph: malformed header");
  g.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Edge e;
    if (!(is >> e.u >> e.v >> e.w)) throw std::runtime_error("read_graph: malformed edge line");
    g.edges.push_back(e);
  }
  validate_graph(g);
  return g;
}

}  // namespace qrao
