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

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qrao/graph.hpp"

using namespace qrao;

TEST_CASE("generate_regular_graph produces K4 for n=4, degree=3") {
  const Graph g = generate_regular_graph(4, 3, 123);
  REQUIRE(g.n == 4);
  REQUIRE(g.edges.size() == 6);
  std::set<std::pair<int, int>> got;
  for (const Edge& e : g.edges) got.insert({e.u, e.v});
  REQUIRE(got == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("generate_regular_graph rejects odd stub totals and bad degrees") {
  REQUIRE_THROWS_AS(generate_regular_graph(5, 3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_regular_graph(3, 3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(generate_regular_graph(0, 2, 1), std::invalid_argument);
}

TEST_CASE("generate_regular_graph is deterministic per seed") {
  const Graph a = generate_regular_graph(20, 3, 7);
  const Graph b = generate_regular_graph(20, 3, 7);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    REQUIRE(a.edges[i].u == b.edges[i].u);
    REQUIRE(a.edges[i].v == b.edges[i].v);
  }
  const Graph c = generate_regular_graph(20, 3, 8);
  bool same = a.edges.size() == c.edges.size();
  if (same)
    for (std::size_t i = 0; i < a.edges.size(); ++i)
      same = same && a.edges[i].u == c.edges[i].u && a.edges[i].v == c.edges[i].v;
  REQUIRE_FALSE(same);
}

TEST_CASE("generate_regular_graph output is simple and regular") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 10 + 2 * static_cast<int>(seed % 6);
    const Graph g = generate_regular_graph(n, 3, seed);
    REQUIRE_NOTHROW(validate_graph(g));
    for (int d : vertex_degrees(g)) REQUIRE(d == 3);
  }
}

TEST_CASE("assign_random_signs draws +1/-1 and is deterministic") {
  const Graph e = oracles::single_edge_graph();
  const Graph w = assign_random_signs(e, 42);
  REQUIRE((w.edges[0].w == 1.0 || w.edges[0].w == -1.0));

  Graph many;
  many.n = 200;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) many.edges.push_back({i, 100 + j, 1.0});
  const Graph signed_many = assign_random_signs(many, 9);
  double mean = 0.0;
  for (const Edge& ed : signed_many.edges) mean += ed.w;
  mean /= static_cast<double>(signed_many.edges.size());
  REQUIRE(std::abs(mean) <= 4.0 / 100.0);  // 4 sigma for 10^4 fair signs

  const Graph again = assign_random_signs(many, 9);
  for (std::size_t i = 0; i < again.edges.size(); ++i)
    REQUIRE(again.edges[i].w == signed_many.edges[i].w);
}

TEST_CASE("cut_value on small graphs") {
  const Graph k3 = oracles::complete_graph(3);
  REQUIRE(cut_value(k3, {0, 0, 1}) == 2.0);
  REQUIRE(cut_value(oracles::single_edge_graph(), {0, 0}) == 0.0);
  REQUIRE(cut_value(oracles::single_edge_graph(-1.0), {0, 1}) == -1.0);
  REQUIRE_THROWS_AS(cut_value(k3, {0, 1}), std::invalid_argument);
}

TEST_CASE("cut_value is invariant under complement") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = assign_random_signs(
        generate_regular_graph(12, 3, rng.next_u64()), rng.next_u64());
    std::vector<std::uint8_t> bits(12), flipped(12);
    for (int v = 0; v < 12; ++v) {
      bits[v] = static_cast<std::uint8_t>(rng.next_bit());
      flipped[v] = static_cast<std::uint8_t>(1 - bits[v]);
    }
    REQUIRE(cut_value(g, bits) == Catch::Approx(cut_value(g, flipped)).margin(1e-12));
  }
}

TEST_CASE("brute_force_max_cut on known graphs") {
  REQUIRE(brute_force_max_cut(oracles::complete_graph(3)).value == 2.0);
  // C5: frozen from the exhaustive enumeration over all 2^5 assignments.
  const Graph c5 = oracles::cycle_graph(5);
  REQUIRE(oracles::naive_max_cut(c5).value == 4.0);
  REQUIRE(brute_force_max_cut(c5).value == 4.0);
}

TEST_CASE("brute_force_max_cut agrees with the naive enumerator") {
  const Graph petersen = oracles::petersen_graph();
  REQUIRE(petersen.edges.size() == 15);
  const CutSolution gray = brute_force_max_cut(petersen);
  const CutSolution naive = oracles::naive_max_cut(petersen);
  REQUIRE(gray.value == naive.value);
  REQUIRE(gray.value == 12.0);

  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(9));  // 4..12
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next_double() < 0.5)
          g.edges.push_back({i, j, rng.next_bit() ? -1.0 : 1.0});
    if (g.edges.empty()) g.edges.push_back({0, 1, 1.0});
    REQUIRE(brute_force_max_cut(g).value == oracles::naive_max_cut(g).value);
  }
}

TEST_CASE("brute_force_max_cut fixes bits[0]=0 and breaks ties lexicographically") {
  const CutSolution edge = brute_force_max_cut(oracles::single_edge_graph());
  REQUIRE(edge.bits == std::vector<std::uint8_t>{0, 1});
  const CutSolution k4 = brute_force_max_cut(oracles::complete_graph(4));
  REQUIRE(k4.value == 4.0);
  REQUIRE(k4.bits == std::vector<std::uint8_t>{0, 0, 1, 1});
  REQUIRE(k4.value == cut_value(oracles::complete_graph(4), k4.bits));
}

TEST_CASE("brute_force_max_cut rejects oversized instances") {
  Graph g;
  g.n = 31;
  REQUIRE_THROWS_AS(brute_force_max_cut(g), std::invalid_argument);
}

TEST_CASE("greedy_color basics") {
  REQUIRE(greedy_color(oracles::complete_graph(3)).num_colors() == 3);
  REQUIRE(greedy_color(oracles::single_edge_graph()).num_colors() == 2);
}

TEST_CASE("greedy_color processes vertices by descending degree, ties by index") {
  // Path 0-1-2-3: order 1, 2, 0, 3 gives colors (1, 0, 1, 0).
  Graph path;
  path.n = 4;
  path.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  REQUIRE(greedy_color(path).colors == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("greedy_color is proper and uses at most degree+1 colors") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = generate_regular_graph(16 + 2 * static_cast<int>(seed % 5), 3, seed);
    const Coloring c = greedy_color(g);
    REQUIRE(is_proper_coloring(g, c));
    REQUIRE(c.num_colors() <= 4);
  }
}

TEST_CASE("graph file format round-trips") {
  Graph g;
  g.n = 5;
  g.edges = {{0, 1, 1.0}, {0, 4, -1.0}, {2, 3, 7.0}};
  std::stringstream ss;
  write_graph(ss, g);
  REQUIRE(ss.str() == "5 3\n0 1 1\n0 4 -1\n2 3 7\n");
  const Graph back = read_graph(ss);
  REQUIRE(back.n == g.n);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    REQUIRE(back.edges[i].u == g.edges[i].u);
    REQUIRE(back.edges[i].v == g.edges[i].v);
    REQUIRE(back.edges[i].w == g.edges[i].w);
  }

  std::stringstream bad("2 1\n1 0 1\n");  // u >= v
  REQUIRE_THROWS(read_graph(bad));
  std::stringstream truncated("3 2\n0 1 1\n");
  REQUIRE_THROWS(read_graph(truncated));
}
