#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/metric.hpp"
#include "oracles.hpp"

using namespace metric_lines;
using namespace fixtures;

TEST_CASE("from_edge_list builds simple graphs") {
  const auto p3 = path(3);
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.neighbors(1) == VertexSet{0, 2});

  const Graph single = graph(1, {});
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  const auto c4 = graph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4 == cycle(4));
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(graph(3, {{-1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(0), InputError);
}

TEST_CASE("bfs levels") {
  auto levels = bfs_levels(path(3), 0).levels;
  CHECK(levels == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(bfs_levels(complete(3), 0).levels == std::vector<VertexSet>{{0}, {1, 2}});
  CHECK(bfs_levels(cycle(5), 0).levels == std::vector<VertexSet>{{0}, {1, 4}, {2, 3}});
  const auto split = bfs_levels(graph(4, {{0, 1}, {2, 3}}), 0);
  CHECK(split.unreachable == VertexSet{2, 3});
  CHECK(distances_from(graph(4, {{0, 1}, {2, 3}}), 0) == std::vector<int>{0, 1, -1, -1});
}

TEST_CASE("C5 levels agree with path enumeration") {
  const auto c5 = cycle(5);
  const auto levels = bfs_levels(c5, 0).levels;
  for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
    for (Vertex v : levels[i]) CHECK(oracle::path_enumeration_distance(c5, 0, v) == i);
  }
}

TEST_CASE("bfs level invariants on random graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(2 + t % 9, 0.3, rng);
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto b = bfs_levels(g, x);
      REQUIRE(b.levels[0] == VertexSet{x});
      std::vector<int> seen(g.order(), 0);
      for (std::size_t i = 0; i < b.levels.size(); ++i) {
        for (Vertex v : b.levels[i]) {
          ++seen[v];
          if (i == 0) continue;
          bool back = false;
          for (Vertex w : g.neighbors(v)) {
            back |= std::binary_search(b.levels[i - 1].begin(), b.levels[i - 1].end(), w);
          }
          CHECK(back);
        }
      }
      for (Vertex v : b.unreachable) ++seen[v];
      for (int s : seen) CHECK(s == 1);
    }
  }
}

TEST_CASE("all_pairs_distances") {
  const auto p3 = all_pairs_distances(path(3));
  CHECK(p3(0, 2) == 2);
  CHECK(p3(0, 1) == 1);
  CHECK(p3(1, 2) == 1);
  const auto k4 = all_pairs_distances(complete(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 0u : 1u));
  }
  CHECK(all_pairs_distances(cycle(6))(0, 3) == 3);
  CHECK(oracle::path_enumeration_distance(cycle(6), 0, 3) == 3);
  CHECK_THROWS_AS(all_pairs_distances(graph(4, {{0, 1}, {2, 3}})), DisconnectedError);
  CHECK_THROWS_AS(all_pairs_distances(Graph(1)), InputError);
}

TEST_CASE("all_pairs_distances matches Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_connected_graph(2 + t % 14, 0.15, rng);
    const auto m = all_pairs_distances(g);
    const auto d = oracle::distances(g);
    for (int i = 0; i < g.order(); ++i) {
      for (int j = 0; j < g.order(); ++j) REQUIRE(static_cast<long long>(m(i, j)) == d[i][j]);
    }
  }
}

TEST_CASE("connectivity and cut vertices") {
  CHECK(is_connected(path(3)));
  CHECK(cut_vertices(path(3)) == VertexSet{1});
  CHECK_FALSE(is_two_connected(path(3)));
  CHECK(is_two_connected(cycle(4)));
  CHECK_FALSE(is_connected(graph(4, {{0, 1}, {2, 3}})));
  CHECK_THROWS_AS(is_two_connected(path(2)), InputError);
  CHECK(cut_vertices(star(3)) == VertexSet{0});
  // Two triangles sharing vertex 2.
  CHECK(cut_vertices(graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})) == VertexSet{2});
}

TEST_CASE("cut vertices match deletion oracle") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_connected_graph(3 + t % 10, 0.1, rng);
    VertexSet expected;
    for (Vertex v = 0; v < g.order(); ++v) {
      VertexSet rest;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w != v) rest.push_back(w);
      }
      if (!is_connected(induced_subgraph(g, rest).graph)) expected.push_back(v);
    }
    REQUIRE(cut_vertices(g) == expected);
  }
}

TEST_CASE("twins") {
  const auto k3 = find_twins(complete(3));
  REQUIRE(k3.size() == 3);
  for (const auto& t : k3) CHECK(t.kind == TwinKind::True);
  CHECK(find_twins(path(3)) == std::vector<TwinPair>{{0, 2, TwinKind::False}});
  CHECK(find_twins(cycle(5)).empty());
  CHECK(are_twins(cycle(4), 0, 2));
  CHECK_FALSE(are_twins(cycle(4), 0, 1));
}

TEST_CASE("twins match the neighbourhood oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto g = random_graph(2 + t % 8, 0.5, rng);
    std::map<std::pair<int, int>, bool> got;
    for (const auto& tw : find_twins(g)) got[{tw.u, tw.v}] = tw.kind == TwinKind::True;
    REQUIRE(got == oracle::twins(g));
  }
}

TEST_CASE("edge_in_triangle") {
  CHECK(edge_in_triangle(complete(3), 0, 1));
  CHECK_FALSE(edge_in_triangle(cycle(4), 0, 1));
  const auto k4e = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  for (const auto& [u, v] : k4e.edges()) CHECK(edge_in_triangle(k4e, u, v));
  CHECK_THROWS_AS(edge_in_triangle(cycle(4), 0, 2), InputError);
}

TEST_CASE("induced subgraph") {
  const VertexSet s{0, 1, 2, 3};
  const auto p4 = induced_subgraph(cycle(5), s);
  CHECK(p4.graph == path(4));
  CHECK(p4.new_to_old == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(p4.old_to_new[4] == -1);

  const VertexSet three{1, 2, 3};
  CHECK(induced_subgraph(complete(4), three).graph == complete(3));

  const VertexSet alternate{0, 2, 4};
  const auto sub = induced_subgraph(cycle(6), alternate);
  CHECK(sub.graph.edge_count() == 0);
  CHECK(sub.old_to_new[4] == 2);

  const VertexSet bad{7};
  CHECK_THROWS_AS(induced_subgraph(cycle(4), bad), InputError);
}
