#pragma once

#include <random>
#include <vector>

#include "metric_lines/graph.hpp"

namespace fixtures {

using metric_lines::Edge;
using metric_lines::Graph;

inline Graph graph(int n, std::vector<Edge> edges) { return Graph::from_edge_list(n, edges); }

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return graph(n, e);
}

// Centre 0, leaves 1..k.
inline Graph star(int k) {
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return graph(k + 1, e);
}

// C5 plus the chord 0-2.
inline Graph house() { return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}); }

// G(n, p) conditioned on nothing; callers filter for connectivity.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return graph(n, e);
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  // Random spanning tree first, then extra edges.
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return graph(n, e);
}

}  // namespace fixtures
