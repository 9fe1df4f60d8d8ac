#include "metric_lines/graph.hpp"

#include <algorithm>
#include <string>

#include "metric_lines/error.hpp"
#include "metric_lines/metric.hpp"

namespace metric_lines {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(g.order()) + ")");
  }
}

}  // namespace

Graph::Graph(int n) {
  if (n < 1) throw InputError("graph needs at least one vertex, got n = " + std::to_string(n));
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> distances_from(const Graph& g, Vertex x) {
  require_vertex(g, x);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(x)] = 0;
  queue.push_back(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw < 0) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

BfsLevels bfs_levels(const Graph& g, Vertex x) {
  const auto dist = distances_from(g, x);
  BfsLevels out;
  out.source = x;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = dist[static_cast<std::size_t>(v)];
    if (d < 0) {
      out.unreachable.push_back(v);
      continue;
    }
    if (static_cast<std::size_t>(d) >= out.levels.size()) out.levels.resize(static_cast<std::size_t>(d) + 1);
    out.levels[static_cast<std::size_t>(d)].push_back(v);
  }
  return out;
}

FiniteMetric all_pairs_distances(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("a graph metric needs at least two vertices");
  std::vector<Distance> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    const auto dist = distances_from(g, x);
    for (Vertex y = 0; y < n; ++y) {
      const int dxy = dist[static_cast<std::size_t>(y)];
      if (dxy < 0) {
        throw DisconnectedError("graph is disconnected: no path between " + std::to_string(x) + " and " +
                                std::to_string(y));
      }
      d[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          static_cast<Distance>(dxy);
    }
  }
  return FiniteMetric(FiniteMetric::Trusted{}, n, std::move(d));
}

bool is_connected(const Graph& g) {
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

VertexSet cut_vertices(const Graph& g) {
  // Iterative Hopcroft-Tarjan low-point search over every component.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      const auto ui = static_cast<std::size_t>(u);
      const auto& nbrs = g.neighbors(u);
      if (next_edge[ui] < nbrs.size()) {
        const Vertex w = nbrs[next_edge[ui]++];
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          parent[wi] = u;
          disc[wi] = low[wi] = timer++;
          if (u == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[ui]) {
          low[ui] = std::min(low[ui], disc[wi]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[ui];
      if (p >= 0) {
        const auto pi = static_cast<std::size_t>(p);
        low[pi] = std::min(low[pi], low[ui]);
        if (p != root && low[ui] >= disc[pi]) is_cut[pi] = true;
      }
    }
    if (root_children > 1) is_cut[static_cast<std::size_t>(root)] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) {
    throw InputError("2-connectivity is only defined here for n >= 3, got n = " + std::to_string(g.order()));
  }
  return is_connected(g) && cut_vertices(g).empty();
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) return false;
  // Compare N(u) - {v} with N(v) - {u} by merging the sorted lists.
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  auto i = a.begin();
  auto j = b.begin();
  while (true) {
    if (i != a.end() && *i == v) ++i;
    if (j != b.end() && *j == u) ++j;
    if (i == a.end() || j == b.end()) return i == a.end() && j == b.end();
    if (*i != *j) return false;
    ++i;
    ++j;
  }
}

std::vector<TwinPair> find_twins(const Graph& g) {
  std::vector<TwinPair> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      // Twins have equal degrees.
      if (g.degree(u) != g.degree(v)) continue;
      if (are_twins(g, u, v)) out.push_back({u, v, g.has_edge(u, v) ? TwinKind::True : TwinKind::False});
    }
  }
  return out;
}

bool edge_in_triangle(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (!g.has_edge(u, v)) {
    throw InputError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("induced subgraph of an empty vertex set");
  InducedSubgraph out{Graph(1), {}, std::vector<Vertex>(static_cast<std::size_t>(g.order()), -1)};
  out.new_to_old.assign(s.begin(), s.end());
  for (Vertex v : out.new_to_old) require_vertex(g, v);
  std::sort(out.new_to_old.begin(), out.new_to_old.end());
  out.new_to_old.erase(std::unique(out.new_to_old.begin(), out.new_to_old.end()), out.new_to_old.end());
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    out.old_to_new[static_cast<std::size_t>(out.new_to_old[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    for (Vertex w : g.neighbors(out.new_to_old[i])) {
      const Vertex j = out.old_to_new[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  out.graph = Graph::from_edge_list(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

}  // namespace metric_lines
