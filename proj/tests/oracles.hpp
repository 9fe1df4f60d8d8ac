#pragma once

// Slow, definition-level reference computations. None of them calls into
// the library beyond reading a Graph's edge list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "metric_lines/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;
inline constexpr long long kInf = 1LL << 40;

inline std::vector<std::vector<bool>> adjacency(const metric_lines::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Floyd-Warshall restricted to the vertices flagged in `keep`.
inline Matrix floyd(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& keep) {
  const int n = static_cast<int>(adj.size());
  Matrix d(n, std::vector<long long>(n, kInf));
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (keep[j] && adj[i][j]) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    if (!keep[k]) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline Matrix distances(const metric_lines::Graph& g) {
  return floyd(adjacency(g), std::vector<bool>(static_cast<std::size_t>(g.order()), true));
}

// Shortest path length by enumerating every simple path from s to t.
inline long long path_enumeration_distance(const metric_lines::Graph& g, int s, int t) {
  const auto adj = adjacency(g);
  const int n = g.order();
  long long best = kInf;
  std::vector<bool> used(n, false);
  std::function<void(int, long long)> walk = [&](int v, long long len) {
    if (v == t) {
      best = std::min(best, len);
      return;
    }
    used[v] = true;
    for (int w = 0; w < n; ++w) {
      if (adj[v][w] && !used[w]) walk(w, len + 1);
    }
    used[v] = false;
  };
  walk(s, 0);
  return best;
}

inline bool between(const Matrix& d, int a, int b, int c) { return d[a][b] + d[b][c] == d[a][c]; }

inline std::set<int> line(const Matrix& d, int u, int v) {
  std::set<int> out{u, v};
  const int n = static_cast<int>(d.size());
  for (int p = 0; p < n; ++p) {
    if (p == u || p == v) continue;
    if (between(d, p, u, v) || between(d, u, p, v) || between(d, u, v, p)) out.insert(p);
  }
  return out;
}

inline std::set<std::set<int>> all_lines(const Matrix& d) {
  std::set<std::set<int>> out;
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.insert(line(d, u, v));
  }
  return out;
}

// Pairs {u,v} with N(u) - {v} = N(v) - {u}; value is true for adjacent twins.
inline std::map<std::pair<int, int>, bool> twins(const metric_lines::Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.order();
  std::map<std::pair<int, int>, bool> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool same = true;
      for (int w = 0; w < n && same; ++w) {
        if (w != u && w != v && adj[u][w] != adj[v][w]) same = false;
      }
      if (same) out[{u, v}] = adj[u][v];
    }
  }
  return out;
}

// Definition: every connected induced subgraph is isometric.
inline bool distance_hereditary(const metric_lines::Graph& g) {
  const auto adj = adjacency(g);
  const int n = g.order();
  const auto full = floyd(adj, std::vector<bool>(n, true));
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<bool> keep(n);
    for (int i = 0; i < n; ++i) keep[i] = (s >> i) & 1u;
    const auto sub = floyd(adj, keep);
    bool connected = true;
    for (int i = 0; i < n && connected; ++i) {
      for (int j = 0; j < n; ++j) {
        if (keep[i] && keep[j] && sub[i][j] >= kInf) {
          connected = false;
          break;
        }
      }
    }
    if (!connected) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (keep[i] && keep[j] && sub[i][j] != full[i][j]) return false;
      }
    }
  }
  return true;
}

// Connected labeled graphs on n vertices:
// c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1,k-1) c(k) 2^C(n-k,2).
inline std::uint64_t connected_labeled_count(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  auto pow2 = [](int e) { return std::uint64_t{1} << e; };
  for (int m = 1; m <= n; ++m) {
    std::uint64_t total = pow2(m * (m - 1) / 2);
    for (int k = 1; k < m; ++k) total -= binom(m - 1, k - 1) * c[k] * pow2((m - k) * (m - k - 1) / 2);
    c[m] = total;
  }
  return c[n];
}

// Lines of a complete multipartite graph by pair classification: a pair
// inside part P spans {u,v} plus everything outside P; a pair across parts
// P, Q spans P and Q. No distances involved.
inline std::set<std::set<int>> multipartite_lines(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) part_of.insert(part_of.end(), parts[p], p);
  const int n = static_cast<int>(part_of.size());
  std::set<std::set<int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::set<int> l{u, v};
      for (int w = 0; w < n; ++w) {
        const bool same = part_of[u] == part_of[v];
        if (same ? part_of[w] != part_of[u] : (part_of[w] == part_of[u] || part_of[w] == part_of[v])) l.insert(w);
      }
      out.insert(l);
    }
  }
  return out;
}

// m parts of size s, m >= 3, s >= 2: every within-part line and every
// across-part line is distinct.
inline std::uint64_t multipartite_line_count(std::uint64_t m, std::uint64_t s) {
  return m * s * (s - 1) / 2 + m * (m - 1) / 2;
}

}  // namespace oracle
