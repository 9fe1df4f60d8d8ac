#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "metric_lines/graph.hpp"
#include "metric_lines/metric.hpp"

namespace metric_lines {

/// [abc]: d(a,b) + d(b,c) = d(a,c). Throws InputError unless a, b, c are
/// pairwise distinct.
bool between(const FiniteMetric& m, Vertex a, Vertex b, Vertex c);

struct Line {
  Edge generators;  // (u, v) with u < v
  VertexSet members;
};

/// {u,v} together with every p such that [puv], [upv] or [uvp].
Line line_of(const FiniteMetric& m, Vertex u, Vertex v);

/// Ext(x,y) = {z : [xyz]}
VertexSet ext_set(const FiniteMetric& m, Vertex x, Vertex y);
/// I(x,y) = {z : [xzy]}
VertexSet interval_open(const FiniteMetric& m, Vertex x, Vertex y);
/// I[x,y) = {x} + I(x,y)
VertexSet interval_half(const FiniteMetric& m, Vertex x, Vertex y);
/// I[x,y] = {x,y} + I(x,y)
VertexSet interval_closed(const FiniteMetric& m, Vertex x, Vertex y);

bool is_universal(const FiniteMetric& m, const Line& line);

/// Index of the unordered pair {u,v} in lexicographic pair order.
std::size_t pair_rank(int n, Vertex u, Vertex v);

/// All lines of a metric, deduplicated by member set. Lines are numbered in
/// order of their first generating pair (lexicographic), so the result does
/// not depend on how the pairs were evaluated.
class LineSet {
 public:
  LineSet(int n, std::vector<VertexSet> lines, std::vector<std::size_t> generator_index);

  int points() const { return n_; }
  std::size_t distinct_lines() const { return lines_.size(); }
  bool has_universal() const { return universal_; }

  const std::vector<VertexSet>& lines() const { return lines_; }

  /// Generator pair rank -> line index.
  std::span<const std::size_t> generator_index() const { return generator_index_; }

  std::size_t line_index(Vertex u, Vertex v) const;
  const VertexSet& line(Vertex u, Vertex v) const { return lines_[line_index(u, v)]; }

  friend bool operator==(const LineSet&, const LineSet&) = default;

 private:
  int n_;
  std::vector<VertexSet> lines_;
  std::vector<std::size_t> generator_index_;
  bool universal_ = false;
};

/// Serial reference. Requires n >= 2.
LineSet all_lines(const FiniteMetric& m);

/// Same result as all_lines; pairs are evaluated by an OpenMP team of `jobs`
/// threads (0 = runtime default).
LineSet all_lines_parallel(const FiniteMetric& m, int jobs = 0);

}  // namespace metric_lines
