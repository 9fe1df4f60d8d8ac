#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "metric_lines/dh.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/metric.hpp"

namespace metric_lines {

/// InputError carrying a 1-based line/column position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// "n m" header, then m lines "u v". '#' starts a comment.
Graph parse_edge_list(std::string_view text);
/// Header holds only n; every following line is an edge.
Graph parse_edge_list_without_count(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// "n", then n rows of n entries; entries are integers or p/q rationals.
std::vector<std::vector<Rational>> parse_rational_matrix(std::string_view text);

/// Parses a metric file; rational entries are integralized.
FiniteMetric parse_metric(std::string_view text);
std::string format_metric(const FiniteMetric& m);

/// "dh-seq v1 n=<count>" header, then "P|F|T new anchor" lines.
ConstructionSequence parse_sequence(std::string_view text);
/// With labels, a "# labels ..." comment records the original vertex of
/// each sequence vertex.
std::string format_sequence(const ConstructionSequence& seq, const std::vector<Vertex>* labels = nullptr);

enum class InputFormat { EdgeList, Graph6, Metric, Sequence };

struct DetectedFormat {
  InputFormat format;
  bool ambiguous = false;  // resolved to EdgeList
};

/// Header-based detection: "dh-seq" -> Sequence, two integers -> EdgeList,
/// one integer -> Metric, graph6 characters -> Graph6. A one-integer header
/// followed by two-token rows that cannot form the matrix is reported as
/// ambiguous and treated as an edge list.
DetectedFormat detect_format(std::string_view text);

}  // namespace metric_lines
