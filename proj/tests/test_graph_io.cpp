#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "metric_lines/dh.hpp"
#include "metric_lines/graph_io.hpp"

using namespace metric_lines;
using namespace fixtures;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(METRIC_LINES_DATA_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == path(3));
  CHECK(parse_edge_list("# P3\n3 2  # header\n0 1\n\n1 2 # tail\n") == path(3));
  CHECK(parse_edge_list(slurp("c5.edges")) == cycle(5));
  CHECK(parse_edge_list_without_count("3\n0 1\n1 2\n") == path(3));
}

TEST_CASE("edge list errors carry positions") {
  try {
    parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 0\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge list round trip") {
  const auto c5 = cycle(5);
  CHECK(parse_edge_list(format_edge_list(c5)) == c5);
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("Dhc") == cycle(5));
  CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B~~"), ParseError);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(1 + t % 70, 0.3, rng);
    REQUIRE(parse_graph6(to_graph6(g)) == g);
  }
  const auto many = parse_graph6_lines("Bw\n\nBg\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1] == path(3));
}

TEST_CASE("metric parsing") {
  const auto halved = parse_metric(slurp("p3_halved.metric"));
  CHECK(halved == all_pairs_distances(path(3)));
  const auto m = parse_metric("3\n0 2/3 1\n2/3 0 1/3\n1 1/3 0\n");
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 2) == 1);
  CHECK(m(0, 2) == 3);
  CHECK(parse_metric(format_metric(m)) == m);
  CHECK_THROWS_AS(parse_metric("3\n0 1 5\n1 0 1\n5 1 0\n"), InputError);
  CHECK_THROWS_AS(parse_metric("2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_metric("2\n0 1/0\n1 0\n"), InputError);
}

TEST_CASE("sequence format") {
  const auto seq = parse_sequence(slurp("c4.seq"));
  REQUIRE(seq.steps.size() == 3);
  CHECK(seq.steps[0] == ConstructionStep{StepKind::TrueTwin, 1, 0});
  CHECK(build_from_sequence(seq) == cycle(4));
  CHECK(parse_sequence(format_sequence(seq)) == seq);
  CHECK_THROWS_AS(parse_sequence("dh-seq v1 n=3\nP 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence("dh-seq v2 n=1\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence("dh-seq v1 n=2\nQ 1 0\n"), ParseError);
  const std::vector<Vertex> labels{2, 0};
  CHECK(format_sequence(parse_sequence("dh-seq v1 n=2\nP 1 0\n"), &labels).find("# labels 2 0") != std::string::npos);
}

TEST_CASE("format detection") {
  CHECK(detect_format("3 2\n0 1\n1 2\n").format == InputFormat::EdgeList);
  CHECK(detect_format("3\n0 1 2\n1 0 1\n2 1 0\n").format == InputFormat::Metric);
  CHECK(detect_format("Bw\n").format == InputFormat::Graph6);
  CHECK(detect_format("dh-seq v1 n=1\n").format == InputFormat::Sequence);
  const auto amb = detect_format("3\n0 1\n1 2\n");
  CHECK(amb.format == InputFormat::EdgeList);
  CHECK(amb.ambiguous);
  CHECK_FALSE(detect_format("2\n0 1\n1 0\n").ambiguous);
}
