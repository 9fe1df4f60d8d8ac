#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "oracles.hpp"

using namespace metric_lines;
using namespace fixtures;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), e);
}

// Minimum edge mask over every permutation: the slow isomorphism test.
std::set<std::uint64_t> orbit(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::uint64_t> out;
  do {
    out.insert(edge_mask(relabel(g, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("edge masks") {
  CHECK(edge_bit(0, 1) == 0);
  CHECK(edge_bit(0, 2) == 1);
  CHECK(edge_bit(1, 2) == 2);
  CHECK(edge_mask(path(3)) == 0b101);
  CHECK(graph_from_edge_mask(3, 0b111) == complete(3));
  CHECK(mask_connected(3, 0b101));
  CHECK_FALSE(mask_connected(3, 0b001));
  CHECK(mask_connected(1, 0));
}

TEST_CASE("connected labeled counts") {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t count = 0, last = 0;
    bool increasing = true;
    enumerate_connected_graphs(n, false, [&](const Graph& g, std::uint64_t mask) {
      if (count > 0 && mask <= last) increasing = false;
      last = mask;
      ++count;
      CHECK(edge_mask(g) == mask);
    });
    CHECK(count == oracle::connected_labeled_count(n));
    CHECK(increasing);
  }
  CHECK(oracle::connected_labeled_count(3) == 4);
  CHECK(oracle::connected_labeled_count(4) == 38);
  CHECK(oracle::connected_labeled_count(7) == 1866256);
  CHECK_THROWS_AS(enumerate_connected_graphs(1, false, [](const Graph&, std::uint64_t) {}), InputError);
  CHECK_THROWS_AS(enumerate_connected_graphs(8, false, [](const Graph&, std::uint64_t) {}), InputError);
}

TEST_CASE("canonical filter keeps one graph per class") {
  const std::vector<std::uint64_t> expected{0, 0, 1, 2, 6, 21, 112};
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t count = 0;
    enumerate_connected_graphs(n, true, [&](const Graph&, std::uint64_t) { ++count; });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("canonical code against the permutation oracle") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 6;
    const auto g = random_graph(n, 0.4, rng);
    const auto code = canonical_code(g);
    const auto all = orbit(g);
    REQUIRE(all.count(code) == 1);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_code(relabel(g, perm)) == code);
    // A graph from a different class never shares the code.
    const auto h = random_graph(n, 0.4, rng);
    REQUIRE((canonical_code(h) == code) == (all.count(edge_mask(h)) == 1));
  }
}

TEST_CASE("class representatives") {
  const std::vector<std::size_t> all{0, 1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(isomorphism_class_representatives(n, false).size() == all[n]);
    CHECK(isomorphism_class_representatives(n, true).size() == connected[n]);
  }
  for (const auto& g : isomorphism_class_representatives(5, false)) CHECK(is_canonical(g));
}
