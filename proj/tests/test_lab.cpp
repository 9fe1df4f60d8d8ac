#include <doctest.h>

#include "fixtures.hpp"
#include "metric_lines/dh.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/lab.hpp"
#include "metric_lines/report.hpp"
#include "oracles.hpp"

using namespace metric_lines;
using namespace fixtures;

TEST_CASE("verdicts") {
  const auto k4 = check_chen_chvatal(all_pairs_distances(complete(4)));
  CHECK(k4.distinct_lines == 6);
  CHECK(k4.satisfies);
  CHECK(check_chen_chvatal(all_pairs_distances(path(3))).has_universal);
  const auto c4 = check_chen_chvatal(all_pairs_distances(cycle(4)));
  CHECK(c4.distinct_lines == 1);
  CHECK(c4.has_universal);

  const auto v = make_verdict("x", LineSet(4, {{0, 1}, {2, 3}}, {0, 0, 0, 0, 0, 1}));
  CHECK_FALSE(v.satisfies);
}

TEST_CASE("main theorem examples") {
  const auto k3 = check_main_theorem(complete(3));
  CHECK(k3.distinct_lines == 3);
  CHECK_FALSE(k3.has_universal);
  CHECK(k3.satisfies);
  CHECK(k3.instance == "g6:Bw");

  const auto s = check_main_theorem(star(3));
  CHECK(s.distinct_lines == 4);
  CHECK(s.has_universal);

  const std::vector<int> parts{3, 3, 3};
  const auto mp = check_main_theorem(complete_multipartite(parts));
  CHECK(mp.distinct_lines == 12);
  CHECK(mp.distinct_lines == oracle::multipartite_line_count(3, 3));
  CHECK(oracle::multipartite_lines(parts).size() == 12);
  CHECK_FALSE(mp.has_universal);
  CHECK(mp.satisfies);

  CHECK_THROWS_AS(check_main_theorem(cycle(5)), InputError);
}

TEST_CASE("lemma examples") {
  CHECK(verify_lemma_triangle(cycle(4)).holds);
  CHECK(verify_lemma_triangle(complete(4)).holds);
  CHECK(verify_lemma_xaxb(complete(3)).holds);
  CHECK(verify_lemma_xaxb(path(3)).holds);
  CHECK(verify_lemma_xaxb(cycle(4)).holds);
  CHECK_THROWS_AS(verify_lemma_triangle(cycle(5)), InputError);
  CHECK_THROWS_AS(verify_lemma_xaxb(cycle(5)), InputError);
}

TEST_CASE("triangle lemma holds on every tree up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : isomorphism_class_representatives(n, true)) {
      if (g.edge_count() + 1 != static_cast<std::size_t>(n)) continue;
      CHECK(verify_lemma_triangle(g).holds);
    }
  }
}

TEST_CASE("xaxb lemma fails on a small distance-hereditary graph") {
  // False twins 0,1 over {2,3} and a pendant 4 on 0: line(1,2) = line(1,4)
  // is universal, line(2,4) misses 3, and 1 is not between 2 and 4.
  const auto g = graph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}});
  REQUIRE(is_distance_hereditary(g));
  const auto r = verify_lemma_xaxb(g);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<Vertex>{1, 2, 4});
  const auto d = oracle::distances(g);
  CHECK(oracle::line(d, 1, 2) == oracle::line(d, 1, 4));
  CHECK(oracle::line(d, 2, 4).size() == 4);
  CHECK_FALSE(oracle::between(d, 2, 1, 4));
}

TEST_CASE("xaxb lemma fails even without a universal line") {
  const auto g = graph(7, {{0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  REQUIRE(oracle::distance_hereditary(g));
  const auto d = oracle::distances(g);
  for (const auto& l : oracle::all_lines(d)) REQUIRE(l.size() < 7);
  CHECK(oracle::line(d, 1, 0) == oracle::line(d, 1, 3));
  CHECK_FALSE(oracle::between(d, 0, 1, 3));
  CHECK_FALSE(verify_lemma_xaxb(g).holds);
  CHECK(check_main_theorem(g).satisfies);
}

TEST_CASE("exhaustive sweeps") {
  const auto three = sweep_theorem(ExhaustiveCorpus{3, false});
  CHECK(three.instances == 5);
  CHECK(three.violations.empty());
  REQUIRE(three.records.size() == 2);
  CHECK(three.records[1].n == 3);
  CHECK(three.records[1].min_lines_non_universal == 3u);

  const auto five = sweep_theorem(ExhaustiveCorpus{5, false});
  CHECK(five.violations.empty());
  CHECK(five.scanned == 1 + 4 + 38 + 728);

  const auto conj = sweep_conjecture(ExhaustiveCorpus{5, false});
  CHECK(conj.instances == conj.scanned);
  CHECK(conj.violations.empty());

  const auto canon = sweep_theorem(ExhaustiveCorpus{5, true});
  CHECK(canon.scanned == 1 + 2 + 6 + 21);
  CHECK_THROWS_AS(sweep_theorem(ExhaustiveCorpus{8, false}), InputError);
}

TEST_CASE("serial reference matches the parallel kernels") {
  const ExhaustiveCorpus ex{5, false};
  for (int jobs : {1, 3}) {
    const SweepOptions opt{jobs};
    CHECK(sweep_theorem(ex, opt).same_results(serial::sweep_theorem(ex)));
    CHECK(sweep_conjecture(ex, opt).same_results(serial::sweep_conjecture(ex)));
    const RandomCorpus r{300, 5, 2, 25, {}};
    CHECK(sweep_theorem(r, opt).same_results(serial::sweep_theorem(r)));
    const TwoMetricCorpus two{2, 5};
    CHECK(sweep_two_metric(two, opt).same_results(serial::sweep_two_metric(two)));
    const auto a = sweep_lemmas(r, opt), b = serial::sweep_lemmas(r);
    CHECK(a.instances == b.instances);
    CHECK(a.failures == b.failures);
    const auto pass = exhaustive_pass(ex, opt);
    CHECK(pass.theorem.same_results(serial::sweep_theorem(ex)));
    CHECK(pass.conjecture.same_results(serial::sweep_conjecture(ex)));
  }
}

TEST_CASE("random corpus") {
  const RandomCorpus r{1000, 1, 2, 30, {}};
  const auto report = sweep_theorem(r);
  CHECK(report.instances == 1000);
  CHECK(report.violations.empty());
  CHECK(random_corpus_graph(r, 17) == random_corpus_graph(r, 17));
  CHECK_THROWS_AS(sweep_theorem(RandomCorpus{10, 0, 1, 5, {}}), InputError);
}

TEST_CASE("two-metric sweeps") {
  const auto two = sweep_two_metric(2);
  CHECK(two.instances == 2);
  CHECK(two.records.at(0).min_lines_non_universal == std::nullopt);
  CHECK(sweep_two_metric(3).instances == 8);
  const auto five = sweep_two_metric(5);
  CHECK(five.instances == 1024);
  CHECK(five.violations.empty());
  CHECK(two_metric_from_mask(3, 0b010)(0, 2) == 2);
  CHECK_THROWS_AS(sweep_two_metric(7), InputError);
}

TEST_CASE("scaling experiment") {
  const std::vector<int> sides{3, 4};
  const auto rows = scaling_experiment(sides);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 27);
  CHECK(rows[0].distinct_lines == 63);
  CHECK(rows[0].n_4_3 == doctest::Approx(81.0));
  CHECK(rows[0].ratio == doctest::Approx(63.0 / 81.0));
  CHECK_FALSE(rows[0].has_universal);
  CHECK(rows[1].distinct_lines == 216);
  CHECK(rows[1].ratio == doctest::Approx(216.0 / 256.0));
  const std::vector<int> bad{2};
  CHECK_THROWS_AS(scaling_experiment(bad), InputError);
}

TEST_CASE("report serialization") {
  const auto report = sweep_theorem(ExhaustiveCorpus{4, false});
  const auto j = to_json(report);
  CHECK(j["property"] == "main-theorem");
  CHECK_FALSE(j.contains("duration_ms"));
  CHECK(to_json(report, true).contains("duration_ms"));
  CHECK(to_csv(report) == "n,instances,min_lines_non_universal,violations\n2,1,,0\n3,4,3,0\n4,38,6,0\n");
  const std::vector<ScalingRow> rows{{3, 27, 63, false, 81.0, 63.0 / 81.0}};
  CHECK(to_csv(rows) == "side,n,distinct_lines,n_4_3,ratio\n3,27,63,81.000000,0.777778\n");
  const auto lines = to_json(all_lines(all_pairs_distances(path(3))));
  CHECK(lines.dump() ==
        R"({"n":3,"distinct_lines":1,"has_universal":true,"lines":[[0,1,2]],"generators":{"0,1":0,"0,2":0,"1,2":0}})");
}
