#pragma once

#include <cstdint>

#include "metric_lines/lab.hpp"

namespace metric_lines::detail {

/// Verdict for a connected graph on >= 2 vertices, no recognition.
Verdict graph_verdict(const Graph& g, std::string instance, const LineSet& lines);

LemmaResult lemma_triangle_unchecked(const Graph& g, const FiniteMetric& m, const LineSet& lines);
LemmaResult lemma_xaxb_unchecked(const FiniteMetric& m, const LineSet& lines);

std::string graph_instance(const Graph& g);
std::string random_instance(std::uint64_t index);
std::string two_metric_instance(int n, std::uint64_t mask);

void require_exhaustive(const ExhaustiveCorpus& corpus);
void require_random(const RandomCorpus& corpus);
void require_two_metric(const TwoMetricCorpus& corpus);

/// Evaluates both lemmas on a distance-hereditary graph and records failures.
void check_lemmas(const Graph& g, const std::string& instance, LemmaSweepReport& report);

}  // namespace metric_lines::detail
