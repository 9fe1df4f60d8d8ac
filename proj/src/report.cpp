#include "metric_lines/report.hpp"

#include <iomanip>
#include <sstream>

#include "metric_lines/graph_io.hpp"

namespace metric_lines {

using Json = nlohmann::ordered_json;

Json to_json(const LineSet& lines) {
  Json out;
  out["n"] = lines.points();
  out["distinct_lines"] = lines.distinct_lines();
  out["has_universal"] = lines.has_universal();
  out["lines"] = lines.lines();
  Json generators = Json::object();
  for (Vertex u = 0; u < lines.points(); ++u) {
    for (Vertex v = u + 1; v < lines.points(); ++v) {
      generators[std::to_string(u) + "," + std::to_string(v)] = lines.line_index(u, v);
    }
  }
  out["generators"] = std::move(generators);
  return out;
}

Json to_json(const Verdict& verdict) {
  Json out;
  out["instance"] = verdict.instance;
  out["n"] = verdict.n;
  out["distinct_lines"] = verdict.distinct_lines;
  out["has_universal"] = verdict.has_universal;
  out["satisfies"] = verdict.satisfies;
  out["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
  return out;
}

Json to_json(const CorpusSpec& corpus) {
  Json out;
  if (const auto* ex = std::get_if<ExhaustiveCorpus>(&corpus)) {
    out["kind"] = "exhaustive";
    out["n_max"] = ex->n_max;
    out["canonical"] = ex->canonical;
  } else if (const auto* random = std::get_if<RandomCorpus>(&corpus)) {
    out["kind"] = "random";
    out["count"] = random->count;
    out["seed"] = random->seed;
    out["n_min"] = random->n_min;
    out["n_max"] = random->n_max;
    out["weights"] = {random->weights.pendant, random->weights.false_twin, random->weights.true_twin};
  } else {
    const auto& two = std::get<TwoMetricCorpus>(corpus);
    out["kind"] = "two-metric";
    out["n_min"] = two.n_min;
    out["n_max"] = two.n_max;
  }
  return out;
}

Json to_json(const SweepReport& report, bool with_timing) {
  Json out;
  out["property"] = report.property;
  out["corpus"] = to_json(report.corpus);
  out["scanned"] = report.scanned;
  out["instances"] = report.instances;
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  out["violations"] = std::move(violations);
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["n"] = r.n;
    rec["instances"] = r.instances;
    rec["min_lines_non_universal"] = r.min_lines_non_universal ? Json(*r.min_lines_non_universal) : Json(nullptr);
    rec["violations"] = r.violations;
    records.push_back(std::move(rec));
  }
  out["records"] = std::move(records);
  if (with_timing) out["duration_ms"] = report.duration.count();
  return out;
}

Json to_json(const LemmaSweepReport& report, bool with_timing) {
  Json out;
  out["property"] = "lemmas";
  out["corpus"] = to_json(report.corpus);
  out["scanned"] = report.scanned;
  out["instances"] = report.instances;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"instance", f.instance}, {"lemma", f.lemma}, {"witness", f.witness}});
  }
  out["failures"] = std::move(failures);
  if (with_timing) out["duration_ms"] = report.duration.count();
  return out;
}

Json to_json(const LemmaResult& triangle, const LemmaResult& xaxb) {
  Json out;
  out["triangle"] = {{"holds", triangle.holds}, {"witness", triangle.witness}};
  out["xaxb"] = {{"holds", xaxb.holds}, {"witness", xaxb.witness}};
  return out;
}

Json to_json(const PruningResult& result) {
  Json out;
  out["distance_hereditary"] = result.accepted();
  if (result.accepted()) {
    Json steps = Json::array();
    for (const auto& s : result.certificate->sequence.steps) {
      const char* kind = s.kind == StepKind::Pendant ? "P" : s.kind == StepKind::FalseTwin ? "F" : "T";
      steps.push_back({kind, s.new_vertex, s.anchor});
    }
    out["steps"] = std::move(steps);
    out["labels"] = result.certificate->labels;
  } else {
    const auto& w = *result.witness;
    out["residual"] = w.residual;
    Json edges = Json::array();
    for (const auto& [u, v] : w.residual_graph.edges()) {
      edges.push_back({w.residual[static_cast<std::size_t>(u)], w.residual[static_cast<std::size_t>(v)]});
    }
    out["residual_edges"] = std::move(edges);
  }
  return out;
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "n,instances,min_lines_non_universal,violations\n";
  for (const auto& r : report.records) {
    os << r.n << ',' << r.instances << ',';
    if (r.min_lines_non_universal) os << *r.min_lines_non_universal;
    os << ',' << r.violations << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream os;
  os << "side,n,distinct_lines,n_4_3,ratio\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& r : rows) os << r.side << ',' << r.n << ',' << r.distinct_lines << ',' << r.n_4_3 << ',' << r.ratio << '\n';
  return os.str();
}

std::string describe(const CorpusSpec& corpus) {
  std::ostringstream os;
  if (const auto* ex = std::get_if<ExhaustiveCorpus>(&corpus)) {
    os << "exhaustive connected graphs, n <= " << ex->n_max << (ex->canonical ? " (one per isomorphism class)" : " (labeled)");
  } else if (const auto* random = std::get_if<RandomCorpus>(&corpus)) {
    os << random->count << " random distance-hereditary graphs, n in [" << random->n_min << ", " << random->n_max
       << "], seed " << random->seed;
  } else {
    const auto& two = std::get<TwoMetricCorpus>(corpus);
    os << "all 2-metrics, n in [" << two.n_min << ", " << two.n_max << "]";
  }
  return os.str();
}

}  // namespace metric_lines
