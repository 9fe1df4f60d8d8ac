#include "metric_lines/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "metric_lines/dh.hpp"
#include "metric_lines/graph_io.hpp"
#include "metric_lines/lab.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/report.hpp"

namespace metric_lines::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string format = "auto";
  std::string output;

  std::string family = "random-dh";
  int n = 10;
  std::uint64_t seed = 0;
  std::vector<double> weights{1.0, 1.0, 1.0};
  std::vector<int> parts{3, 3, 3};
  std::string emit = "edgelist";

  bool random = false;
  bool canonical = false;
  bool conjecture = false;
  bool lemmas = false;
  bool timing = false;
  bool reference = false;
  int n_min = -1;
  int n_max = -1;
  std::uint64_t count = 10000;
  int jobs = 0;
  std::vector<int> sides{3, 4, 5};
};

struct Instance {
  std::optional<Graph> graph;
  std::optional<FiniteMetric> metric;
};

spdlog::level::level_enum log_level_from_env() {
  const char* env = std::getenv("METRIC_LINES_LOG");
  if (env == nullptr) return spdlog::level::warn;
  return spdlog::level::from_str(env);
}

std::string read_input(const Options& opt, std::istream& in) {
  std::ostringstream buffer;
  if (opt.input.empty() || opt.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(opt.input);
    if (!file) throw InputError("cannot open '" + opt.input + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::vector<Instance> load_instances(const Options& opt, std::istream& in, spdlog::logger& log) {
  const std::string text = read_input(opt, in);
  InputFormat format;
  bool ambiguous = false;
  if (opt.format == "auto") {
    const auto detected = detect_format(text);
    format = detected.format;
    ambiguous = detected.ambiguous;
  } else if (opt.format == "edgelist") {
    format = InputFormat::EdgeList;
  } else if (opt.format == "graph6") {
    format = InputFormat::Graph6;
  } else if (opt.format == "metric") {
    format = InputFormat::Metric;
  } else {
    format = InputFormat::Sequence;
  }
  std::vector<Instance> out;
  switch (format) {
    case InputFormat::EdgeList:
      if (ambiguous) {
        log.warn("header holds a single count followed by edge rows; reading input as an edge list");
        out.push_back({parse_edge_list_without_count(text), std::nullopt});
      } else {
        out.push_back({parse_edge_list(text), std::nullopt});
      }
      break;
    case InputFormat::Graph6:
      for (auto& g : parse_graph6_lines(text)) out.push_back({std::move(g), std::nullopt});
      break;
    case InputFormat::Metric:
      out.push_back({std::nullopt, parse_metric(text)});
      break;
    case InputFormat::Sequence:
      out.push_back({build_from_sequence(parse_sequence(text)), std::nullopt});
      break;
  }
  log.debug("loaded {} instance(s)", out.size());
  return out;
}

const Graph& require_graph(const Instance& inst, const char* command) {
  if (!inst.graph) throw InputError(std::string(command) + " needs a graph, not a metric");
  return *inst.graph;
}

FiniteMetric metric_of(const Instance& inst) { return inst.metric ? *inst.metric : all_pairs_distances(*inst.graph); }

std::string output_mode(const Options& opt, const char* fallback) { return opt.output.empty() ? fallback : opt.output; }

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

int cmd_lines(const Options& opt, std::istream& in, std::ostream& out, spdlog::logger& log) {
  const bool pretty = output_mode(opt, "json") == "pretty";
  for (const auto& inst : load_instances(opt, in, log)) {
    const auto lines = all_lines(metric_of(inst));
    if (!pretty) {
      out << to_json(lines).dump() << '\n';
      continue;
    }
    out << lines.distinct_lines() << " distinct lines on " << lines.points() << " points"
        << (lines.has_universal() ? ", universal line present" : "") << '\n';
    for (const auto& l : lines.lines()) out << "  {" << join(l) << "}\n";
  }
  return kSuccess;
}

int cmd_check(const Options& opt, std::istream& in, std::ostream& out, spdlog::logger& log) {
  const bool pretty = output_mode(opt, "json") == "pretty";
  int code = kSuccess;
  for (const auto& inst : load_instances(opt, in, log)) {
    Verdict v;
    std::optional<bool> dh;
    if (inst.graph) {
      v = check_chen_chvatal(all_pairs_distances(*inst.graph), "g6:" + to_graph6(*inst.graph));
      if (!v.satisfies) v.witness = v.instance;
      dh = is_distance_hereditary(*inst.graph);
    } else {
      v = check_chen_chvatal(*inst.metric);
    }
    if (!v.satisfies) code = kViolation;
    if (pretty) {
      out << v.instance << ": " << v.distinct_lines << " distinct lines on " << v.n << " points, "
          << (v.has_universal ? "universal line present" : "no universal line") << " -> "
          << (v.satisfies ? "holds" : "VIOLATED") << '\n';
      continue;
    }
    auto j = to_json(v);
    if (dh) j["distance_hereditary"] = *dh;
    out << j.dump() << '\n';
  }
  if (code == kViolation) log.error("found a metric with fewer than n lines and no universal line");
  return code;
}

int cmd_recognize(const Options& opt, std::istream& in, std::ostream& out, spdlog::logger& log) {
  const bool pretty = output_mode(opt, "json") == "pretty";
  int code = kSuccess;
  for (const auto& inst : load_instances(opt, in, log)) {
    const auto result = recognize_pruning(require_graph(inst, "recognize"));
    if (!result.accepted()) code = kViolation;
    if (!pretty) {
      out << to_json(result).dump() << '\n';
    } else if (result.accepted()) {
      out << format_sequence(result.certificate->sequence, &result.certificate->labels);
    } else {
      out << "not distance-hereditary: no pendant vertex or twins in residual {" << join(result.witness->residual)
          << "}\n";
    }
  }
  return code;
}

int cmd_lemmas(const Options& opt, std::istream& in, std::ostream& out, spdlog::logger& log) {
  const bool pretty = output_mode(opt, "json") == "pretty";
  int code = kSuccess;
  for (const auto& inst : load_instances(opt, in, log)) {
    const auto& g = require_graph(inst, "lemmas");
    const auto triangle = verify_lemma_triangle(g);
    const auto xaxb = verify_lemma_xaxb(g);
    if (!triangle.holds || !xaxb.holds) code = kViolation;
    if (pretty) {
      out << "triangle lemma: " << (triangle.holds ? "holds" : "VIOLATED") << "\nxaxb lemma: "
          << (xaxb.holds ? "holds" : "VIOLATED") << '\n';
    } else {
      out << to_json(triangle, xaxb).dump() << '\n';
    }
  }
  return code;
}

StepWeights weights_of(const Options& opt) {
  if (opt.weights.size() != 3) throw InputError("--weights takes three values P,F,T");
  return {opt.weights[0], opt.weights[1], opt.weights[2]};
}

int cmd_generate(const Options& opt, std::ostream& out) {
  if (opt.family == "multipartite") {
    const auto g = complete_multipartite(opt.parts);
    if (opt.emit == "sequence") {
      const auto cert = recognize_pruning(g).certificate;
      out << format_sequence(cert->sequence, &cert->labels);
    } else {
      out << (opt.emit == "graph6" ? to_graph6(g) + "\n" : format_edge_list(g));
    }
    return kSuccess;
  }
  const auto seq = random_dh_sequence(opt.n, opt.seed, weights_of(opt));
  if (opt.emit == "sequence") {
    out << format_sequence(seq);
  } else {
    const auto g = build_from_sequence(seq);
    out << (opt.emit == "graph6" ? to_graph6(g) + "\n" : format_edge_list(g));
  }
  return kSuccess;
}

void print_report(const SweepReport& report, const std::string& mode, bool timing, std::ostream& out) {
  if (mode == "csv") {
    out << to_csv(report);
  } else if (mode == "pretty") {
    out << report.property << " over " << describe(report.corpus) << ": " << report.instances << " checked of "
        << report.scanned << " scanned, " << report.violations.size() << " violation(s)\n";
    for (const auto& r : report.records) {
      out << "  n=" << r.n << ": " << r.instances << " instances, min lines without universal line: "
          << (r.min_lines_non_universal ? std::to_string(*r.min_lines_non_universal) : "-") << '\n';
    }
    for (const auto& v : report.violations) out << "  VIOLATION " << v.instance << '\n';
    if (timing) out << "  " << report.duration.count() << " ms\n";
  } else {
    out << to_json(report, timing).dump(2) << '\n';
  }
}

int cmd_sweep(const Options& opt, std::ostream& out, spdlog::logger& log) {
  const SweepOptions sweep{opt.jobs};
  GraphCorpus corpus;
  if (opt.random) {
    RandomCorpus r;
    r.count = opt.count;
    r.seed = opt.seed;
    r.n_min = opt.n_min < 0 ? 2 : opt.n_min;
    r.n_max = opt.n_max < 0 ? 30 : opt.n_max;
    r.weights = weights_of(opt);
    corpus = r;
  } else {
    corpus = ExhaustiveCorpus{opt.n_max < 0 ? ExhaustiveCorpus::kMaxExhaustiveDefault : opt.n_max, opt.canonical};
  }
  const auto mode = output_mode(opt, "json");
  log.info("sweeping {}", describe(std::visit([](const auto& c) -> CorpusSpec { return c; }, corpus)));

  if (opt.lemmas) {
    const auto report = opt.reference ? serial::sweep_lemmas(corpus) : sweep_lemmas(corpus, sweep);
    if (mode == "pretty") {
      out << "lemmas over " << describe(report.corpus) << ": " << report.instances << " checked, "
          << report.failures.size() << " failure(s)\n";
    } else {
      out << to_json(report, opt.timing).dump(2) << '\n';
    }
    return report.failures.empty() ? kSuccess : kViolation;
  }

  SweepReport report;
  if (opt.conjecture) {
    const auto* ex = std::get_if<ExhaustiveCorpus>(&corpus);
    if (ex == nullptr) throw InputError("--conjecture needs the exhaustive corpus");
    report = opt.reference ? serial::sweep_conjecture(*ex) : sweep_conjecture(*ex, sweep);
  } else {
    report = opt.reference ? serial::sweep_theorem(corpus) : sweep_theorem(corpus, sweep);
  }
  print_report(report, mode, opt.timing, out);
  if (!report.violations.empty()) {
    log.error("{} counterexample(s) found", report.violations.size());
    return kViolation;
  }
  return kSuccess;
}

int cmd_two_metric(const Options& opt, std::ostream& out) {
  const TwoMetricCorpus corpus{opt.n_min < 0 ? 2 : opt.n_min, opt.n_max < 0 ? kMaxTwoMetricOrder : opt.n_max};
  const auto report = opt.reference ? serial::sweep_two_metric(corpus) : sweep_two_metric(corpus, SweepOptions{opt.jobs});
  print_report(report, output_mode(opt, "json"), opt.timing, out);
  return report.violations.empty() ? kSuccess : kViolation;
}

int cmd_scaling(const Options& opt, std::ostream& out) {
  const auto rows = scaling_experiment(opt.sides, opt.jobs);
  const auto mode = output_mode(opt, "csv");
  if (mode == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"side", r.side}, {"n", r.n}, {"distinct_lines", r.distinct_lines}, {"has_universal", r.has_universal},
                     {"n_4_3", r.n_4_3}, {"ratio", r.ratio}});
    }
    out << arr.dump(2) << '\n';
  } else if (mode == "pretty") {
    for (const auto& r : rows) {
      out << "s=" << r.side << " n=" << r.n << ": " << r.distinct_lines << " lines, ratio " << r.ratio << '\n';
    }
  } else {
    out << to_csv(rows);
  }
  return kSuccess;
}

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("input", opt.input, "Input file (default: stdin)");
  cmd->add_option("--format", opt.format, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6", "metric", "sequence"}));
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_option("--output", opt.output, "Output style")->check(CLI::IsMember({"pretty", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  spdlog::logger log("metric-lines", sink);
  log.set_pattern("metric-lines: %l: %v");
  log.set_level(log_level_from_env());

  Options opt;
  CLI::App app{"Lines in graph metrics and distance-hereditary graphs", "metric-lines"};
  app.require_subcommand(1);

  auto* lines = app.add_subcommand("lines", "Distinct lines of a graph or metric");
  auto* check = app.add_subcommand("check", "At least n lines or a universal line?");
  auto* recognize = app.add_subcommand("recognize", "Distance-hereditary recognition by pruning");
  auto* lemmas = app.add_subcommand("lemmas", "Check the triangle and xaxb lemmas on a distance-hereditary graph");
  for (auto* cmd : {lines, check, recognize, lemmas}) {
    add_input(cmd, opt);
    add_output(cmd, opt);
  }

  auto* generate = app.add_subcommand("generate", "Emit a random distance-hereditary or complete multipartite graph");
  generate->add_option("--family", opt.family)->check(CLI::IsMember({"random-dh", "multipartite"}));
  generate->add_option("--n", opt.n, "Vertex count for random-dh");
  generate->add_option("--seed", opt.seed);
  generate->add_option("--weights", opt.weights, "Step weights P,F,T")->delimiter(',')->expected(3);
  generate->add_option("--parts", opt.parts, "Part sizes for multipartite")->delimiter(',');
  generate->add_option("--emit", opt.emit)->check(CLI::IsMember({"edgelist", "graph6", "sequence"}));

  auto* sweep = app.add_subcommand("sweep", "Check the main theorem over a corpus");
  sweep->add_flag("--exhaustive", "All connected labeled graphs up to --n-max (default)");
  sweep->add_flag("--random", opt.random, "Random distance-hereditary graphs");
  sweep->add_option("--n-min", opt.n_min);
  sweep->add_option("--n-max", opt.n_max);
  sweep->add_option("--count", opt.count);
  sweep->add_option("--seed", opt.seed);
  sweep->add_option("--weights", opt.weights)->delimiter(',')->expected(3);
  sweep->add_flag("--canonical", opt.canonical, "One graph per isomorphism class");
  sweep->add_flag("--conjecture", opt.conjecture, "Every connected graph, no distance-hereditary filter");
  sweep->add_flag("--lemmas", opt.lemmas, "Check the two lemmas instead");

  auto* two = app.add_subcommand("two-metric", "Check every {1,2}-valued metric");
  two->add_option("--n-min", opt.n_min);
  two->add_option("--n-max", opt.n_max);

  auto* scaling = app.add_subcommand("scaling", "Line counts of complete multipartite graphs with s^2 parts of size s");
  scaling->add_option("--sides", opt.sides)->delimiter(',');

  for (auto* cmd : {sweep, two, scaling}) {
    add_output(cmd, opt);
    cmd->add_option("--jobs", opt.jobs, "Worker threads (default: available parallelism)");
  }
  for (auto* cmd : {sweep, two}) {
    cmd->add_flag("--timing", opt.timing, "Include wall-clock duration");
    cmd->add_flag("--reference", opt.reference, "Use the single-threaded reference kernel");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (lines->parsed()) return cmd_lines(opt, in, out, log);
    if (check->parsed()) return cmd_check(opt, in, out, log);
    if (recognize->parsed()) return cmd_recognize(opt, in, out, log);
    if (lemmas->parsed()) return cmd_lemmas(opt, in, out, log);
    if (generate->parsed()) return cmd_generate(opt, out);
    if (sweep->parsed()) return cmd_sweep(opt, out, log);
    if (two->parsed()) return cmd_two_metric(opt, out);
    if (scaling->parsed()) return cmd_scaling(opt, out);
  } catch (const ParseError& e) {
    err << "metric-lines: input:" << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "metric-lines: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "metric-lines: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace metric_lines::cli
