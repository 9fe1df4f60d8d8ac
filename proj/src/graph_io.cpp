#include "metric_lines/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace metric_lines {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct TextLine {
  int number;  // 1-based
  std::vector<Token> tokens;
};

/// Non-empty lines after stripping '#' comments, split on whitespace.
std::vector<TextLine> tokenize(std::string_view text) {
  std::vector<TextLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    TextLine tl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tl.tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    pos = eol + 1;
  }
  return out;
}

bool is_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

long long to_integer(const TextLine& line, const Token& tok, const char* what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (!is_integer(tok.text) || ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(std::string("expected ") + what + ", found '" + std::string(tok.text) + "'", line.number, tok.column);
  }
  return v;
}

void expect_tokens(const TextLine& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    const int column = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
    throw ParseError(std::string("expected ") + what, line.number, column);
  }
}

bool graph6_char(char c) { return c >= 63 && c <= 126; }

Graph edges_from_lines(int n, const std::vector<TextLine>& lines, std::size_t first) {
  std::vector<Edge> edges;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& line = lines[i];
    expect_tokens(line, 2, "an edge 'u v'");
    Vertex ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto& tok = line.tokens[static_cast<std::size_t>(k)];
      const long long v = to_integer(line, tok, "a vertex index");
      if (v >= n) {
        throw ParseError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")", line.number,
                         tok.column);
      }
      ends[k] = static_cast<Vertex>(v);
    }
    if (ends[0] == ends[1]) throw ParseError("self-loop at vertex " + std::to_string(ends[0]), line.number, line.tokens[0].column);
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph::from_edge_list(n, edges);
}

int parse_order(const TextLine& line, const Token& tok) {
  const long long n = to_integer(line, tok, "a vertex count");
  if (n < 1 || n > 1'000'000) throw ParseError("vertex count out of range", line.number, tok.column);
  return static_cast<int>(n);
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input, expected header 'n m'", 1, 1);
  const auto& header = lines.front();
  expect_tokens(header, 2, "header 'n m'");
  const int n = parse_order(header, header.tokens[0]);
  const long long m = to_integer(header, header.tokens[1], "an edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int line = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[static_cast<std::size_t>(m) + 1].number
                                                                    : lines.back().number + 1;
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1), line, 1);
  }
  return edges_from_lines(n, lines, 1);
}

Graph parse_edge_list_without_count(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input, expected header 'n'", 1, 1);
  expect_tokens(lines.front(), 1, "header 'n'");
  return edges_from_lines(parse_order(lines.front(), lines.front().tokens[0]), lines, 1);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (!graph6_char(line[i])) throw ParseError("invalid graph6 character", 1, static_cast<int>(i) + 1);
  }
  if (line.empty()) throw ParseError("empty graph6 string", 1, 1);
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= line.size()) throw ParseError("truncated graph6 size field", 1, static_cast<int>(pos) + 1);
      v = (v << 6) | (line[pos++] - 63);
    }
    return v;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n < 1) throw ParseError("graph6 graph has no vertices", 1, 1);
  if (n > 100'000) throw ParseError("graph6 graph too large", 1, 1);
  const long long bits = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " characters, expected " +
                         std::to_string(expected),
                     1, static_cast<int>(pos) + 1);
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int byte = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      byte = (byte << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(byte + 63));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((byte << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(' ') + 1), number, e.column());
    }
  }
  if (out.empty()) throw ParseError("no graph6 strings in input", 1, 1);
  return out;
}

std::vector<std::vector<Rational>> parse_rational_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input, expected point count", 1, 1);
  expect_tokens(lines.front(), 1, "a single point count");
  const int n = parse_order(lines.front(), lines.front().tokens[0]);
  if (static_cast<int>(lines.size()) - 1 != n) {
    const int line = static_cast<int>(lines.size()) > n + 1 ? lines[static_cast<std::size_t>(n) + 1].number
                                                            : lines.back().number + 1;
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1), line, 1);
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    expect_tokens(line, static_cast<std::size_t>(n), "one entry per point");
    std::vector<Rational> row;
    for (const auto& tok : line.tokens) {
      try {
        row.push_back(Rational::parse(tok.text));
      } catch (const InputError& e) {
        throw ParseError(e.what(), line.number, tok.column);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FiniteMetric parse_metric(std::string_view text) { return integralize_rational(parse_rational_matrix(text)).metric; }

std::string format_metric(const FiniteMetric& m) {
  std::ostringstream os;
  os << m.size() << '\n';
  for (Vertex u = 0; u < m.size(); ++u) {
    for (Vertex v = 0; v < m.size(); ++v) os << (v ? " " : "") << m(u, v);
    os << '\n';
  }
  return os.str();
}

ConstructionSequence parse_sequence(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input, expected 'dh-seq v1 n=<count>'", 1, 1);
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0].text != "dh-seq" || header.tokens[1].text != "v1" ||
      header.tokens[2].text.substr(0, 2) != "n=") {
    throw ParseError("expected header 'dh-seq v1 n=<count>'", header.number, header.tokens[0].column);
  }
  const Token count_tok{header.tokens[2].text.substr(2), header.tokens[2].column + 2};
  const int n = parse_order(header, count_tok);
  ConstructionSequence seq;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    expect_tokens(line, 3, "a step 'P|F|T new anchor'");
    const auto kind = line.tokens[0].text;
    StepKind k;
    if (kind == "P") {
      k = StepKind::Pendant;
    } else if (kind == "F") {
      k = StepKind::FalseTwin;
    } else if (kind == "T") {
      k = StepKind::TrueTwin;
    } else {
      throw ParseError("step kind must be P, F or T", line.number, line.tokens[0].column);
    }
    const auto nv = to_integer(line, line.tokens[1], "a vertex index");
    const auto an = to_integer(line, line.tokens[2], "a vertex index");
    if (nv >= n || an >= n) throw ParseError("vertex index beyond n", line.number, line.tokens[1].column);
    seq.steps.push_back({k, static_cast<Vertex>(nv), static_cast<Vertex>(an)});
  }
  if (seq.order() != n) {
    throw ParseError("header announces n=" + std::to_string(n) + " but " + std::to_string(seq.steps.size()) +
                         " steps build " + std::to_string(seq.order()) + " vertices",
                     header.number, count_tok.column);
  }
  return seq;
}

std::string format_sequence(const ConstructionSequence& seq, const std::vector<Vertex>* labels) {
  std::ostringstream os;
  os << "dh-seq v1 n=" << seq.order() << '\n';
  if (labels != nullptr) {
    os << "# labels";
    for (Vertex v : *labels) os << ' ' << v;
    os << '\n';
  }
  for (const auto& step : seq.steps) {
    const char kind = step.kind == StepKind::Pendant ? 'P' : step.kind == StepKind::FalseTwin ? 'F' : 'T';
    os << kind << ' ' << step.new_vertex << ' ' << step.anchor << '\n';
  }
  return os.str();
}

DetectedFormat detect_format(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const auto& first = lines.front();
  if (first.tokens[0].text == "dh-seq") return {InputFormat::Sequence};
  const bool all_int = std::all_of(first.tokens.begin(), first.tokens.end(), [](const Token& t) { return is_integer(t.text); });
  if (all_int && first.tokens.size() == 2) return {InputFormat::EdgeList};
  if (all_int && first.tokens.size() == 1) {
    const bool edge_rows = lines.size() > 1 && lines[1].tokens.size() == 2;
    if (edge_rows && first.tokens[0].text != "2") return {InputFormat::EdgeList, true};
    return {InputFormat::Metric};
  }
  if (first.tokens.size() == 1 &&
      std::all_of(first.tokens[0].text.begin(), first.tokens[0].text.end(), graph6_char)) {
    return {InputFormat::Graph6};
  }
  if (first.tokens[0].text.substr(0, 10) == ">>graph6<<") return {InputFormat::Graph6};
  throw ParseError("unrecognized input format", first.number, first.tokens[0].column);
}

}  // namespace metric_lines
