#include "metric_lines/metric.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

constexpr std::size_t kViolationsInMessage = 5;

std::string summarize(const std::vector<MetricViolation>& violations) {
  std::ostringstream os;
  os << "not a metric: " << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < std::min(violations.size(), kViolationsInMessage); ++i) {
    os << "; " << violations[i].describe();
  }
  return os.str();
}

/// Axiom check over any exact entry type. `exceeds(ac, ab, bc)` is true
/// when ac > ab + bc.
template <typename Entry, typename IsZero, typename IsNegative, typename Exceeds, typename TooLarge>
std::vector<MetricViolation> check_axioms(const std::vector<std::vector<Entry>>& rows, IsZero is_zero,
                                          IsNegative is_negative, Exceeds exceeds, TooLarge too_large) {
  std::vector<MetricViolation> out;
  const auto n = static_cast<int>(rows.size());
  if (n < 2) {
    out.push_back({ViolationKind::Shape, n, -1, -1});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      out.push_back({ViolationKind::Shape, i, static_cast<Vertex>(rows[static_cast<std::size_t>(i)].size()), -1});
    }
  }
  if (!out.empty()) return out;

  auto at = [&](int i, int j) -> const Entry& { return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) {
    if (!is_zero(at(i, i))) out.push_back({ViolationKind::Diagonal, i, i, -1});
  }
  bool range_ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (too_large(at(i, j))) {
        out.push_back({ViolationKind::Range, i, j, -1});
        range_ok = false;
      }
      if (i < j && !(at(i, j) == at(j, i))) out.push_back({ViolationKind::Symmetry, i, j, -1});
      if (is_zero(at(i, j)) || is_negative(at(i, j))) out.push_back({ViolationKind::Positivity, i, j, -1});
    }
  }
  if (!range_ok) return out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (exceeds(at(i, k), at(i, j), at(j, k))) out.push_back({ViolationKind::Triangle, i, j, k});
      }
    }
  }
  return out;
}

std::vector<std::vector<Distance>> to_rows(int n, const std::vector<Distance>& entries) {
  std::vector<std::vector<Distance>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto begin = entries.begin() + static_cast<std::ptrdiff_t>(i) * n;
    rows[static_cast<std::size_t>(i)].assign(begin, begin + n);
  }
  return rows;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow while scaling a rational metric");
  return out;
}

}  // namespace

std::string MetricViolation::describe() const {
  const auto pair = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
  switch (kind) {
    case ViolationKind::Shape:
      return j < 0 ? "need at least two points, got " + std::to_string(i)
                   : "row " + std::to_string(i) + " has " + std::to_string(j) + " entries";
    case ViolationKind::Diagonal:
      return "nonzero diagonal at " + pair;
    case ViolationKind::Symmetry:
      return "asymmetric entries at " + pair;
    case ViolationKind::Positivity:
      return "non-positive distance at " + pair;
    case ViolationKind::Range:
      return "distance too large at " + pair;
    case ViolationKind::Triangle:
      return "triangle inequality fails: d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
             std::to_string(i) + "," + std::to_string(j) + ") + d(" + std::to_string(j) + "," +
             std::to_string(k) + ")";
  }
  return "unknown violation";
}

MetricValidation validate_metric(const std::vector<std::vector<Distance>>& rows) {
  MetricValidation out;
  out.violations = check_axioms(
      rows, [](Distance d) { return d == 0; }, [](Distance) { return false; },
      [](Distance ac, Distance ab, Distance bc) { return ac > ab + bc; },
      [](Distance d) { return d > kMaxDistance; });
  if (out.violations.empty()) {
    const auto n = static_cast<int>(rows.size());
    std::vector<Distance> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    out.metric = FiniteMetric(FiniteMetric::Trusted{}, n, std::move(flat));
  }
  return out;
}

FiniteMetric::FiniteMetric(int n, std::vector<Distance> entries) {
  if (n < 2 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InputError("metric needs n >= 2 and n*n entries");
  }
  auto result = validate_metric(to_rows(n, entries));
  if (!result.ok()) throw InputError(summarize(result.violations));
  *this = std::move(*result.metric);
}

Distance FiniteMetric::k() const {
  Distance out = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) out = std::max(out, (*this)(u, v));
  }
  return out;
}

FiniteMetric FiniteMetric::scaled(Distance factor) const {
  if (factor == 0) throw InputError("scale factor must be positive");
  std::vector<Distance> out(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) {
    Distance v = 0;
    if (__builtin_mul_overflow(d_[i], factor, &v) || v > kMaxDistance) {
      throw OverflowError("distance overflow while scaling by " + std::to_string(factor));
    }
    out[i] = v;
  }
  return FiniteMetric(Trusted{}, n_, std::move(out));
}

Rational::Rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw InputError("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const auto g = std::gcd(p, q);
  num = p / g;
  den = q / g;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    if (!part.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc{} || ptr != last || v < 0) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

IntegralizedMetric integralize_rational(const std::vector<std::vector<Rational>>& rows) {
  using Wide = __int128;
  auto violations = check_axioms(
      rows, [](const Rational& r) { return r.num == 0; }, [](const Rational& r) { return r.num < 0; },
      [](const Rational& ac, const Rational& ab, const Rational& bc) {
        // ac > ab + bc  <=>  ac.num*ab.den*bc.den > (ab.num*bc.den + bc.num*ab.den)*ac.den
        const Wide lhs = Wide{ac.num} * ab.den * bc.den;
        const Wide rhs = (Wide{ab.num} * bc.den + Wide{bc.num} * ab.den) * ac.den;
        return lhs > rhs;
      },
      [](const Rational&) { return false; });
  if (!violations.empty()) throw InputError(summarize(violations));

  std::int64_t scale = 1;
  for (const auto& row : rows) {
    for (const auto& r : row) scale = checked_mul(scale / std::gcd(scale, r.den), r.den);
  }
  const auto n = static_cast<int>(rows.size());
  std::vector<Distance> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    for (const auto& r : row) {
      const auto v = checked_mul(r.num, scale / r.den);
      if (static_cast<Distance>(v) > kMaxDistance) throw OverflowError("scaled distance exceeds the supported range");
      flat.push_back(static_cast<Distance>(v));
    }
  }
  return {FiniteMetric(n, std::move(flat)), static_cast<Distance>(scale)};
}

}  // namespace metric_lines
