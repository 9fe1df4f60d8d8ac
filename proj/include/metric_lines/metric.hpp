#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metric_lines/graph.hpp"

namespace metric_lines {

using Distance = std::uint64_t;

/// Largest admissible distance. Keeps d(a,b) + d(b,c) inside 64 bits.
inline constexpr Distance kMaxDistance = Distance{1} << 62;

struct MetricValidation;

/// Finite metric space on points 0..n-1 (n >= 2) with positive integral
/// distances. Construction validates every metric axiom.
class FiniteMetric {
 public:
  /// `entries` is the row-major n*n matrix. Throws InputError listing the
  /// first violations when the matrix is not a metric.
  FiniteMetric(int n, std::vector<Distance> entries);

  int size() const { return n_; }

  Distance operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }

  std::span<const Distance> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }

  std::span<const Distance> entries() const { return d_; }

  /// The k of a k-metric space: largest off-diagonal distance.
  Distance k() const;

  /// Every distance multiplied by factor >= 1. Throws OverflowError past kMaxDistance.
  FiniteMetric scaled(Distance factor) const;

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  struct Trusted {};
  FiniteMetric(Trusted, int n, std::vector<Distance> entries) : n_(n), d_(std::move(entries)) {}
  friend FiniteMetric all_pairs_distances(const Graph&);
  friend MetricValidation validate_metric(const std::vector<std::vector<Distance>>&);

  int n_ = 0;
  std::vector<Distance> d_;
};

enum class ViolationKind { Shape, Diagonal, Symmetry, Positivity, Range, Triangle };

struct MetricViolation {
  ViolationKind kind;
  Vertex i = -1;
  Vertex j = -1;
  Vertex k = -1;  // only for Triangle: d(i,k) > d(i,j) + d(j,k)

  std::string describe() const;
  friend bool operator==(const MetricViolation&, const MetricViolation&) = default;
};

struct MetricValidation {
  std::optional<FiniteMetric> metric;
  std::vector<MetricViolation> violations;

  bool ok() const { return metric.has_value(); }
};

/// Checks every axiom and reports every violation, not only the first.
MetricValidation validate_metric(const std::vector<std::vector<Distance>>& rows);

/// Exact rational p/q in lowest terms with q > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q = 1);

  /// Parses "p" or "p/q" with non-negative p. Throws InputError.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct IntegralizedMetric {
  FiniteMetric metric;
  Distance scale;  // lcm of all denominators
};

/// Scales a rational metric by the lcm of its denominators. Betweenness, and
/// therefore every line, is unchanged. Throws InputError on axiom violations
/// and OverflowError when the scaled distances do not fit.
IntegralizedMetric integralize_rational(const std::vector<std::vector<Rational>>& rows);

}  // namespace metric_lines
