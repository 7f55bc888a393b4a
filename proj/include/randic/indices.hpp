#pragma once

#include <cstdint>
#include <optional>

#include "randic/graph.hpp"

namespace randic {

/// Real exponent of the zeroth-order general Randić index. Zero and
/// non-finite values are rejected with std::invalid_argument.
class Alpha {
 public:
  explicit Alpha(double value);

  double value() const { return value_; }
  bool positive() const { return value_ > 0; }

  /// The exponent as an int when it is a whole number >= 1.
  std::optional<int> as_positive_integer() const;

 private:
  double value_;
};

/// d^alpha with 0^alpha = 0 for alpha > 0. Throws std::domain_error for
/// d = 0 and alpha < 0.
double degree_power(int degree, Alpha alpha);

/// Sum over vertices of degree^alpha.
///
/// Whole exponents >= 1 go through the exact integer path below, so results
/// at alpha = 1, 2, 3 are exact. Throws std::domain_error when alpha < 0 and
/// the graph has an isolated vertex.
double zeroth_order_randic(const Graph& g, Alpha alpha);

/// Exact integer evaluation for a whole exponent >= 1. Throws
/// std::overflow_error if the sum leaves int64 range.
std::int64_t zeroth_order_randic_exact(const Graph& g, int exponent);

/// Change of the index when the non-edge uv is added. Throws
/// std::invalid_argument if u == v or uv is already an edge.
double index_delta_for_edge(const Graph& g, int u, int v, Alpha alpha);

inline constexpr double kRelativeTolerance = 1e-9;

/// |a - b| <= rel * max(|a|, |b|, 1).
bool approx_equal(double a, double b, double rel = kRelativeTolerance);

/// a >= b up to the relative tolerance.
bool approx_at_least(double a, double b, double rel = kRelativeTolerance);

}  // namespace randic
