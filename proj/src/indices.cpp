#include "randic/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace randic {
namespace {

std::int64_t checked_power(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw std::overflow_error("index exceeds int64 range");
  }
  return out;
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value)) throw std::invalid_argument("alpha must be finite");
  if (value == 0.0) throw std::invalid_argument("alpha must be nonzero");
}

std::optional<int> Alpha::as_positive_integer() const {
  if (value_ >= 1.0 && value_ <= 64.0 && std::floor(value_) == value_) return static_cast<int>(value_);
  return std::nullopt;
}

double degree_power(int degree, Alpha alpha) {
  if (degree == 0) {
    if (alpha.positive()) return 0.0;
    throw std::domain_error("0^alpha is undefined for alpha < 0 (isolated vertex)");
  }
  if (auto whole = alpha.as_positive_integer()) {
    try {
      return static_cast<double>(checked_power(degree, *whole));
    } catch (const std::overflow_error&) {
      // falls through to the floating path
    }
  }
  return std::pow(static_cast<double>(degree), alpha.value());
}

std::int64_t zeroth_order_randic_exact(const Graph& g, int exponent) {
  if (exponent < 1) throw std::invalid_argument("exact path needs a whole exponent >= 1");
  std::int64_t total = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (__builtin_add_overflow(total, checked_power(g.degree(v), exponent), &total)) {
      throw std::overflow_error("index exceeds int64 range");
    }
  }
  return total;
}

double zeroth_order_randic(const Graph& g, Alpha alpha) {
  if (auto whole = alpha.as_positive_integer()) {
    try {
      return static_cast<double>(zeroth_order_randic_exact(g, *whole));
    } catch (const std::overflow_error&) {
      // falls through to the floating path
    }
  }
  double total = 0.0;
  for (int v = 0; v < g.order(); ++v) total += degree_power(g.degree(v), alpha);
  return total;
}

double index_delta_for_edge(const Graph& g, int u, int v, Alpha alpha) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (g.adjacent(u, v)) throw std::invalid_argument("pair is already an edge");
  const int du = g.degree(u);
  const int dv = g.degree(v);
  return degree_power(du + 1, alpha) + degree_power(dv + 1, alpha) - degree_power(du, alpha) -
         degree_power(dv, alpha);
}

bool approx_equal(double a, double b, double rel) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel * scale;
}

bool approx_at_least(double a, double b, double rel) {
  return a >= b || approx_equal(a, b, rel);
}

}  // namespace randic
