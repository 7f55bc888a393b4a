#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "randic/properties.hpp"

namespace randic {

/// Threshold theorems, each with its parameter tuple.
namespace theorem {
/// Balanced bipartite graph on 2n vertices, perfect matching (k = 0).
struct BipExtendK0 {
  int n = 0;
  friend bool operator==(const BipExtendK0&, const BipExtendK0&) = default;
};
/// Balanced bipartite graph on 2n vertices, k-extendable, 1 <= k <= n-1.
struct BipExtend {
  int n = 0;
  int k = 0;
  friend bool operator==(const BipExtend&, const BipExtend&) = default;
};
/// Connected graph with a perfect matching on 2n vertices, k-extendable.
struct ExtendPM {
  int n = 0;
  int k = 0;
  friend bool operator==(const ExtendPM&, const ExtendPM&) = default;
};
/// Connected graph on 2n vertices has a perfect matching.
struct PerfectMatching {
  int n = 0;
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};
/// Connected graph on p vertices is k-factor-critical.
struct FactorCritical {
  int p = 0;
  int k = 0;
  friend bool operator==(const FactorCritical&, const FactorCritical&) = default;
};
/// Connected graph on p vertices is an (n, k, d)-graph.
struct NKD {
  int p = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  friend bool operator==(const NKD&, const NKD&) = default;
};
}  // namespace theorem

using TheoremId = std::variant<theorem::BipExtendK0, theorem::BipExtend, theorem::ExtendPM,
                               theorem::PerfectMatching, theorem::FactorCritical, theorem::NKD>;

/// Vertex count of the graphs the theorem speaks about.
int theorem_order(const TheoremId& t);

/// The property whose presence the theorem guarantees.
PropertyKind theorem_property(const TheoremId& t);

bool is_bipartite_theorem(const TheoremId& t);

/// Order, parity and parameter-range hypotheses. Throws std::invalid_argument
/// naming the violated hypothesis.
void check_hypotheses(const TheoremId& t);

/// For NKD: alpha >= 1, or 0 < alpha < 1 with d <= (2n + 4k)/(1 - alpha) - 1.
/// Every other theorem only needs alpha > 0.
bool alpha_regime_holds(const TheoremId& t, double alpha);

/// Builds a theorem from the CLI grammar (pm | ext:K | bipext:K | fc:K |
/// nkd:N,K,D) and the graph order. Hypotheses are checked.
TheoremId make_theorem(std::string_view name, int order);

/// Inverse of make_theorem's name part, e.g. "ext:1".
std::string theorem_name(const TheoremId& t);

}  // namespace randic
