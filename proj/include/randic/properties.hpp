#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "randic/graph.hpp"

namespace randic {

namespace property {
struct PerfectMatching {
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};
struct Extendable {
  int k = 0;
  friend bool operator==(const Extendable&, const Extendable&) = default;
};
/// k-extendability of a balanced bipartite graph, with maximality taken over
/// cross non-edges only.
struct BipExtendable {
  int k = 0;
  friend bool operator==(const BipExtendable&, const BipExtendable&) = default;
};
struct FactorCritical {
  int k = 0;
  friend bool operator==(const FactorCritical&, const FactorCritical&) = default;
};
/// (n, k, d)-graph: after deleting any n vertices a k-matching exists and
/// every k-matching extends to a d-deficient matching.
struct NKD {
  int n = 0;
  int k = 0;
  int d = 0;
  friend bool operator==(const NKD&, const NKD&) = default;
};
}  // namespace property

using PropertyKind = std::variant<property::PerfectMatching, property::Extendable, property::BipExtendable,
                                  property::FactorCritical, property::NKD>;

/// Parses pm | ext:K | bipext:K | fc:K | nkd:N,K,D. Throws std::invalid_argument.
PropertyKind parse_property(std::string_view text);
std::string to_string(const PropertyKind& prop);

bool has_perfect_matching(const Graph& g);

/// Connected, has a perfect matching, and every k-matching lies in a perfect
/// matching. Disconnected graphs give false.
bool is_k_extendable(const Graph& g, int k);

/// Every k-subset S leaves g - S with a perfect matching. False when k > p or
/// p - k is odd; k = 0 is plain perfect-matching existence.
bool is_k_factor_critical(const Graph& g, int k);

/// False unless p >= n + 2k + d + 2, p - n - d is even and g is connected.
bool is_nkd_graph(const Graph& g, int n, int k, int d);

/// Dispatches on `prop`. BipExtendable needs `parts`: the graph must be
/// balanced bipartite with respect to it and k-extendable.
bool has_property(const Graph& g, const PropertyKind& prop, const std::optional<Bipartition>& parts = std::nullopt);

/// g lacks `prop` and every admissible single-edge addition creates it.
/// Admissible means any non-edge, or any cross non-edge X×Y for
/// BipExtendable, which throws std::invalid_argument without `parts`.
bool is_maximal_non_property(const Graph& g, const PropertyKind& prop,
                             const std::optional<Bipartition>& parts = std::nullopt);

}  // namespace randic
