#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "randic/graph.hpp"
#include "randic/properties.hpp"
#include "randic/theorem.hpp"

namespace randic {

namespace family {
/// K_{n,n} minus every edge between the first `s` X-vertices and the first
/// `t_size` Y-vertices. X = {0..n-1}, Y = {n..2n-1}.
struct BipartiteDeleted {
  int n = 0;
  int s = 0;
  int t_size = 0;
  friend bool operator==(const BipartiteDeleted&, const BipartiteDeleted&) = default;
};
/// K_q joined with the disjoint union of cliques K_{2t_i+1}. Labelling puts
/// the hub block first, then the cliques in the order of `t`.
struct HubJoinOddCliques {
  int q = 0;
  std::vector<int> t;
  friend bool operator==(const HubJoinOddCliques&, const HubJoinOddCliques&) = default;
};
}  // namespace family

using ExtremalSpec = std::variant<family::BipartiteDeleted, family::HubJoinOddCliques>;

std::string to_string(const ExtremalSpec& spec);

struct ExtremalGraph {
  Graph graph;
  std::optional<Bipartition> parts;  // set for BipartiteDeleted
};

/// Realises `spec`. Hub-join clique sizes are first sorted non-increasing.
/// Throws std::invalid_argument on out-of-range parameters.
ExtremalGraph build_extremal(const ExtremalSpec& spec);

/// Every member of the maximal-non-P family of order `p`: each hub size s in
/// range and each ordered composition of the clique half-sizes. For
/// BipExtendable, p = 2n and one spec per admissible |S|. Throws
/// std::invalid_argument if p violates the family's order or parity
/// hypotheses.
std::vector<ExtremalSpec> enumerate_family(const PropertyKind& prop, int p);

/// Same family with compositions collapsed to non-increasing tuples, i.e.
/// one spec per distinct multiset of clique sizes.
std::vector<ExtremalSpec> enumerate_family_classes(const PropertyKind& prop, int p);

/// The exceptional graphs named in the theorem's "unless" clause.
std::vector<ExtremalSpec> exceptional_specs(const TheoremId& t);
std::vector<ExtremalGraph> exceptional_graphs(const TheoremId& t);

/// Outcome of maximising sum g(n_i) over compositions of `total` into `parts`.
struct Composition {
  std::vector<int> parts;
  double value = 0.0;
};

/// Adjustment method: start from the most balanced composition and keep
/// moving one unit from the smallest positive part onto the largest while the
/// objective strictly grows. For strictly convex g the result is
/// (total, 0, ..., 0). Requires parts >= 2 and total > 0.
Composition adjust_maximize(const std::function<double(int)>& g, int parts, int total);

/// Exhaustive maximum over every ordered composition; the first maximiser in
/// lexicographically decreasing order is returned.
Composition brute_force_maximize(const std::function<double(int)>& g, int parts, int total);

/// Visits every composition of `total` into `parts` non-negative parts in
/// lexicographically decreasing order.
void for_each_composition(int parts, int total, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace randic
