#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of pairwise vertex-disjoint edges of some host graph. Edges are kept
/// normalised (u < v) and sorted.
class Matching {
 public:
  Matching() = default;

  /// Validates `edges` against `host`; throws std::invalid_argument when a
  /// pair is not an edge of `host` or two edges share a vertex.
  static Matching on(const Graph& host, std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexMask saturated() const { return saturated_; }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  Matching(std::vector<Edge> edges, VertexMask saturated)
      : edges_(std::move(edges)), saturated_(saturated) {}

  friend Matching matching_from_mates(const std::vector<int>& mate);
  friend class KMatchingWalker;

  std::vector<Edge> edges_;
  VertexMask saturated_ = 0;
};

/// Number of vertices a matching leaves unsaturated.
struct Deficiency {
  int value = 0;
  friend auto operator<=>(const Deficiency&, const Deficiency&) = default;
};

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// contraction, O(p^3)).
Matching maximum_matching(const Graph& g);

/// Maximum matching of a bipartite graph by Hopcroft–Karp layered
/// augmentation. Throws std::invalid_argument if `parts` is not a
/// bipartition of `g`.
Matching bipartite_maximum_matching(const Graph& g, const Bipartition& parts);

/// p - 2 * |maximum matching|.
Deficiency min_deficiency(const Graph& g);

/// Exhaustive oracle: best matching size over every matching of `g`,
/// memoised on the set of still-free vertices. Independent of the blossom
/// engine; meant for tests and cross-checks on graphs with p <= 24.
int brute_force_matching_number(const Graph& g);

/// Visits every k-matching exactly once, in lexicographic order of the sorted
/// edge lists. Returning false from `visit` stops the walk. Returns false iff
/// the walk was stopped early.
bool for_each_k_matching(const Graph& g, int k, const std::function<bool(const Matching&)>& visit);

std::vector<Matching> enumerate_k_matchings(const Graph& g, int k);

/// True iff `m` is contained in a matching of `g` with deficiency exactly `d`.
/// Returns false when p - 2|m| - d is negative or odd.
bool extends_to_deficiency(const Graph& g, const Matching& m, int d);

}  // namespace randic
