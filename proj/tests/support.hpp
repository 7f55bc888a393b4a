#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "randic/graph.hpp"
#include "randic/matching.hpp"

namespace randic::testing {

inline Graph random_graph(std::mt19937_64& rng, int p, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(p, edges);
}

inline Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// Tries every permutation. Only for tiny graphs.
inline bool isomorphic_by_permutation(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(g, perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every labelled graph on p vertices, edge subsets in binary order.
template <typename Visit>
void for_each_labelled(int p, Visit visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) pairs.emplace_back(u, v);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) edges.push_back(pairs[e]);
    }
    visit(Graph::from_edges(p, edges));
  }
}

namespace detail {
inline void all_matchings(std::size_t next, std::vector<Edge>& chosen, VertexMask used,
                          std::vector<std::vector<Edge>>& out, const std::vector<std::pair<int, int>>& edges) {
  if (next == edges.size()) {
    out.push_back(chosen);
    return;
  }
  all_matchings(next + 1, chosen, used, out, edges);
  const auto [u, v] = edges[next];
  if (((used >> u) & 1U) || ((used >> v) & 1U)) return;
  chosen.push_back({u, v});
  all_matchings(next + 1, chosen, used | vertex_bit(u) | vertex_bit(v), out, edges);
  chosen.pop_back();
}
}  // namespace detail

// Every matching of g as a sorted edge list. Exponential; tiny graphs only.
inline std::vector<std::vector<Edge>> all_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> chosen;
  detail::all_matchings(0, chosen, 0, out, g.edges());
  return out;
}

}  // namespace randic::testing
