#include "randic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace randic {
namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(order) +
                                " outside [0, 64]");
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
}

// Packs the bits of `mask` selected by `keep` into the low positions.
VertexMask compress(VertexMask mask, VertexMask keep) {
  VertexMask out = 0;
  int pos = 0;
  while (keep != 0) {
    const int v = std::countr_zero(keep);
    keep &= keep - 1;
    if ((mask >> v) & 1U) out |= vertex_bit(pos);
    ++pos;
  }
  return out;
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexMask all = first_vertices(n);
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~all) != 0) throw std::invalid_argument("adjacency row out of range");
    if ((rows[v] >> v) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    VertexMask rest = rows[v];
    while (rest != 0) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (!((rows[u] >> v) & 1U)) throw std::invalid_argument("asymmetric adjacency");
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  check_order(order);
  std::vector<VertexMask> rows(static_cast<std::size_t>(order), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows[u] |= vertex_bit(v);
    rows[v] |= vertex_bit(u);
  }
  return from_rows(std::move(rows));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) out[v] = std::popcount(rows_[v]);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : rows_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (VertexMask row : rows_) best = std::min(best, std::popcount(row));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    VertexMask later = rows_[u] & ~first_vertices(u + 1);
    while (later != 0) {
      out.emplace_back(u, std::countr_zero(later));
      later &= later - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    VertexMask later = ~rows_[u] & vertices() & ~first_vertices(u + 1);
    while (later != 0) {
      out.emplace_back(u, std::countr_zero(later));
      later &= later - 1;
    }
  }
  return out;
}

bool Bipartition::is_valid_for(const Graph& g) const {
  if ((x & y) != 0 || (x | y) != g.vertices()) return false;
  for (int v = 0; v < g.order(); ++v) {
    const VertexMask side = (x >> v) & 1U ? x : y;
    if ((g.neighbors(v) & side) != 0) return false;
  }
  return true;
}

Graph empty_graph(int order) { return Graph(order); }

Graph complete(int order) {
  check_order(order);
  std::vector<VertexMask> rows(static_cast<std::size_t>(order));
  const VertexMask all = first_vertices(order);
  for (int v = 0; v < order; ++v) rows[v] = all & ~vertex_bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph cycle(int order) {
  if (order < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < order; ++v) edges.emplace_back(v, (v + 1) % order);
  return Graph::from_edges(order, edges);
}

Graph path(int order) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(order, edges);
}

BipartiteGraph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
  check_order(a + b);
  const VertexMask x = first_vertices(a);
  const VertexMask y = first_vertices(a + b) & ~x;
  std::vector<VertexMask> rows(static_cast<std::size_t>(a + b));
  for (int v = 0; v < a + b; ++v) rows[v] = v < a ? y : x;
  return {Graph::from_rows(std::move(rows)), Bipartition{x, y}};
}

Graph graph_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  check_order(shift + h.order());
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  for (VertexMask row : h.rows()) rows.push_back(row << shift);
  return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  const int total = shift + h.order();
  check_order(total);
  const VertexMask low = first_vertices(shift);
  const VertexMask high = first_vertices(total) & ~low;
  std::vector<VertexMask> rows;
  rows.reserve(static_cast<std::size_t>(total));
  for (VertexMask row : g.rows()) rows.push_back(row | high);
  for (VertexMask row : h.rows()) rows.push_back((row << shift) | low);
  return Graph::from_rows(std::move(rows));
}

Graph complement(const Graph& g) {
  std::vector<VertexMask> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rows[v] = ~g.neighbors(v) & g.vertices() & ~vertex_bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph delete_biclique(const Graph& g, VertexMask s, VertexMask t) {
  if ((s & t) != 0) throw std::invalid_argument("biclique sides must be disjoint");
  if (((s | t) & ~g.vertices()) != 0) throw std::invalid_argument("biclique side outside the graph");
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  for (int v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1U) rows[v] &= ~t;
    if ((t >> v) & 1U) rows[v] &= ~s;
  }
  return Graph::from_rows(std::move(rows));
}

Graph delete_vertices(const Graph& g, VertexMask removed) {
  const VertexMask keep = g.vertices() & ~removed;
  std::vector<VertexMask> rows;
  rows.reserve(static_cast<std::size_t>(std::popcount(keep)));
  VertexMask rest = keep;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    rows.push_back(compress(g.neighbors(v), keep));
  }
  return Graph::from_rows(std::move(rows));
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw std::invalid_argument("cannot add a loop");
  if (g.adjacent(u, v)) throw std::invalid_argument("edge already present");
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  rows[u] |= vertex_bit(v);
  rows[v] |= vertex_bit(u);
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  VertexMask seen = 0;
  for (int image : perm) {
    if (image < 0 || image >= n || ((seen >> image) & 1U)) throw std::invalid_argument("not a permutation");
    seen |= vertex_bit(image);
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    VertexMask rest = g.neighbors(v);
    while (rest != 0) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      rows[perm[v]] |= vertex_bit(perm[u]);
    }
  }
  return Graph::from_rows(std::move(rows));
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexMask seen = vertex_bit(0);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  Bipartition parts;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    const int root = std::countr_zero(unseen);
    VertexMask frontier = vertex_bit(root);
    bool on_x = true;
    while (frontier != 0) {
      (on_x ? parts.x : parts.y) |= frontier;
      unseen &= ~frontier;
      VertexMask next = 0;
      VertexMask rest = frontier;
      while (rest != 0) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= g.neighbors(v);
      }
      frontier = next & unseen;
      on_x = !on_x;
    }
  }
  if (!parts.is_valid_for(g)) return std::nullopt;
  return parts;
}

}  // namespace randic
