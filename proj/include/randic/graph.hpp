#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace randic {

/// Bit set over vertex labels; bit v stands for vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask first_vertices(int count) {
  return count >= 64 ? ~VertexMask{0} : (VertexMask{1} << count) - 1;
}

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored as one 64-bit row per vertex, so the order is capped at
/// kMaxVertices. Values are cheap to copy and safe to share between threads.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Builds a graph from adjacency rows, checking symmetry, loops and range.
  static Graph from_rows(std::vector<VertexMask> rows);
  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  VertexMask vertices() const { return first_vertices(order()); }
  std::span<const VertexMask> rows() const { return rows_; }

  std::vector<int> degrees() const;
  int edge_count() const;
  int min_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  /// Non-adjacent pairs (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> non_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<VertexMask> rows_;
};

/// Two-sided vertex split. For a bipartite host no edge stays inside a side.
struct Bipartition {
  VertexMask x = 0;
  VertexMask y = 0;

  bool balanced() const { return std::popcount(x) == std::popcount(y); }
  /// True when (x, y) partitions the vertex set of `g` and every edge crosses.
  bool is_valid_for(const Graph& g) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct BipartiteGraph {
  Graph graph;
  Bipartition parts;
};

Graph empty_graph(int order);
Graph complete(int order);
Graph cycle(int order);
Graph path(int order);

/// K_{a,b} with X = {0..a-1} and Y = {a..a+b-1}.
BipartiteGraph complete_bipartite(int a, int b);

/// Vertices of g first, then vertices of h shifted by g.order().
Graph graph_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Removes every edge with one end in `s` and the other in `t`.
Graph delete_biclique(const Graph& g, VertexMask s, VertexMask t);

/// Induced subgraph on the surviving vertices, relabelled in increasing order.
Graph delete_vertices(const Graph& g, VertexMask removed);

/// Throws std::invalid_argument on a loop or an existing edge.
Graph add_edge(const Graph& g, int u, int v);

/// Vertex `v` of g becomes vertex `perm[v]` of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g);

/// Proper 2-colouring with the lowest vertex of each component placed in X.
std::optional<Bipartition> two_coloring(const Graph& g);

}  // namespace randic
