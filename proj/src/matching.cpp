#include "randic/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace randic {

Matching matching_from_mates(const std::vector<int>& mate);

namespace {

// Edmonds' algorithm with explicit blossom bases; one BFS per free root.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, false),
        in_blossom_(n_, false) {}

  std::vector<int> solve() {
    // Greedy start; augmentation from every remaining free vertex.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      VertexMask free_nbrs = g_.neighbors(v);
      while (free_nbrs != 0) {
        const int u = std::countr_zero(free_nbrs);
        free_nbrs &= free_nbrs - 1;
        if (mate_[u] == -1) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      VertexMask nbrs = g_.neighbors(v);
      while (nbrs != 0) {
        const int to = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

class HopcroftKarp {
 public:
  HopcroftKarp(const Graph& g, VertexMask left)
      : g_(g), left_(left), mate_(g.order(), -1), layer_(g.order(), 0) {}

  std::vector<int> solve() {
    while (build_layers()) {
      VertexMask free_left = left_;
      while (free_left != 0) {
        const int u = std::countr_zero(free_left);
        free_left &= free_left - 1;
        if (mate_[u] == -1) augment(u);
      }
    }
    return mate_;
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  // BFS over alternating paths from the free left vertices; true when some
  // free right vertex is reachable.
  bool build_layers() {
    std::queue<int> queue;
    for (int v = 0; v < g_.order(); ++v) {
      if (!((left_ >> v) & 1U)) continue;
      if (mate_[v] == -1) {
        layer_[v] = 0;
        queue.push(v);
      } else {
        layer_[v] = kUnreached;
      }
    }
    bool reached_free = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      VertexMask nbrs = g_.neighbors(u);
      while (nbrs != 0) {
        const int w = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        const int next = mate_[w];
        if (next == -1) {
          reached_free = true;
        } else if (layer_[next] == kUnreached) {
          layer_[next] = layer_[u] + 1;
          queue.push(next);
        }
      }
    }
    return reached_free;
  }

  bool augment(int u) {
    VertexMask nbrs = g_.neighbors(u);
    while (nbrs != 0) {
      const int w = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      const int next = mate_[w];
      if (next == -1 || (layer_[next] == layer_[u] + 1 && augment(next))) {
        mate_[u] = w;
        mate_[w] = u;
        return true;
      }
    }
    layer_[u] = kUnreached;
    return false;
  }

  const Graph& g_;
  VertexMask left_;
  std::vector<int> mate_;
  std::vector<int> layer_;
};

int best_on(const Graph& g, VertexMask free, std::unordered_map<VertexMask, int>& memo) {
  // Drop vertices with no free neighbour; they cannot be matched.
  VertexMask live = 0;
  VertexMask rest = free;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.neighbors(v) & free) != 0) live |= vertex_bit(v);
  }
  if (live == 0) return 0;
  if (auto it = memo.find(live); it != memo.end()) return it->second;
  const int v = std::countr_zero(live);
  const VertexMask without_v = live & ~vertex_bit(v);
  int best = best_on(g, without_v, memo);
  VertexMask partners = g.neighbors(v) & without_v;
  while (partners != 0) {
    const int u = std::countr_zero(partners);
    partners &= partners - 1;
    best = std::max(best, 1 + best_on(g, without_v & ~vertex_bit(u), memo));
  }
  memo.emplace(live, best);
  return best;
}

}  // namespace

Matching matching_from_mates(const std::vector<int>& mate) {
  std::vector<Edge> edges;
  VertexMask saturated = 0;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) {
      edges.push_back({v, mate[v]});
      saturated |= vertex_bit(v) | vertex_bit(mate[v]);
    }
  }
  return Matching(std::move(edges), saturated);
}

Matching Matching::on(const Graph& host, std::vector<Edge> edges) {
  VertexMask saturated = 0;
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= host.order() || !host.adjacent(e.u, e.v)) {
      throw std::invalid_argument("matching pair is not an edge of the host graph");
    }
    const VertexMask ends = vertex_bit(e.u) | vertex_bit(e.v);
    if ((saturated & ends) != 0) throw std::invalid_argument("matching edges share a vertex");
    saturated |= ends;
  }
  std::sort(edges.begin(), edges.end());
  return Matching(std::move(edges), saturated);
}

Matching maximum_matching(const Graph& g) { return matching_from_mates(Blossom(g).solve()); }

Matching bipartite_maximum_matching(const Graph& g, const Bipartition& parts) {
  if (!parts.is_valid_for(g)) throw std::invalid_argument("not a bipartition of the graph");
  return matching_from_mates(HopcroftKarp(g, parts.x).solve());
}

Deficiency min_deficiency(const Graph& g) {
  return {g.order() - 2 * maximum_matching(g).size()};
}

int brute_force_matching_number(const Graph& g) {
  std::unordered_map<VertexMask, int> memo;
  return best_on(g, g.vertices(), memo);
}

// Lexicographic DFS over the sorted edge list.
class KMatchingWalker {
 public:
  KMatchingWalker(const Graph& g, int k, const std::function<bool(const Matching&)>& visit)
      : edges_(g.edges()), k_(k), visit_(visit) {}

  bool run() {
    chosen_.clear();
    return step(0, 0);
  }

 private:
  bool step(std::size_t next, VertexMask used) {
    if (static_cast<int>(chosen_.size()) == k_) return visit_(Matching(chosen_, used));
    const std::size_t needed = static_cast<std::size_t>(k_) - chosen_.size();
    for (std::size_t i = next; i + needed <= edges_.size(); ++i) {
      const auto [u, v] = edges_[i];
      const VertexMask ends = vertex_bit(u) | vertex_bit(v);
      if ((used & ends) != 0) continue;
      chosen_.push_back({u, v});
      const bool keep_going = step(i + 1, used | ends);
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  std::vector<std::pair<int, int>> edges_;
  int k_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<Edge> chosen_;
};

bool for_each_k_matching(const Graph& g, int k, const std::function<bool(const Matching&)>& visit) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (2 * k > g.order()) return true;
  return KMatchingWalker(g, k, visit).run();
}

std::vector<Matching> enumerate_k_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_k_matching(g, k, [&out](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool extends_to_deficiency(const Graph& g, const Matching& m, int d) {
  for (const Edge& e : m.edges()) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("matching is not a matching of the graph");
    }
  }
  const int slack = g.order() - 2 * m.size() - d;
  if (d < 0 || slack < 0 || slack % 2 != 0) return false;
  return min_deficiency(delete_vertices(g, m.saturated())).value <= d;
}

}  // namespace randic
