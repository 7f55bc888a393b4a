#include "randic/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "randic/graph6.hpp"

namespace randic {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

VertexMask mask_of(const Cell& cell) {
  VertexMask m = 0;
  for (int v : cell) m |= vertex_bit(v);
  return m;
}

// Splits cells by the vector of neighbour counts into every cell until the
// ordered partition is equitable.
Partition refine(const Graph& g, Partition part) {
  for (;;) {
    std::vector<VertexMask> masks;
    masks.reserve(part.size());
    for (const Cell& cell : part) masks.push_back(mask_of(cell));

    Partition next;
    next.reserve(g.order());
    bool split = false;
    for (const Cell& cell : part) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(masks.size());
        for (std::size_t j = 0; j < masks.size(); ++j) counts[j] = std::popcount(g.neighbors(v) & masks[j]);
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          Cell piece;
          for (std::size_t j = start; j < i; ++j) piece.push_back(keyed[j].second);
          next.push_back(std::move(piece));
          start = i;
        }
      }
      if (next.back().size() != cell.size()) split = true;
    }
    part = std::move(next);
    if (!split) return part;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  Graph run() {
    Cell all(static_cast<std::size_t>(g_.order()));
    std::iota(all.begin(), all.end(), 0);
    Partition root;
    if (!all.empty()) root.push_back(std::move(all));
    search(std::move(root));
    return Graph::from_rows(std::move(best_));
  }

 private:
  bool twins(int v, int w) const {
    return (g_.neighbors(v) & ~vertex_bit(w)) == (g_.neighbors(w) & ~vertex_bit(v));
  }

  void search(Partition part) {
    part = refine(g_, std::move(part));
    const auto target = std::find_if(part.begin(), part.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == part.end()) {
      leaf(part);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - part.begin());
    std::vector<int> tried;
    for (int v : part[index]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(part.size() + 1);
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (i != index) {
          child.push_back(part[i]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (int w : part[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Partition& part) {
    const int n = g_.order();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[part[i][0]] = i;
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      VertexMask rest = g_.neighbors(part[i][0]);
      while (rest != 0) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        rows[i] |= vertex_bit(position[u]);
      }
    }
    if (!have_best_ || rows < best_) {
      best_ = std::move(rows);
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::vector<VertexMask> best_;
  bool have_best_ = false;
};

class IsoMatcher {
 public:
  IsoMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), map_(g.order(), -1) {
    order_.resize(static_cast<std::size_t>(g.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    VertexMask candidates = h_.vertices() & ~used;
    while (candidates != 0) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (h_.degree(w) != g_.degree(v)) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < depth && consistent; ++j) {
        const int u = order_[j];
        consistent = g_.adjacent(v, u) == h_.adjacent(w, map_[u]);
      }
      if (!consistent) continue;
      map_[v] = w;
      if (extend(depth + 1, used | vertex_bit(w))) return true;
    }
    map_[v] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> map_;
  std::vector<int> order_;
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg = g.degrees();
  std::vector<int> dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return IsoMatcher(g, h).run();
}

Graph canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_key(const Graph& g) { return graph6_encode(canonical_form(g)); }

}  // namespace randic
