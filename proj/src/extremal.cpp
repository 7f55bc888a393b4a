#include "randic/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "overloaded.hpp"

namespace randic {
namespace {

// Hub-join family parameters for one hub index s.
struct HubShape {
  int q;      // hub size
  int parts;  // number of odd cliques
  int total;  // sum of clique half-sizes
};

struct HubRange {
  int s_lo;
  int s_hi;
  std::function<HubShape(int)> shape;
};

void fail(const std::string& what) { throw std::invalid_argument(what); }

HubRange hub_range(const PropertyKind& prop, int p) {
  return std::visit(
      Overloaded{
          [&](const property::PerfectMatching&) -> HubRange {
            if (p < 4 || p % 2 != 0) fail("pm family needs even order >= 4");
            const int n = p / 2;
            return {1, n - 1, [n](int s) { return HubShape{s, s + 2, n - s - 1}; }};
          },
          [&](const property::Extendable& e) -> HubRange {
            if (p % 2 != 0) fail("ext family needs even order");
            const int n = p / 2;
            const int k = e.k;
            if (k < 1 || k > n - 1) fail("ext family needs 1 <= k <= n-1");
            return {0, n - k - 1, [n, k](int s) { return HubShape{2 * k + s, s + 2, n - k - s - 1}; }};
          },
          [&](const property::FactorCritical& f) -> HubRange {
            const int k = f.k;
            if (k < 1 || k > p - 2 || (p - k) % 2 != 0) fail("fc family needs 1 <= k <= p-2 with p - k even");
            const int h = (p - k) / 2;
            return {0, h - 1, [k, h](int s) { return HubShape{k + s, s + 2, h - s - 1}; }};
          },
          [&](const property::NKD& x) -> HubRange {
            if (x.n < 1 || x.k < 1 || x.d < 1) fail("nkd family needs n, k, d >= 1");
            if (p < x.n + 2 * x.k + x.d + 2 || (p + x.n + x.d) % 2 != 0) {
              fail("nkd family needs p >= n + 2k + d + 2 and p + n + d even");
            }
            const int h = (p - x.n - 2 * x.k - x.d) / 2;
            return {0, h - 1, [x, h](int s) { return HubShape{x.n + 2 * x.k + s, s + x.d + 2, h - s - 1}; }};
          },
          [&](const property::BipExtendable&) -> HubRange {
            fail("bipext is not a hub-join family");
            return {};
          },
      },
      prop);
}

void compositions(int parts, int total, std::vector<int>& prefix,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 1) {
    prefix.push_back(total);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(parts - 1, total - first, prefix, visit);
    prefix.pop_back();
  }
}

// Non-increasing tuples of length `parts` summing to `total`, decreasing lex order.
void partitions(int parts, int total, int cap, std::vector<int>& prefix,
                const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(prefix);
    return;
  }
  for (int first = std::min(total, cap); first >= 0; --first) {
    if (static_cast<long>(first) * parts < total) break;
    prefix.push_back(first);
    partitions(parts - 1, total - first, first, prefix, visit);
    prefix.pop_back();
  }
}

std::vector<ExtremalSpec> bipartite_family(const property::BipExtendable& b, int p) {
  if (p % 2 != 0) fail("bipext family needs even order");
  const int n = p / 2;
  if (b.k < 0 || b.k > n - 1) fail("bipext family needs 0 <= k <= n-1");
  std::vector<ExtremalSpec> out;
  for (int s = std::max(1, 2 - b.k); s <= std::min(n - 1, n - b.k); ++s) {
    out.push_back(family::BipartiteDeleted{n, s, n - b.k - s + 1});
  }
  return out;
}

std::vector<ExtremalSpec> hub_family(const PropertyKind& prop, int p, bool multisets) {
  const HubRange range = hub_range(prop, p);
  std::vector<ExtremalSpec> out;
  for (int s = range.s_lo; s <= range.s_hi; ++s) {
    const HubShape shape = range.shape(s);
    std::vector<int> prefix;
    const auto emit = [&](const std::vector<int>& t) { out.push_back(family::HubJoinOddCliques{shape.q, t}); };
    if (multisets) {
      partitions(shape.parts, shape.total, shape.total, prefix, emit);
    } else {
      compositions(shape.parts, shape.total, prefix, emit);
    }
  }
  return out;
}

family::HubJoinOddCliques hub(int q, int big, int singles) {
  family::HubJoinOddCliques spec{q, {}};
  if (big >= 0) spec.t.push_back(big);
  spec.t.insert(spec.t.end(), static_cast<std::size_t>(singles), 0);
  return spec;
}

}  // namespace

std::string to_string(const ExtremalSpec& spec) {
  return std::visit(Overloaded{
                        [](const family::BipartiteDeleted& b) {
                          return "K(" + std::to_string(b.n) + "," + std::to_string(b.n) + ")-biclique(" +
                                 std::to_string(b.s) + "x" + std::to_string(b.t_size) + ")";
                        },
                        [](const family::HubJoinOddCliques& h) {
                          std::string out = "K" + std::to_string(h.q) + " v (";
                          for (std::size_t i = 0; i < h.t.size(); ++i) {
                            if (i > 0) out += " u ";
                            out += "K" + std::to_string(2 * h.t[i] + 1);
                          }
                          return out + ")";
                        },
                    },
                    spec);
}

ExtremalGraph build_extremal(const ExtremalSpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::BipartiteDeleted& b) -> ExtremalGraph {
            if (b.n < 2 || b.s < 1 || b.s > b.n - 1 || b.t_size < 1 || b.t_size > b.n - 1) {
              fail("bipartite-deleted spec needs 1 <= s <= n-1 and 1 <= |T| <= n-1");
            }
            BipartiteGraph base = complete_bipartite(b.n, b.n);
            const VertexMask s_side = first_vertices(b.s);
            const VertexMask t_side = first_vertices(b.t_size) << b.n;
            return {delete_biclique(base.graph, s_side, t_side), base.parts};
          },
          [](const family::HubJoinOddCliques& h) -> ExtremalGraph {
            if (h.q < 0 || h.t.empty()) fail("hub-join spec needs q >= 0 and at least one clique");
            int order = h.q;
            for (int t : h.t) {
              if (t < 0) fail("clique half-sizes must be non-negative");
              order += 2 * t + 1;
            }
            if (order > kMaxVertices) fail("hub-join spec exceeds 64 vertices");
            std::vector<int> sizes = h.t;
            std::sort(sizes.rbegin(), sizes.rend());
            Graph cliques(0);
            for (int t : sizes) cliques = graph_union(cliques, complete(2 * t + 1));
            return {join(complete(h.q), cliques), std::nullopt};
          },
      },
      spec);
}

std::vector<ExtremalSpec> enumerate_family(const PropertyKind& prop, int p) {
  if (const auto* b = std::get_if<property::BipExtendable>(&prop)) return bipartite_family(*b, p);
  return hub_family(prop, p, false);
}

std::vector<ExtremalSpec> enumerate_family_classes(const PropertyKind& prop, int p) {
  if (const auto* b = std::get_if<property::BipExtendable>(&prop)) return bipartite_family(*b, p);
  return hub_family(prop, p, true);
}

std::vector<ExtremalSpec> exceptional_specs(const TheoremId& t) {
  check_hypotheses(t);
  return std::visit(
      Overloaded{
          [](const theorem::BipExtendK0& x) -> std::vector<ExtremalSpec> {
            return {family::BipartiteDeleted{x.n, 2, x.n - 1}};
          },
          [](const theorem::BipExtend& x) -> std::vector<ExtremalSpec> {
            return {family::BipartiteDeleted{x.n, 1, x.n - x.k}};
          },
          [](const theorem::ExtendPM& x) -> std::vector<ExtremalSpec> {
            // K_{n+k-1} v (n-k+1)K1 and K_{2k} v (K1 u K_{2n-2k-1})
            return {hub(x.n + x.k - 1, -1, x.n - x.k + 1), hub(2 * x.k, x.n - x.k - 1, 1)};
          },
          [](const theorem::PerfectMatching& x) -> std::vector<ExtremalSpec> {
            // K_{n-1} v (n+1)K1 and K1 v (2K1 u K_{2n-3})
            return {hub(x.n - 1, -1, x.n + 1), hub(1, x.n - 2, 2)};
          },
          [](const theorem::FactorCritical& x) -> std::vector<ExtremalSpec> {
            // K_{(p+k)/2-1} v ((p-k)/2+1)K1 and K_k v (K1 u K_{p-k-1})
            return {hub((x.p + x.k) / 2 - 1, -1, (x.p - x.k) / 2 + 1), hub(x.k, (x.p - x.k) / 2 - 1, 1)};
          },
          [](const theorem::NKD& x) -> std::vector<ExtremalSpec> {
            // K_{(p+n+2k-d)/2-1} v ((p-n-2k+d)/2+1)K1 and K_{n+2k} v ((d+1)K1 u K_{p-n-2k-d-1})
            const int h = (x.p - x.n - 2 * x.k - x.d) / 2;
            return {hub((x.p + x.n + 2 * x.k - x.d) / 2 - 1, -1, (x.p - x.n - 2 * x.k + x.d) / 2 + 1),
                    hub(x.n + 2 * x.k, h - 1, x.d + 1)};
          },
      },
      t);
}

std::vector<ExtremalGraph> exceptional_graphs(const TheoremId& t) {
  std::vector<ExtremalGraph> out;
  for (const ExtremalSpec& spec : exceptional_specs(t)) out.push_back(build_extremal(spec));
  return out;
}

void for_each_composition(int parts, int total, const std::function<void(const std::vector<int>&)>& visit) {
  if (parts < 1 || total < 0) throw std::invalid_argument("compositions need parts >= 1 and total >= 0");
  std::vector<int> prefix;
  compositions(parts, total, prefix, visit);
}

Composition adjust_maximize(const std::function<double(int)>& g, int parts, int total) {
  if (parts < 2 || total <= 0) throw std::invalid_argument("adjustment needs parts >= 2 and total > 0");
  std::vector<int> current(static_cast<std::size_t>(parts), total / parts);
  for (int i = 0; i < total % parts; ++i) ++current[i];
  const auto value_of = [&g](const std::vector<int>& c) {
    double sum = 0.0;
    for (int x : c) sum += g(x);
    return sum;
  };
  double value = value_of(current);
  for (;;) {
    std::sort(current.rbegin(), current.rend());
    const auto last_positive = std::find(current.begin() + 1, current.end(), 0) - 1;
    if (last_positive == current.begin()) break;
    const double gain = g(current.front() + 1) + g(*last_positive - 1) - g(current.front()) - g(*last_positive);
    if (!(gain > 0)) break;
    ++current.front();
    --*last_positive;
    value += gain;
  }
  return {current, value_of(current)};
}

Composition brute_force_maximize(const std::function<double(int)>& g, int parts, int total) {
  Composition best;
  bool have = false;
  for_each_composition(parts, total, [&](const std::vector<int>& c) {
    double sum = 0.0;
    for (int x : c) sum += g(x);
    if (!have || sum > best.value) {
      best = {c, sum};
      have = true;
    }
  });
  return best;
}

}  // namespace randic
