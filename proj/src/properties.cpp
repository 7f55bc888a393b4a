#include "randic/properties.hpp"

#include <charconv>
#include <functional>
#include <stdexcept>
#include <vector>

#include "overloaded.hpp"
#include "randic/matching.hpp"

namespace randic {
namespace {

// Visits each `size`-subset of `universe`; stops when `visit` returns false.
bool for_each_subset(VertexMask universe, int size, const std::function<bool(VertexMask)>& visit,
                     VertexMask chosen = 0) {
  if (size == 0) return visit(chosen);
  if (std::popcount(universe) < size) return true;
  const int v = std::countr_zero(universe);
  const VertexMask rest = universe & ~vertex_bit(v);
  if (!for_each_subset(rest, size - 1, visit, chosen | vertex_bit(v))) return false;
  return for_each_subset(rest, size, visit, chosen);
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 0) {
    throw std::invalid_argument("bad property parameter in '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<int> parse_params(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PropertyKind parse_property(std::string_view text) {
  if (text == "pm") return property::PerfectMatching{};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown property '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon);
  const std::vector<int> params = parse_params(text.substr(colon + 1), text);
  const auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("property '" + std::string(text) + "' expects " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  if (name == "ext") {
    expect(1);
    return property::Extendable{params[0]};
  }
  if (name == "bipext") {
    expect(1);
    return property::BipExtendable{params[0]};
  }
  if (name == "fc") {
    expect(1);
    return property::FactorCritical{params[0]};
  }
  if (name == "nkd") {
    expect(3);
    return property::NKD{params[0], params[1], params[2]};
  }
  throw std::invalid_argument("unknown property '" + std::string(text) + "'");
}

std::string to_string(const PropertyKind& prop) {
  return std::visit(Overloaded{
                        [](const property::PerfectMatching&) { return std::string("pm"); },
                        [](const property::Extendable& p) { return "ext:" + std::to_string(p.k); },
                        [](const property::BipExtendable& p) { return "bipext:" + std::to_string(p.k); },
                        [](const property::FactorCritical& p) { return "fc:" + std::to_string(p.k); },
                        [](const property::NKD& p) {
                          return "nkd:" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                                 std::to_string(p.d);
                        },
                    },
                    prop);
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return min_deficiency(g).value == 0;
}

bool is_k_extendable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (g.order() % 2 != 0 || !is_connected(g) || !has_perfect_matching(g)) return false;
  if (k == 0) return true;
  return for_each_k_matching(g, k, [&g](const Matching& m) { return extends_to_deficiency(g, m, 0); });
}

bool is_k_factor_critical(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k > g.order() || (g.order() - k) % 2 != 0) return false;
  if (k == 0) return has_perfect_matching(g);
  return for_each_subset(g.vertices(), k, [&g](VertexMask removed) {
    return has_perfect_matching(delete_vertices(g, removed));
  });
}

bool is_nkd_graph(const Graph& g, int n, int k, int d) {
  if (n < 0 || k < 0 || d < 0) throw std::invalid_argument("n, k, d must be non-negative");
  const int p = g.order();
  if (p < n + 2 * k + d + 2 || (p - n - d) % 2 != 0) return false;
  if (!is_connected(g)) return false;
  return for_each_subset(g.vertices(), n, [&](VertexMask removed) {
    const Graph rest = delete_vertices(g, removed);
    bool any = false;
    const bool all_extend = for_each_k_matching(rest, k, [&](const Matching& m) {
      any = true;
      return extends_to_deficiency(rest, m, d);
    });
    return any && all_extend;
  });
}

bool has_property(const Graph& g, const PropertyKind& prop, const std::optional<Bipartition>& parts) {
  return std::visit(Overloaded{
                        [&](const property::PerfectMatching&) { return has_perfect_matching(g); },
                        [&](const property::Extendable& p) { return is_k_extendable(g, p.k); },
                        [&](const property::BipExtendable& p) {
                          if (!parts) throw std::invalid_argument("bipext needs a bipartition");
                          if (!parts->is_valid_for(g) || !parts->balanced()) return false;
                          return is_k_extendable(g, p.k);
                        },
                        [&](const property::FactorCritical& p) { return is_k_factor_critical(g, p.k); },
                        [&](const property::NKD& p) { return is_nkd_graph(g, p.n, p.k, p.d); },
                    },
                    prop);
}

bool is_maximal_non_property(const Graph& g, const PropertyKind& prop, const std::optional<Bipartition>& parts) {
  const bool bipartite = std::holds_alternative<property::BipExtendable>(prop);
  if (bipartite && !parts) throw std::invalid_argument("bipext needs a bipartition");
  if (has_property(g, prop, parts)) return false;
  for (auto [u, v] : g.non_edges()) {
    if (bipartite && (((parts->x >> u) & 1U) == ((parts->x >> v) & 1U))) continue;
    const Graph bigger = add_edge(g, u, v);
    if (!has_property(bigger, prop, parts)) return false;
  }
  return true;
}

}  // namespace randic
