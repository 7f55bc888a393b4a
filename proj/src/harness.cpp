#include "randic/harness.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "overloaded.hpp"
#include "randic/graph6.hpp"
#include "randic/indices.hpp"
#include "randic/isomorphism.hpp"

namespace randic {
namespace {

// Runs body(i) for i in [0, count) on `jobs` threads over contiguous chunks.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    threads.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        const std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

Graph with_new_vertex(const Graph& g, VertexMask neighbours) {
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  const int v = g.order();
  for (int u = 0; u < v; ++u) {
    if ((neighbours >> u) & 1U) rows[u] |= vertex_bit(v);
  }
  rows.push_back(neighbours);
  return Graph::from_rows(std::move(rows));
}

std::vector<Graph> extend_classes(const std::vector<Graph>& smaller) {
  std::map<std::string, Graph> classes;
  for (const Graph& g : smaller) {
    for (VertexMask s = 0; s < (VertexMask{1} << g.order()); ++s) {
      Graph c = canonical_form(with_new_vertex(g, s));
      classes.emplace(graph6_encode(c), std::move(c));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

// One canonical representative per isomorphism class of order p, sorted by
// graph6. Each order is grown from the one below and cached.
const std::vector<Graph>& graph_classes(int p) {
  static std::mutex lock;
  static std::map<int, std::vector<Graph>> cache{{0, {Graph(0)}}};
  const std::lock_guard guard(lock);
  for (int order = 1; order <= p; ++order) {
    if (!cache.contains(order)) cache.emplace(order, extend_classes(cache.at(order - 1)));
  }
  return cache.at(p);
}

void for_each_labelled_graph(int p, const std::function<void(const Graph&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < p; ++v) {
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexMask> rows(static_cast<std::size_t>(p), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) {
        rows[pairs[e].first] |= vertex_bit(pairs[e].second);
        rows[pairs[e].second] |= vertex_bit(pairs[e].first);
      }
    }
    visit(Graph::from_rows(std::move(rows)));
  }
}

std::vector<SourceGraph> bipartite_graphs(const GraphClassFilter& filter, bool dedup) {
  const int n = filter.order / 2;
  if (filter.order % 2 != 0) return {};
  if (n < 1 || n > kMaxBipartiteHalf) {
    throw std::invalid_argument("bipartite generator supports 1 <= n <= " + std::to_string(kMaxBipartiteHalf));
  }
  const Bipartition parts{first_vertices(n), first_vertices(n) << n};
  std::map<std::string, SourceGraph> classes;
  std::vector<SourceGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    std::vector<VertexMask> rows(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((mask >> (i * n + j)) & 1U) {
          rows[i] |= vertex_bit(n + j);
          rows[n + j] |= vertex_bit(i);
        }
      }
    }
    Graph g = Graph::from_rows(std::move(rows));
    if (!passes_filter(filter, g, parts)) continue;
    if (dedup) {
      std::string key = canonical_key(g);
      classes.try_emplace(std::move(key), SourceGraph{std::move(g), parts});
    } else {
      out.push_back({std::move(g), parts});
    }
  }
  if (dedup) {
    for (auto& [key, s] : classes) out.push_back(std::move(s));
  }
  return out;
}

Verdict verdict_for(int scanned, bool closed_available, const std::vector<std::string>& counterexamples) {
  if (!closed_available) return Verdict::kNotApplicable;
  if (scanned == 0) return Verdict::kVacuous;
  return counterexamples.empty() ? Verdict::kHolds : Verdict::kViolated;
}

std::string describe(const GraphClassFilter& f) {
  std::string out = "generated: order " + std::to_string(f.order);
  if (f.connected) out += ", connected";
  if (f.perfect_matching) out += ", perfect matching";
  if (f.bipartite_balanced) out += ", balanced bipartite";
  return out;
}

}  // namespace

bool passes_filter(const GraphClassFilter& filter, const Graph& g, const std::optional<Bipartition>& parts) {
  if (g.order() != filter.order) return false;
  if (filter.order_parity && g.order() % 2 != *filter.order_parity) return false;
  if (filter.bipartite_balanced && (!parts || !parts->is_valid_for(g) || !parts->balanced())) return false;
  if (filter.connected && !is_connected(g)) return false;
  if (filter.perfect_matching && !has_perfect_matching(g)) return false;
  return true;
}

std::vector<SourceGraph> enumerate_graphs(const GraphClassFilter& filter, bool dedup) {
  if (filter.order < 0 || filter.order > kMaxVertices - 2) throw std::invalid_argument("order unsupported");
  if (filter.order_parity && filter.order % 2 != *filter.order_parity) return {};
  if (filter.bipartite_balanced) return bipartite_graphs(filter, dedup);
  if (dedup && filter.order > kMaxGeneratedOrder) {
    throw std::invalid_argument("built-in generator supports order <= " + std::to_string(kMaxGeneratedOrder) +
                                "; supply larger graphs as graph6");
  }
  if (!dedup && filter.order > kMaxLabelledOrder) {
    throw std::invalid_argument("labelled enumeration supports order <= " + std::to_string(kMaxLabelledOrder));
  }
  std::vector<SourceGraph> out;
  const auto keep = [&](const Graph& g) {
    if (passes_filter(filter, g, std::nullopt)) out.push_back({g, std::nullopt});
  };
  if (dedup) {
    for (const Graph& g : graph_classes(filter.order)) keep(g);
  } else {
    for_each_labelled_graph(filter.order, keep);
  }
  return out;
}

GraphClassFilter theorem_filter(const TheoremId& t) {
  GraphClassFilter f;
  f.order = theorem_order(t);
  f.connected = true;
  f.bipartite_balanced = is_bipartite_theorem(t);
  f.perfect_matching = std::holds_alternative<theorem::ExtendPM>(t);
  return f;
}

GraphSource builtin_source(const TheoremId& t) {
  check_hypotheses(t);
  const GraphClassFilter f = theorem_filter(t);
  return {describe(f), enumerate_graphs(f, true), 0};
}

GraphSource external_source(const TheoremId& t, const std::vector<Graph>& graphs, std::string description) {
  check_hypotheses(t);
  const GraphClassFilter f = theorem_filter(t);
  GraphSource out{std::move(description), {}, 0};
  for (const Graph& g : graphs) {
    std::optional<Bipartition> parts;
    if (f.bipartite_balanced) parts = two_coloring(g);
    if (passes_filter(f, g, parts)) {
      out.graphs.push_back({g, parts});
    } else {
      ++out.skipped;
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kVacuous:
      return "vacuous";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

VerificationReport verify_theorem(const TheoremId& t, const std::vector<double>& alphas, const GraphSource& source,
                                  int jobs) {
  check_hypotheses(t);
  if (alphas.empty()) throw std::invalid_argument("at least one alpha is required");
  for (double a : alphas) {
    if (!(a > 0) || !std::isfinite(a)) throw std::invalid_argument("threshold theorems need alpha > 0");
  }
  const auto started = std::chrono::steady_clock::now();
  const PropertyKind prop = theorem_property(t);
  const std::vector<ExtremalGraph> exceptions = exceptional_graphs(t);

  VerificationReport report;
  report.theorem = t;
  report.alphas = alphas;
  report.source = source.description;
  report.graphs_scanned = static_cast<int>(source.graphs.size());
  report.graphs_skipped = source.skipped;

  std::vector<double> exact(alphas.size());
  std::vector<double> closed(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    AlphaOutcome outcome;
    outcome.alpha = alphas[a];
    outcome.threshold = exact_threshold(t, alphas[a]);
    outcome.audit = audit_closed_form(t, alphas[a]);
    exact[a] = outcome.threshold.exact;
    closed[a] = outcome.threshold.closed_form;
    report.outcomes.push_back(std::move(outcome));
  }

  struct GraphResult {
    std::vector<char> above_exact;
    std::vector<char> above_closed;
    bool lacks = false;
    bool exceptional = false;
  };
  std::vector<GraphResult> results(source.graphs.size());
  parallel_for(source.graphs.size(), jobs, [&](std::size_t i) {
    const SourceGraph& s = source.graphs[i];
    GraphResult& r = results[i];
    r.above_exact.assign(alphas.size(), 0);
    r.above_closed.assign(alphas.size(), 0);
    bool any = false;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const double value = zeroth_order_randic(s.graph, Alpha(alphas[a]));
      r.above_exact[a] = approx_at_least(value, exact[a]);
      r.above_closed[a] = !std::isnan(closed[a]) && approx_at_least(value, closed[a]);
      any = any || r.above_exact[a] || r.above_closed[a];
    }
    if (!any) return;
    r.lacks = !has_property(s.graph, prop, s.parts);
    if (!r.lacks) return;
    for (const ExtremalGraph& e : exceptions) {
      if (are_isomorphic(s.graph, e.graph)) {
        r.exceptional = true;
        break;
      }
    }
  });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const GraphResult& r = results[i];
    if (r.above_exact.empty()) continue;
    const std::string code = r.lacks ? graph6_encode(source.graphs[i].graph) : std::string();
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      AlphaOutcome& o = report.outcomes[a];
      o.above_exact += r.above_exact[a];
      o.above_closed += r.above_closed[a];
      if (!r.lacks) continue;
      if (r.above_exact[a]) (r.exceptional ? o.exceptional_matches : o.counterexamples).push_back(code);
      if (r.above_closed[a] && !r.exceptional) o.closed_form_counterexamples.push_back(code);
    }
  }

  report.verdict = report.graphs_scanned == 0 ? Verdict::kVacuous : Verdict::kHolds;
  for (AlphaOutcome& o : report.outcomes) {
    o.verdict = verdict_for(report.graphs_scanned, true, o.counterexamples);
    o.closed_form_verdict =
        verdict_for(report.graphs_scanned, !std::isnan(o.threshold.closed_form), o.closed_form_counterexamples);
    if (o.verdict == Verdict::kViolated) report.verdict = Verdict::kViolated;
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

CharacterizationReport verify_characterization(const PropertyKind& prop, int p, int jobs) {
  CharacterizationReport report;
  report.property = prop;
  report.order = p;

  std::set<std::string> family;
  for (const ExtremalSpec& spec : enumerate_family_classes(prop, p)) {
    family.insert(canonical_key(build_extremal(spec).graph));
  }

  GraphClassFilter f;
  f.order = p;
  f.connected = true;
  f.perfect_matching = std::holds_alternative<property::Extendable>(prop);
  f.bipartite_balanced = std::holds_alternative<property::BipExtendable>(prop);
  const std::vector<SourceGraph> graphs = enumerate_graphs(f, true);
  report.graphs_scanned = static_cast<int>(graphs.size());

  std::vector<char> maximal(graphs.size(), 0);
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    maximal[i] = is_maximal_non_property(graphs[i].graph, prop, graphs[i].parts);
  });

  std::set<std::string> found;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (maximal[i]) found.insert(canonical_key(graphs[i].graph));
  }
  report.found.assign(found.begin(), found.end());
  report.family.assign(family.begin(), family.end());
  std::set_difference(family.begin(), family.end(), found.begin(), found.end(), std::back_inserter(report.missing));
  std::set_difference(found.begin(), found.end(), family.begin(), family.end(),
                      std::back_inserter(report.unexpected));
  return report;
}

bool MonotonicityReport::holds() const {
  for (const MonotonicityOutcome& o : outcomes) {
    if (!o.violations.empty()) return false;
  }
  return true;
}

MonotonicityReport verify_monotonicity(const std::vector<double>& alphas, int p) {
  if (p < 2 || p > kMaxLabelledOrder) {
    throw std::invalid_argument("monotonicity sweep supports 2 <= p <= " + std::to_string(kMaxLabelledOrder));
  }
  if (alphas.empty()) throw std::invalid_argument("at least one alpha is required");
  GraphClassFilter all;
  all.order = p;
  const std::vector<SourceGraph> graphs = enumerate_graphs(all, true);
  MonotonicityReport report;
  report.order = p;
  report.graphs_scanned = static_cast<int>(graphs.size());
  for (double value : alphas) {
    const Alpha alpha(value);
    MonotonicityOutcome o;
    o.alpha = value;
    o.claim = value == 1.0 ? "delta == 2" : value > 0 ? "delta > 0" : "delta < 0";
    for (const SourceGraph& s : graphs) {
      const Graph& g = s.graph;
      const bool whole_defined = value > 0 || g.min_degree() >= 1;
      const double before = whole_defined ? zeroth_order_randic(g, alpha) : 0.0;
      for (auto [u, v] : g.non_edges()) {
        if (value < 0 && (g.degree(u) == 0 || g.degree(v) == 0)) continue;
        ++o.pairs_checked;
        const double delta = index_delta_for_edge(g, u, v, alpha);
        bool ok = value == 1.0 ? delta == 2.0 : value > 0 ? delta > 0 : delta < 0;
        if (ok && whole_defined) ok = approx_equal(delta, zeroth_order_randic(add_edge(g, u, v), alpha) - before);
        if (!ok) o.violations.push_back(graph6_encode(g) + " " + std::to_string(u) + " " + std::to_string(v));
      }
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace randic
