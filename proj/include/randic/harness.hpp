#pragma once

#include <optional>
#include <string>
#include <vector>

#include "randic/extremal.hpp"
#include "randic/graph.hpp"
#include "randic/properties.hpp"
#include "randic/theorem.hpp"
#include "randic/thresholds.hpp"

namespace randic {

/// Conjunction of hypothesis clauses a source graph must satisfy.
struct GraphClassFilter {
  int order = 0;
  bool connected = false;
  bool perfect_matching = false;
  /// Balanced bipartite with a fixed bipartition (X = first half in the
  /// built-in generator, the 2-colouring for external graphs).
  bool bipartite_balanced = false;
  std::optional<int> order_parity;  // required order % 2
};

struct SourceGraph {
  Graph graph;
  std::optional<Bipartition> parts;
};

/// Largest order the built-in generator handles.
inline constexpr int kMaxGeneratedOrder = 8;
/// Largest order for labelled (non-deduplicated) enumeration.
inline constexpr int kMaxLabelledOrder = 7;
/// Largest part size for the bipartite generator.
inline constexpr int kMaxBipartiteHalf = 4;

/// Graphs of `filter.order` satisfying the filter.
///
/// With `dedup` one representative per isomorphism class is returned, sorted
/// by canonical graph6. Classes are grown one vertex at a time: every class on
/// p-1 vertices is extended by each possible neighbourhood of a new vertex and
/// the results are merged by canonical form. Without `dedup` every labelled
/// graph is returned in edge-subset order (p <= 7).
///
/// Bipartite mode enumerates the edge subsets of X x Y (n <= 4), keeps the
/// connected ones and, with `dedup`, the first labelled graph of each class.
///
/// Throws std::invalid_argument for orders outside the generator's range.
std::vector<SourceGraph> enumerate_graphs(const GraphClassFilter& filter, bool dedup = true);

/// Whether `g` passes `filter`. In bipartite mode `parts` must be set.
bool passes_filter(const GraphClassFilter& filter, const Graph& g, const std::optional<Bipartition>& parts);

/// Hypothesis filter of a threshold theorem.
GraphClassFilter theorem_filter(const TheoremId& t);

/// Graphs a verification run scans.
struct GraphSource {
  std::string description;
  std::vector<SourceGraph> graphs;
  int skipped = 0;  // external graphs rejected by the theorem's filter
};

GraphSource builtin_source(const TheoremId& t);

/// Applies the theorem's filter to externally supplied graphs. Bipartite
/// theorems take the bipartition from a 2-colouring.
GraphSource external_source(const TheoremId& t, const std::vector<Graph>& graphs, std::string description);

enum class Verdict { kHolds, kViolated, kVacuous, kNotApplicable };
std::string to_string(Verdict v);

struct AlphaOutcome {
  double alpha = 0.0;
  ThresholdReport threshold;
  ClosedFormAudit audit;
  int above_exact = 0;
  int above_closed = 0;
  /// graph6 of scanned graphs at or above the exact threshold that lack the
  /// property and are isomorphic to an exceptional graph.
  std::vector<std::string> exceptional_matches;
  /// At or above the exact threshold, lacking the property, not exceptional.
  std::vector<std::string> counterexamples;
  /// Same test against the printed closed form.
  std::vector<std::string> closed_form_counterexamples;
  Verdict verdict = Verdict::kVacuous;
  Verdict closed_form_verdict = Verdict::kVacuous;
};

struct VerificationReport {
  TheoremId theorem;
  std::vector<double> alphas;
  std::string source;
  int graphs_scanned = 0;
  int graphs_skipped = 0;
  std::vector<AlphaOutcome> outcomes;
  Verdict verdict = Verdict::kVacuous;  // over all alphas, exact thresholds
  std::optional<double> wall_time_seconds;
};

/// Scans `source` once per alpha. Every alpha must be positive. `jobs`
/// workers split the graphs into contiguous chunks; results are merged in
/// source order so the report does not depend on `jobs`.
VerificationReport verify_theorem(const TheoremId& t, const std::vector<double>& alphas, const GraphSource& source,
                                  int jobs = 1);

struct CharacterizationReport {
  PropertyKind property;
  int order = 0;
  int graphs_scanned = 0;
  /// Canonical graph6 keys, sorted.
  std::vector<std::string> found;
  std::vector<std::string> family;
  std::vector<std::string> missing;     // family classes not found maximal
  std::vector<std::string> unexpected;  // maximal graphs outside the family
  bool matches() const { return missing.empty() && unexpected.empty(); }
};

/// Compares the maximal non-P graphs among the class generated for `prop` at
/// order `p` with the characterised family, up to isomorphism. The scanned
/// class is: connected graphs (PM, FC, NKD); connected graphs with a perfect
/// matching (Extendable); connected balanced bipartite graphs with the
/// generated bipartition (BipExtendable).
CharacterizationReport verify_characterization(const PropertyKind& prop, int p, int jobs = 1);

struct MonotonicityOutcome {
  double alpha = 0.0;
  std::string claim;  // "delta > 0", "delta == 2" or "delta < 0"
  long long pairs_checked = 0;
  /// "graph6 u v" for each violating pair, or for a delta that disagrees with
  /// the difference of full indices.
  std::vector<std::string> violations;
};

struct MonotonicityReport {
  int order = 0;
  int graphs_scanned = 0;
  std::vector<MonotonicityOutcome> outcomes;
  bool holds() const;
};

/// Checks the sign of index_delta_for_edge over every non-edge of every graph
/// class of order `p` (p <= 7). For alpha < 0 only pairs whose endpoints both
/// have positive degree are checked.
MonotonicityReport verify_monotonicity(const std::vector<double>& alphas, int p);

}  // namespace randic
