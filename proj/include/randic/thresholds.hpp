#pragma once

#include <optional>
#include <string>
#include <vector>

#include "randic/extremal.hpp"
#include "randic/theorem.hpp"

namespace randic {

/// Printed closed form next to the exact family maximum.
struct ThresholdReport {
  double closed_form = 0.0;  // NaN when the closed form's alpha regime fails
  double exact = 0.0;        // max index over the maximal-non-P family
  ExtremalSpec argmax_spec;  // first family member attaining `exact`
  double discrepancy = 0.0;  // closed_form - exact
};

/// One branch of a printed max{...} compared with the family member that
/// sits at the corresponding endpoint.
struct BranchValue {
  std::string name;
  double printed = 0.0;
  double family = 0.0;  // NaN when no family member has that shape
  double discrepancy = 0.0;
};

/// Edge-count corollary at alpha = 1: 2 * bound should equal the exact
/// threshold, since the index at alpha = 1 is twice the edge count.
struct CorollaryCheck {
  std::string formula;
  double edge_bound = 0.0;
  double doubled = 0.0;
  double exact = 0.0;
  double discrepancy = 0.0;  // doubled - exact
};

struct ClosedFormAudit {
  std::vector<BranchValue> branches;
  /// Names of the branches whose printed value equals the exact threshold, or
  /// "none".
  std::string sharp;
  std::optional<CorollaryCheck> corollary;  // only at alpha = 1
};

// Printed closed forms, alpha > 0.
double bipartite_k0_bound(int n, double alpha);
double bipartite_statement_bound(int n, int k, double alpha);
double bipartite_proof_endpoint(int n, int k, double alpha);
double beta1(int n, int k, double alpha);
double zeta1(int n, int k, double alpha);
double beta_pm(int n, double alpha);
double zeta_pm(int n, double alpha);
double beta2(int p, int k, double alpha);
double zeta2(int p, int k, double alpha);
double l_alpha(int p, int n, int k, int d, double alpha, double s);

// Endpoint profiles: the index of the family member with hub parameter x and
// all clique mass in one clique.
double phi1(int n, int k, double alpha, double x);
double phi2(int n, int k, double alpha, double x);
double phi3(int n, double alpha, double x);
double phi4(int p, int k, double alpha, double x);

/// max of the printed branches. Throws std::invalid_argument when the
/// hypotheses fail, alpha <= 0, or (NKD) the alpha regime fails.
double closed_threshold(const TheoremId& t, double alpha);

/// Maximum of the index over the maximal-non-P family behind `t`.
ThresholdReport exact_threshold(const TheoremId& t, double alpha);

ClosedFormAudit audit_closed_form(const TheoremId& t, double alpha);

/// |E| bound printed for alpha = 1, if the theorem has one.
std::optional<std::pair<std::string, double>> corollary_edge_bound(const TheoremId& t);

struct IntegerInterval {
  int lo = 0;
  int hi = 0;
};

/// Range of the hub parameter over which the theorem's profile is maximised.
IntegerInterval phi_interval(const TheoremId& t);

/// Profile for `t` (phi1..phi4, or l_alpha for NKD) at x.
double phi(const TheoremId& t, double alpha, double x);

struct ConvexityDiagnostic {
  IntegerInterval grid;
  std::vector<double> values;
  std::vector<double> second_differences;  // at grid.lo+1 .. grid.hi-1
  bool convex = true;                      // every second difference >= 0
  bool endpoint_max = true;                // grid maximum sits at an end
  int argmax = 0;
};

/// Second differences of the profile over integer x in `grid` (default: the
/// theorem's interval). Requires alpha > 0.
ConvexityDiagnostic phi_convexity_check(const TheoremId& t, double alpha,
                                        std::optional<IntegerInterval> grid = std::nullopt);

}  // namespace randic
