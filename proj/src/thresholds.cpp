#include "randic/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "overloaded.hpp"
#include "randic/indices.hpp"

namespace randic {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double pw(double base, double alpha) { return base == 0.0 ? 0.0 : std::pow(base, alpha); }

void require_positive(double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw std::invalid_argument("threshold theorems need alpha > 0");
}

double index_of(const ExtremalSpec& spec, double alpha) {
  return zeroth_order_randic(build_extremal(spec).graph, Alpha(alpha));
}

family::HubJoinOddCliques hub(int q, int big, int singles) {
  family::HubJoinOddCliques spec{q, {}};
  if (big >= 0) spec.t.push_back(big);
  spec.t.insert(spec.t.end(), static_cast<std::size_t>(singles), 0);
  return spec;
}

BranchValue branch(std::string name, double printed, double family) {
  return {std::move(name), printed, family, printed - family};
}

}  // namespace

double bipartite_k0_bound(int n, double alpha) {
  return (n - 1) * pw(n, alpha) + (n - 1) * pw(n - 2, alpha) + 2;
}

double bipartite_statement_bound(int n, int k, double alpha) {
  return (n + k - 1) * pw(n, alpha) + 2 * pw(k + 1, alpha) + (n - k - 1) * pw(n - 2, alpha);
}

double bipartite_proof_endpoint(int n, int k, double alpha) {
  return (n + k - 1) * pw(n, alpha) + (n - k) * pw(n - 1, alpha) + pw(k, alpha);
}

double beta1(int n, int k, double alpha) {
  return (n + k - 1) * pw(2 * n - 1, alpha) + (n - k + 1) * pw(n + k - 1, alpha);
}

double zeta1(int n, int k, double alpha) {
  return 2 * k * pw(2 * n - 1, alpha) + pw(2 * k, alpha) + (2 * n - 2 * k - 1) * pw(2 * n - 2, alpha);
}

double beta_pm(int n, double alpha) {
  return pw(2 * n - 1, alpha) + (2 * n - 3) * pw(2 * n - 4, alpha) + 2;
}

double zeta_pm(int n, double alpha) { return (n - 1) * pw(2 * n - 1, alpha) + (n + 1) * pw(n - 1, alpha); }

double beta2(int p, int k, double alpha) {
  const int hub = (p + k) / 2 - 1;
  return hub * pw(p - 1, alpha) + ((p - k) / 2 + 1) * pw(hub, alpha);
}

double zeta2(int p, int k, double alpha) {
  return k * pw(p - 1, alpha) + pw(k, alpha) + (p - k - 1) * pw(p - 2, alpha);
}

double l_alpha(int p, int n, int k, int d, double alpha, double s) {
  const double hub = n + 2 * k + s;
  return hub * pw(p - 1, alpha) + (s + d + 1) * pw(hub, alpha) +
         (p - n - 2 * k - d - 2 * s - 1) * pw(p - d - s - 2, alpha);
}

double phi1(int n, int k, double alpha, double x) {
  return x * pw(k + x - 1, alpha) + (n + k - 1) * pw(n, alpha) + (n - k - x + 1) * pw(n - x, alpha);
}

double phi2(int n, int k, double alpha, double x) {
  return (x + 2 * k) * pw(2 * n - 1, alpha) + (x + 1) * pw(x + 2 * k, alpha) +
         (2 * n - 2 * k - 2 * x - 1) * pw(2 * n - x - 2, alpha);
}

double phi3(int n, double alpha, double x) {
  return x * pw(2 * n - 1, alpha) + (x + 1) * pw(x, alpha) + (2 * n - 2 * x - 1) * pw(2 * n - x - 2, alpha);
}

double phi4(int p, int k, double alpha, double x) {
  return (x + k) * pw(p - 1, alpha) + (x + 1) * pw(x + k, alpha) + (p - k - 2 * x - 1) * pw(p - x - 2, alpha);
}

double closed_threshold(const TheoremId& t, double alpha) {
  check_hypotheses(t);
  require_positive(alpha);
  if (!alpha_regime_holds(t, alpha)) {
    throw std::invalid_argument("alpha outside the theorem's regime (needs alpha >= 1 or d <= (2n+4k)/(1-alpha) - 1)");
  }
  return std::visit(
      Overloaded{
          [&](const theorem::BipExtendK0& x) { return bipartite_k0_bound(x.n, alpha); },
          [&](const theorem::BipExtend& x) { return bipartite_statement_bound(x.n, x.k, alpha); },
          [&](const theorem::ExtendPM& x) { return std::max(beta1(x.n, x.k, alpha), zeta1(x.n, x.k, alpha)); },
          [&](const theorem::PerfectMatching& x) { return std::max(beta_pm(x.n, alpha), zeta_pm(x.n, alpha)); },
          [&](const theorem::FactorCritical& x) { return std::max(beta2(x.p, x.k, alpha), zeta2(x.p, x.k, alpha)); },
          [&](const theorem::NKD& x) {
            const double top = (x.p - x.n - 2 * x.k - x.d) / 2 - 1;
            return std::max(l_alpha(x.p, x.n, x.k, x.d, alpha, top), l_alpha(x.p, x.n, x.k, x.d, alpha, 0));
          },
      },
      t);
}

ThresholdReport exact_threshold(const TheoremId& t, double alpha) {
  check_hypotheses(t);
  const Alpha exponent(alpha);
  const std::vector<ExtremalSpec> members = enumerate_family_classes(theorem_property(t), theorem_order(t));
  if (members.empty()) throw std::invalid_argument("empty maximal-non-P family");

  ThresholdReport report;
  bool have = false;
  for (const ExtremalSpec& spec : members) {
    const double value = zeroth_order_randic(build_extremal(spec).graph, exponent);
    if (!have || value > report.exact) {
      report.exact = value;
      report.argmax_spec = spec;
      have = true;
    }
  }
  report.closed_form = alpha_regime_holds(t, alpha) ? closed_threshold(t, alpha) : kNaN;
  report.discrepancy = report.closed_form - report.exact;
  return report;
}

std::optional<std::pair<std::string, double>> corollary_edge_bound(const TheoremId& t) {
  using Result = std::optional<std::pair<std::string, double>>;
  return std::visit(
      Overloaded{
          [](const theorem::BipExtendK0&) -> Result { return std::nullopt; },
          [](const theorem::BipExtend&) -> Result { return std::nullopt; },
          [](const theorem::ExtendPM& x) -> Result {
            return std::pair{std::string("2n^2-3n+2k+1"), 2.0 * x.n * x.n - 3.0 * x.n + 2.0 * x.k + 1};
          },
          [](const theorem::PerfectMatching& x) -> Result {
            if (x.n == 3 || x.n == 4) return std::pair{std::string("3n(n-1)"), 3.0 * x.n * (x.n - 1)};
            return std::pair{std::string("(2n-3)(n-2)+2"), (2.0 * x.n - 3) * (x.n - 2) + 2};
          },
          [](const theorem::FactorCritical& x) -> Result {
            const double p = x.p;
            return std::pair{std::string("p^2/2-3p/2+k+1"), p * p / 2 - 1.5 * p + x.k + 1};
          },
          [](const theorem::NKD& x) -> Result {
            const double p = x.p;
            const double n = x.n;
            const double k = x.k;
            const double d = x.d;
            if (p < 5 * d + 2 * k + n + 4) {
              return std::pair{std::string("3p^2/8+(2k-d+n-3)p/4+(2k-d+n)(d-2k-n+2)/8"),
                               3 * p * p / 8 + (2 * k - d + n - 3) * p / 4 + (2 * k - d + n) * (d - 2 * k - n + 2) / 8};
            }
            return std::pair{std::string("p^2/2-(d+3/2)p+(3d/2+2k+n+2dk+dn+d^2/2+1)"),
                             p * p / 2 - (d + 1.5) * p + (1.5 * d + 2 * k + n + 2 * d * k + d * n + d * d / 2 + 1)};
          },
      },
      t);
}

ClosedFormAudit audit_closed_form(const TheoremId& t, double alpha) {
  check_hypotheses(t);
  require_positive(alpha);
  ClosedFormAudit audit;
  audit.branches = std::visit(
      Overloaded{
          [&](const theorem::BipExtendK0& x) -> std::vector<BranchValue> {
            return {branch("statement", bipartite_k0_bound(x.n, alpha),
                           index_of(family::BipartiteDeleted{x.n, 2, x.n - 1}, alpha)),
                    branch("proof_endpoint", phi1(x.n, 0, alpha, x.n - 1),
                           index_of(family::BipartiteDeleted{x.n, x.n - 1, 2}, alpha))};
          },
          [&](const theorem::BipExtend& x) -> std::vector<BranchValue> {
            // The printed statement has the |S| = 2 profile, which is a family
            // member only when 2 <= n - k.
            const double s2 = 2 <= x.n - x.k ? index_of(family::BipartiteDeleted{x.n, 2, x.n - x.k - 1}, alpha) : kNaN;
            return {branch("statement", bipartite_statement_bound(x.n, x.k, alpha), s2),
                    branch("proof_endpoint", bipartite_proof_endpoint(x.n, x.k, alpha),
                           index_of(family::BipartiteDeleted{x.n, 1, x.n - x.k}, alpha))};
          },
          [&](const theorem::ExtendPM& x) -> std::vector<BranchValue> {
            return {branch("beta1", beta1(x.n, x.k, alpha), index_of(hub(x.n + x.k - 1, -1, x.n - x.k + 1), alpha)),
                    branch("zeta1", zeta1(x.n, x.k, alpha), index_of(hub(2 * x.k, x.n - x.k - 1, 1), alpha))};
          },
          [&](const theorem::PerfectMatching& x) -> std::vector<BranchValue> {
            return {branch("beta", beta_pm(x.n, alpha), index_of(hub(1, x.n - 2, 2), alpha)),
                    branch("zeta", zeta_pm(x.n, alpha), index_of(hub(x.n - 1, -1, x.n + 1), alpha))};
          },
          [&](const theorem::FactorCritical& x) -> std::vector<BranchValue> {
            const int h = (x.p - x.k) / 2;
            return {branch("beta2", beta2(x.p, x.k, alpha), index_of(hub((x.p + x.k) / 2 - 1, -1, h + 1), alpha)),
                    branch("zeta2", zeta2(x.p, x.k, alpha), index_of(hub(x.k, h - 1, 1), alpha))};
          },
          [&](const theorem::NKD& x) -> std::vector<BranchValue> {
            const int h = (x.p - x.n - 2 * x.k - x.d) / 2;
            const int hub0 = x.n + 2 * x.k;
            return {branch("l(0)", l_alpha(x.p, x.n, x.k, x.d, alpha, 0), index_of(hub(hub0, h - 1, x.d + 1), alpha)),
                    branch("l(top)", l_alpha(x.p, x.n, x.k, x.d, alpha, h - 1),
                           index_of(hub(hub0 + h - 1, -1, h + x.d + 1), alpha))};
          },
      },
      t);

  const double exact = exact_threshold(t, alpha).exact;
  for (const BranchValue& b : audit.branches) {
    if (!approx_equal(b.printed, exact)) continue;
    audit.sharp += (audit.sharp.empty() ? "" : ",") + b.name;
  }
  if (audit.sharp.empty()) audit.sharp = "none";

  if (alpha == 1.0) {
    if (auto bound = corollary_edge_bound(t)) {
      audit.corollary = CorollaryCheck{bound->first, bound->second, 2 * bound->second, exact,
                                       2 * bound->second - exact};
    }
  }
  return audit;
}

IntegerInterval phi_interval(const TheoremId& t) {
  check_hypotheses(t);
  return std::visit(Overloaded{
                        [](const theorem::BipExtendK0& x) { return IntegerInterval{2, x.n - 1}; },
                        [](const theorem::BipExtend& x) { return IntegerInterval{1, x.n - x.k}; },
                        [](const theorem::ExtendPM& x) { return IntegerInterval{0, x.n - x.k - 1}; },
                        [](const theorem::PerfectMatching& x) { return IntegerInterval{1, x.n - 1}; },
                        [](const theorem::FactorCritical& x) { return IntegerInterval{0, (x.p - x.k) / 2 - 1}; },
                        [](const theorem::NKD& x) {
                          return IntegerInterval{0, (x.p - x.n - 2 * x.k - x.d) / 2 - 1};
                        },
                    },
                    t);
}

double phi(const TheoremId& t, double alpha, double x) {
  return std::visit(Overloaded{
                        [&](const theorem::BipExtendK0& y) { return phi1(y.n, 0, alpha, x); },
                        [&](const theorem::BipExtend& y) { return phi1(y.n, y.k, alpha, x); },
                        [&](const theorem::ExtendPM& y) { return phi2(y.n, y.k, alpha, x); },
                        [&](const theorem::PerfectMatching& y) { return phi3(y.n, alpha, x); },
                        [&](const theorem::FactorCritical& y) { return phi4(y.p, y.k, alpha, x); },
                        [&](const theorem::NKD& y) { return l_alpha(y.p, y.n, y.k, y.d, alpha, x); },
                    },
                    t);
}

ConvexityDiagnostic phi_convexity_check(const TheoremId& t, double alpha, std::optional<IntegerInterval> grid) {
  require_positive(alpha);
  ConvexityDiagnostic out;
  out.grid = grid.value_or(phi_interval(t));
  if (out.grid.hi < out.grid.lo) throw std::invalid_argument("empty convexity grid");
  for (int x = out.grid.lo; x <= out.grid.hi; ++x) out.values.push_back(phi(t, alpha, x));
  for (std::size_t i = 1; i + 1 < out.values.size(); ++i) {
    const double second = out.values[i + 1] - 2 * out.values[i] + out.values[i - 1];
    out.second_differences.push_back(second);
    const double scale = std::max({std::abs(out.values[i - 1]), std::abs(out.values[i]), std::abs(out.values[i + 1])});
    if (second < -kRelativeTolerance * std::max(scale, 1.0)) out.convex = false;
  }
  const auto top = std::max_element(out.values.begin(), out.values.end());
  out.argmax = out.grid.lo + static_cast<int>(top - out.values.begin());
  const double edge = std::max(out.values.front(), out.values.back());
  out.endpoint_max = approx_at_least(edge, *top);
  return out;
}

}  // namespace randic
