#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "randic/extremal.hpp"
#include "randic/indices.hpp"
#include "randic/thresholds.hpp"

using namespace randic;

namespace {

// Theorem instances with order at most `max_order`.
std::vector<TheoremId> theorem_grid(int max_order) {
  std::vector<TheoremId> out;
  for (int n = 2; 2 * n <= max_order; ++n) {
    if (n >= 3) out.push_back(theorem::BipExtendK0{n});
    out.push_back(theorem::PerfectMatching{n});
    for (int k = 1; k < n; ++k) {
      if (n >= 3) out.push_back(theorem::BipExtend{n, k});
      out.push_back(theorem::ExtendPM{n, k});
    }
  }
  for (int p = 4; p <= max_order; ++p) {
    for (int k = 1; k <= p - 2; ++k) {
      if ((p - k) % 2 == 0) out.push_back(theorem::FactorCritical{p, k});
    }
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 2; ++k) {
        for (int d = 1; d <= 3; ++d) {
          if (p >= n + 2 * k + d + 2 && (p + n + d) % 2 == 0) out.push_back(theorem::NKD{p, n, k, d});
        }
      }
    }
  }
  return out;
}

double index_of(const ExtremalSpec& spec, double a) { return zeroth_order_randic(build_extremal(spec).graph, Alpha(a)); }

// Family member whose hub parameter is x and whose clique mass sits in one
// clique.
ExtremalSpec endpoint_member(const TheoremId& t, int x) {
  return std::visit(
      [x](const auto& th) -> ExtremalSpec {
        using T = std::decay_t<decltype(th)>;
        const auto hub = [](int q, int parts, int total) {
          family::HubJoinOddCliques h{q, std::vector<int>(static_cast<std::size_t>(parts), 0)};
          h.t[0] = total;
          return h;
        };
        if constexpr (std::is_same_v<T, theorem::BipExtendK0>) {
          return family::BipartiteDeleted{th.n, x, th.n - x + 1};
        } else if constexpr (std::is_same_v<T, theorem::BipExtend>) {
          return family::BipartiteDeleted{th.n, x, th.n - th.k - x + 1};
        } else if constexpr (std::is_same_v<T, theorem::ExtendPM>) {
          return hub(2 * th.k + x, x + 2, th.n - th.k - x - 1);
        } else if constexpr (std::is_same_v<T, theorem::PerfectMatching>) {
          return hub(x, x + 2, th.n - x - 1);
        } else if constexpr (std::is_same_v<T, theorem::FactorCritical>) {
          return hub(th.k + x, x + 2, (th.p - th.k) / 2 - x - 1);
        } else {
          return hub(th.n + 2 * th.k + x, x + th.d + 2, (th.p - th.n - 2 * th.k - th.d) / 2 - x - 1);
        }
      },
      t);
}

}  // namespace

TEST_SUITE("thresholds") {
  TEST_CASE("closed-form examples") {
    CHECK(beta1(4, 1, 1) == 44);
    CHECK(zeta1(4, 1, 1) == 46);
    CHECK(closed_threshold(theorem::ExtendPM{4, 1}, 1) == 46);
    CHECK(beta_pm(3, 1) == 13);
    CHECK(zeta_pm(3, 1) == 18);
    CHECK(closed_threshold(theorem::PerfectMatching{3}, 1) == 18);
    CHECK(l_alpha(8, 1, 1, 1, 1, 0) == 42);
    CHECK(l_alpha(8, 1, 1, 1, 1, 1) == 44);
    CHECK(closed_threshold(theorem::NKD{8, 1, 1, 1}, 1) == 44);
  }

  TEST_CASE("exact threshold examples") {
    const ThresholdReport ext = exact_threshold(theorem::ExtendPM{3, 1}, 1);
    CHECK(ext.exact == 24);
    CHECK(ext.closed_form == 24);
    CHECK(ext.discrepancy == 0);

    const ThresholdReport pm = exact_threshold(theorem::PerfectMatching{3}, 1);
    CHECK(pm.exact == 18);
    CHECK(index_of(pm.argmax_spec, 1) == 18);
    const ClosedFormAudit audit = audit_closed_form(theorem::PerfectMatching{3}, 1);
    REQUIRE(audit.branches.size() == 2);
    CHECK(audit.branches[0].name == "beta");
    CHECK(audit.branches[0].family == 16);
    CHECK(audit.branches[0].discrepancy == -3);
    CHECK(audit.sharp == "zeta");
  }

  TEST_CASE("errors and the alpha regime") {
    CHECK_THROWS_AS(closed_threshold(theorem::ExtendPM{3, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_threshold(theorem::PerfectMatching{3}, -1), std::invalid_argument);
    CHECK_THROWS_AS(closed_threshold(theorem::FactorCritical{7, 2}, 1), std::invalid_argument);
    const TheoremId wide{theorem::NKD{17, 1, 1, 12}};
    CHECK(alpha_regime_holds(wide, 1.0));
    CHECK_FALSE(alpha_regime_holds(wide, 0.5));
    CHECK_THROWS_AS(closed_threshold(wide, 0.5), std::invalid_argument);
    const ThresholdReport r = exact_threshold(wide, 0.5);
    CHECK(std::isnan(r.closed_form));
    CHECK(r.exact > 0);
  }

  TEST_CASE("argmax re-evaluates to the exact threshold") {
    for (const TheoremId& t : theorem_grid(10)) {
      for (double a : {0.5, 1.0, 2.0, 3.0}) {
        const ThresholdReport r = exact_threshold(t, a);
        CHECK(approx_equal(index_of(r.argmax_spec, a), r.exact));
        for (const ExtremalSpec& spec : enumerate_family(theorem_property(t), theorem_order(t))) {
          CHECK(index_of(spec, a) <= r.exact * (1 + 1e-12));
        }
      }
    }
  }

  TEST_CASE("profiles equal the index of the matching family member") {
    for (const TheoremId& t : theorem_grid(12)) {
      const IntegerInterval range = phi_interval(t);
      for (double a : {0.5, 1.0, 2.0, 3.0}) {
        for (int x = range.lo; x <= range.hi; ++x) {
          INFO(theorem_name(t), " x=", x, " alpha=", a);
          CHECK(approx_equal(phi(t, a, x), index_of(endpoint_member(t, x), a)));
        }
      }
    }
  }

  TEST_CASE("endpoint principle") {
    for (const TheoremId& t : theorem_grid(12)) {
      const IntegerInterval range = phi_interval(t);
      for (double a : {0.5, 1.0, 2.0, 3.0}) {
        const ThresholdReport r = exact_threshold(t, a);
        const double ends = std::max(index_of(endpoint_member(t, range.lo), a), index_of(endpoint_member(t, range.hi), a));
        INFO(theorem_name(t), " alpha=", a);
        CHECK(approx_equal(r.exact, ends));
        if (const auto* h = std::get_if<family::HubJoinOddCliques>(&r.argmax_spec)) {
          CHECK(std::all_of(h->t.begin() + 1, h->t.end(), [](int v) { return v == 0; }));
        }
      }
    }
  }

  TEST_CASE("printed branches match their family members, apart from the known misprints") {
    for (const TheoremId& t : theorem_grid(12)) {
      for (double a : {0.5, 1.0, 2.0, 3.0}) {
        for (const BranchValue& b : audit_closed_form(t, a).branches) {
          const bool misprint = (std::holds_alternative<theorem::PerfectMatching>(t) && b.name == "beta") ||
                                (std::holds_alternative<theorem::BipExtend>(t) && b.name == "statement");
          INFO(theorem_name(t), " ", b.name, " alpha=", a);
          if (misprint || std::isnan(b.family)) continue;
          CHECK(approx_equal(b.printed, b.family));
        }
      }
    }
  }

  TEST_CASE("beta for perfect matchings is off by the (2n-4) factor") {
    for (int n = 3; n <= 10; ++n) {
      for (double a : {0.5, 1.0, 2.0, 3.0}) {
        const double corrected = std::pow(2 * n - 1, a) + (2 * n - 3) * std::pow(2 * n - 3, a) + 2;
        const double member = index_of(family::HubJoinOddCliques{1, {n - 2, 0, 0}}, a);
        CHECK(approx_equal(corrected, member));
        CHECK(beta_pm(n, a) < member);
      }
    }
  }

  TEST_CASE("corollaries at alpha = 1") {
    for (int n = 2; n <= 10; ++n) {
      for (int k = 1; k < n; ++k) CHECK(zeta1(n, k, 1) == 2.0 * (2 * n * n - 3 * n + 2 * k + 1));
    }
    for (int p = 4; p <= 14; ++p) {
      for (int k = 1; k <= p - 2; ++k) {
        if ((p - k) % 2 == 0) CHECK(zeta2(p, k, 1) / 2 == 0.5 * p * p - 1.5 * p + k + 1);
      }
    }
    const ClosedFormAudit pm = audit_closed_form(theorem::PerfectMatching{3}, 1);
    REQUIRE(pm.corollary.has_value());
    CHECK(pm.corollary->discrepancy != 0);
    const ClosedFormAudit nkd = audit_closed_form(theorem::NKD{8, 1, 1, 1}, 1);
    REQUIRE(nkd.corollary.has_value());
    CHECK(nkd.corollary->edge_bound == 22);
    CHECK(nkd.corollary->discrepancy == 0);
    CHECK_FALSE(audit_closed_form(theorem::PerfectMatching{3}, 2).corollary.has_value());
  }

  TEST_CASE("convexity diagnostics") {
    const ConvexityDiagnostic a = phi_convexity_check(theorem::ExtendPM{5, 1}, 1);
    CHECK(a.grid.lo == 0);
    CHECK(a.grid.hi == 3);
    CHECK(a.convex);
    CHECK(std::all_of(a.second_differences.begin(), a.second_differences.end(), [](double d) { return d >= 0; }));
    const ConvexityDiagnostic b = phi_convexity_check(theorem::PerfectMatching{4}, 2);
    CHECK(b.endpoint_max);
    CHECK((b.argmax == 1 || b.argmax == 3));
    const ConvexityDiagnostic c = phi_convexity_check(theorem::PerfectMatching{4}, 2, IntegerInterval{1, 2});
    CHECK(c.second_differences.empty());
    CHECK(c.convex);
    CHECK_THROWS_AS(phi_convexity_check(theorem::PerfectMatching{4}, -1), std::invalid_argument);
  }
}
