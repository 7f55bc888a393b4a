#include "randic/theorem.hpp"

#include <stdexcept>

#include "overloaded.hpp"

namespace randic {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("hypothesis violated: " + what);
}

int half_of_even(int order, std::string_view name) {
  if (order < 0 || order % 2 != 0) {
    throw std::invalid_argument(std::string(name) + " needs an even order, got " + std::to_string(order));
  }
  return order / 2;
}

}  // namespace

int theorem_order(const TheoremId& t) {
  return std::visit(Overloaded{
                        [](const theorem::BipExtendK0& x) { return 2 * x.n; },
                        [](const theorem::BipExtend& x) { return 2 * x.n; },
                        [](const theorem::ExtendPM& x) { return 2 * x.n; },
                        [](const theorem::PerfectMatching& x) { return 2 * x.n; },
                        [](const theorem::FactorCritical& x) { return x.p; },
                        [](const theorem::NKD& x) { return x.p; },
                    },
                    t);
}

PropertyKind theorem_property(const TheoremId& t) {
  return std::visit(Overloaded{
                        [](const theorem::BipExtendK0&) -> PropertyKind { return property::BipExtendable{0}; },
                        [](const theorem::BipExtend& x) -> PropertyKind { return property::BipExtendable{x.k}; },
                        [](const theorem::ExtendPM& x) -> PropertyKind { return property::Extendable{x.k}; },
                        [](const theorem::PerfectMatching&) -> PropertyKind {
                          return property::PerfectMatching{};
                        },
                        [](const theorem::FactorCritical& x) -> PropertyKind {
                          return property::FactorCritical{x.k};
                        },
                        [](const theorem::NKD& x) -> PropertyKind { return property::NKD{x.n, x.k, x.d}; },
                    },
                    t);
}

bool is_bipartite_theorem(const TheoremId& t) {
  return std::holds_alternative<theorem::BipExtendK0>(t) || std::holds_alternative<theorem::BipExtend>(t);
}

void check_hypotheses(const TheoremId& t) {
  std::visit(Overloaded{
                 [](const theorem::BipExtendK0& x) { require(x.n >= 3, "n >= 3"); },
                 [](const theorem::BipExtend& x) {
                   require(x.n >= 3, "n >= 3");
                   require(x.k >= 1 && x.k <= x.n - 1, "1 <= k <= n-1");
                 },
                 [](const theorem::ExtendPM& x) {
                   require(x.n >= 2, "n >= 2");
                   require(x.k >= 1 && x.k <= x.n - 1, "1 <= k <= n-1");
                 },
                 [](const theorem::PerfectMatching& x) { require(x.n >= 2, "n >= 2"); },
                 [](const theorem::FactorCritical& x) {
                   require(x.p >= 4, "p >= 4");
                   require(x.k >= 1 && x.k <= x.p - 2, "1 <= k <= p-2");
                   require((x.p - x.k) % 2 == 0, "k has the parity of p");
                 },
                 [](const theorem::NKD& x) {
                   require(x.n >= 1 && x.k >= 1 && x.d >= 1, "n, k, d >= 1");
                   require(x.p >= x.n + 2 * x.k + x.d + 2, "p >= n + 2k + d + 2");
                   require((x.p + x.n + x.d) % 2 == 0, "p + n + d even");
                 },
             },
             t);
}

bool alpha_regime_holds(const TheoremId& t, double alpha) {
  if (!(alpha > 0)) return false;
  const auto* nkd = std::get_if<theorem::NKD>(&t);
  if (nkd == nullptr || alpha >= 1.0) return true;
  return nkd->d <= (2.0 * nkd->n + 4.0 * nkd->k) / (1.0 - alpha) - 1.0;
}

TheoremId make_theorem(std::string_view name, int order) {
  const PropertyKind prop = parse_property(name);
  TheoremId t = std::visit(
      Overloaded{
          [&](const property::PerfectMatching&) -> TheoremId {
            return theorem::PerfectMatching{half_of_even(order, "pm")};
          },
          [&](const property::Extendable& p) -> TheoremId {
            return theorem::ExtendPM{half_of_even(order, "ext"), p.k};
          },
          [&](const property::BipExtendable& p) -> TheoremId {
            const int n = half_of_even(order, "bipext");
            if (p.k == 0) return theorem::BipExtendK0{n};
            return theorem::BipExtend{n, p.k};
          },
          [&](const property::FactorCritical& p) -> TheoremId { return theorem::FactorCritical{order, p.k}; },
          [&](const property::NKD& p) -> TheoremId { return theorem::NKD{order, p.n, p.k, p.d}; },
      },
      prop);
  check_hypotheses(t);
  return t;
}

std::string theorem_name(const TheoremId& t) { return to_string(theorem_property(t)); }

}  // namespace randic
