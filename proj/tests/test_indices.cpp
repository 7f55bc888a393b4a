#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "randic/indices.hpp"
#include "support.hpp"

using namespace randic;

TEST_SUITE("indices") {
  TEST_CASE("Alpha rejects zero and non-finite values") {
    CHECK_THROWS_AS(Alpha{0.0}, std::invalid_argument);
    CHECK_THROWS_AS(Alpha{NAN}, std::invalid_argument);
    CHECK_THROWS_AS(Alpha{INFINITY}, std::invalid_argument);
    CHECK(Alpha(2.0).as_positive_integer() == 2);
    CHECK_FALSE(Alpha(2.5).as_positive_integer().has_value());
    CHECK_FALSE(Alpha(-1.0).as_positive_integer().has_value());
  }

  TEST_CASE("small values") {
    CHECK(zeroth_order_randic(complete(4), Alpha(2)) == 36);
    CHECK(zeroth_order_randic(path(3), Alpha(1)) == 4);
    CHECK(zeroth_order_randic(complete_bipartite(1, 3).graph, Alpha(-1)) == doctest::Approx(3.0 + 1.0 / 3.0));
    CHECK(zeroth_order_randic(empty_graph(3), Alpha(0.5)) == 0.0);
    CHECK_THROWS_AS(zeroth_order_randic(empty_graph(3), Alpha(-0.5)), std::domain_error);
  }

  TEST_CASE("edge delta examples") {
    CHECK(index_delta_for_edge(empty_graph(2), 0, 1, Alpha(1)) == 2);
    CHECK(index_delta_for_edge(empty_graph(2), 0, 1, Alpha(2)) == 2);
    CHECK(index_delta_for_edge(path(3), 0, 2, Alpha(-1)) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(index_delta_for_edge(path(3), 0, 1, Alpha(1)), std::invalid_argument);
    CHECK_THROWS_AS(index_delta_for_edge(path(3), 1, 1, Alpha(1)), std::invalid_argument);
  }

  TEST_CASE("alpha = 1 is twice the edge count; alpha = 2, 3 match degree sums") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const Graph g = testing::random_graph(rng, 1 + trial % 12, 0.5);
      long long sq = 0;
      long long cube = 0;
      for (int d : g.degrees()) {
        sq += 1LL * d * d;
        cube += 1LL * d * d * d;
      }
      CHECK(zeroth_order_randic(g, Alpha(1)) == 2.0 * g.edge_count());
      CHECK(zeroth_order_randic_exact(g, 2) == sq);
      CHECK(zeroth_order_randic(g, Alpha(3)) == static_cast<double>(cube));
    }
  }

  TEST_CASE("exact and floating paths agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = testing::random_graph(rng, 2 + trial % 20, 0.5);
      for (int e = 1; e <= 4; ++e) {
        double by_pow = 0.0;
        for (int d : g.degrees()) by_pow += std::pow(d, e);
        CHECK(approx_equal(static_cast<double>(zeroth_order_randic_exact(g, e)), by_pow));
      }
    }
  }

  TEST_CASE("delta equals the difference of indices") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
      const Graph g = testing::random_graph(rng, 2 + trial % 9, 0.5);
      for (double a : {0.5, 1.0, 2.0, 3.0, -1.0, -0.5}) {
        const Alpha alpha(a);
        for (auto [u, v] : g.non_edges()) {
          if (a > 0) {
            const double delta = index_delta_for_edge(g, u, v, alpha);
            CHECK(delta > 0);
            CHECK(approx_equal(delta, zeroth_order_randic(add_edge(g, u, v), alpha) - zeroth_order_randic(g, alpha),
                               1e-12));
          } else if (g.degree(u) > 0 && g.degree(v) > 0) {
            CHECK(index_delta_for_edge(g, u, v, alpha) < 0);
          }
        }
      }
    }
  }

  TEST_CASE("tolerance helpers") {
    CHECK(approx_equal(1e12, 1e12 + 1));
    CHECK_FALSE(approx_equal(1.0, 1.001));
    CHECK(approx_at_least(18.0, 18.0 + 1e-12));
    CHECK_FALSE(approx_at_least(17.9, 18.0));
  }
}
