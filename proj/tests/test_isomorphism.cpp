#include <doctest.h>

#include "randic/isomorphism.hpp"
#include "support.hpp"

using namespace randic;

TEST_SUITE("isomorphism") {
  TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
      const Graph g = testing::random_graph(rng, trial % 13, 0.2 + 0.1 * (trial % 7));
      const Graph h = testing::random_relabel(rng, g);
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(are_isomorphic(g, h));
      if (g.order() <= 7) CHECK(testing::isomorphic_by_permutation(canonical_form(g), g));
    }
  }

  TEST_CASE("matcher and canonical keys agree with permutation search") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 3000; ++trial) {
      const int p = 2 + trial % 5;
      const Graph g = testing::random_graph(rng, p, 0.5);
      const Graph h = testing::random_graph(rng, p, 0.5);
      const bool truth = testing::isomorphic_by_permutation(g, h);
      CHECK(are_isomorphic(g, h) == truth);
      CHECK((canonical_key(g) == canonical_key(h)) == truth);
    }
  }

  TEST_CASE("regular graphs with the same degree sequence") {
    // C6 and two disjoint triangles are both 2-regular
    const Graph two_triangles = graph_union(complete(3), complete(3));
    CHECK_FALSE(are_isomorphic(cycle(6), two_triangles));
    CHECK(canonical_key(cycle(6)) != canonical_key(two_triangles));
    // K_{3,3} and the prism are both 3-regular on 6 vertices
    const Graph prism = add_edge(add_edge(add_edge(two_triangles, 0, 3), 1, 4), 2, 5);
    CHECK_FALSE(are_isomorphic(complete_bipartite(3, 3).graph, prism));
  }
}
