#pragma once

#include <string>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

/// Backtracking permutation search. Vertices are mapped in order of
/// decreasing degree and candidates must match degree and all adjacencies to
/// already-mapped vertices. Intended for p <= 12.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Relabelled copy of `g` that is identical for all graphs isomorphic to `g`.
///
/// Individualisation-refinement search: colour refinement to an equitable
/// ordered partition, then branching on the first non-singleton cell. Twin
/// vertices (same neighbourhood apart from each other) are explored once, since
/// swapping them is an automorphism. The lexicographically least adjacency-row
/// vector over all leaves is the canonical form.
Graph canonical_form(const Graph& g);

/// graph6 of canonical_form(g); a convenient isomorphism-class key.
std::string canonical_key(const Graph& g);

}  // namespace randic
