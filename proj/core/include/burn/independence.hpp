#pragma once

#include "burn/hypergraph.hpp"

namespace burn {

/// Largest vertex set containing no whole edge, found by exact branch and
/// bound (include/exclude on ascending vertices, bound = |current| +
/// |remaining|). Deterministic: returns the lexicographically smallest
/// maximum set. Exactness over speed; intended for n <= 25.
///
/// Throws UndefinedValue when an empty edge is present: the empty edge is a
/// subset of every vertex set, so no set (not even the empty one) is
/// independent.
VertexSet max_independent_set(const Hypergraph& h);

/// alpha(H) = |max_independent_set(H)|.
int independence_number(const Hypergraph& h);

} // namespace burn
