#pragma once

#include <vector>

#include "burn/hypergraph.hpp"

namespace burn {

/// Weak induced subhypergraph on W: edge multiset { e ∩ W : e ∈ E, e ∩ W ≠ ∅ }
/// with one entry per original edge, so parallel restrictions are preserved
/// and singletons may appear. W must be nonempty. Vertices are re-indexed
/// densely in ascending order; labels carry over.
Hypergraph weak_induced_sub(const Hypergraph& h, const VertexSet& w);

/// Strong subhypergraph (W, selected edges). Every selected edge must be
/// contained in W; edge indices refer to the canonical edge order of h.
Hypergraph strong_sub(const Hypergraph& h, const VertexSet& w,
                      const std::vector<int>& edge_indices);

/// Strong induced subhypergraph H[W]: (W, { e ∈ E : e ⊆ W }).
Hypergraph strong_induced_sub(const Hypergraph& h, const VertexSet& w);

} // namespace burn
