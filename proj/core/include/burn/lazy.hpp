#pragma once

#include <vector>

#include "burn/burning.hpp"
#include "burn/hypergraph.hpp"

namespace burn {

/// A lazy burning run: seeds, the propagation closure they reach, and the
/// synchronous waves in between. The waves are disjoint and together with the
/// seeds cover the closure; the closure is a fixed point of propagate_step.
struct LazyRun {
    VertexSet initial;
    VertexSet closure;
    std::vector<VertexSet> waves; // newly burned vertices per step
};

/// Result of the exact lazy-number search.
struct LazyResult {
    int value = 0;
    VertexSet witness;
    long long nodes_explored = 0; // candidate sets whose closure was computed
    int lower_bound = 0;
    int upper_bound = 0;
};

inline SolverGuard lazy_default_guard() { return SolverGuard{22}; }

/// Iterate propagate_step from S to its fixed point, recording each wave.
LazyRun lazy_closure(const Hypergraph& h, const VertexSet& seeds);

/// True iff the closure of S covers every vertex.
bool is_lazy_burning_set(const Hypergraph& h, const VertexSet& seeds);

/// Exact lazy burning number with a witness set. Mandatory seeds (vertices on
/// no non-singleton edge, so propagation can never reach them) are fixed
/// first; then candidate sets are enumerated by increasing cardinality from
/// max(|V| - effective edges, component count) upward, skipping any set that
/// contains a whole non-singleton edge (such a set is never optimal: dropping
/// one member of that edge keeps the closure complete). The first complete
/// cardinality is optimal by construction; within it, sets are tried in
/// lexicographic order, so the witness is the lexicographically smallest
/// optimal set.
LazyResult lazy_burning_number_exact(const Hypergraph& h, SolverGuard guard = lazy_default_guard());

/// The sources of a valid-and-complete schedule minus its final source form a
/// lazy burning set whenever the final source is not isolated. Throws when
/// the schedule is not valid-and-complete or the last source is isolated.
VertexSet lazy_set_from_sequence(const Hypergraph& h, const Schedule& schedule);

} // namespace burn
