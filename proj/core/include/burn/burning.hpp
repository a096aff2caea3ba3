#pragma once

#include <vector>

#include "burn/hypergraph.hpp"

namespace burn {

/// Fire at the end of one round. burn_round[v] is the 1-based round at which
/// v caught fire, 0 while unburned.
struct FireState {
    VertexSet burned;
    std::vector<int> burn_round;
    int round = 0;
};

enum class ScheduleVerdict {
    ValidAndComplete,   // every source fresh, everything burned at the end
    ValidButIncomplete, // every source fresh, unburned vertices remain
    NonValid,           // some source was already on fire at the end of the previous round
};

/// A played-out source list with its per-round trace.
struct Schedule {
    std::vector<int> sources;
    std::vector<FireState> trace; // one entry per completed round
    ScheduleVerdict verdict = ScheduleVerdict::ValidButIncomplete;
    int invalid_round = 0; // 1-based round of the violation when NonValid

    bool valid_and_complete() const { return verdict == ScheduleVerdict::ValidAndComplete; }
    /// Rounds played; for a valid-and-complete schedule this is the round at
    /// which the instance finished burning.
    int rounds() const { return int(trace.size()); }
};

/// Result of an exact burning-number search. The witness re-simulates to
/// confirm the value.
struct BurnResult {
    int value = 0;
    Schedule witness;
    long long nodes_explored = 0;
    int lower_bound = 0;
    int upper_bound = 0;
};

/// Search guards are configuration, not constants; exceeding one raises
/// GuardExceeded rather than truncating silently. max_depth caps the search
/// depth (schedule length / witness cardinality); 0 means uncapped.
struct SolverGuard {
    int max_vertices = 18;
    int max_depth = 0;
};

struct SpreadGuard {
    int max_vertices = 12;
    int max_rounds = 6;
};

/// One synchronous propagation wave: the vertices outside `burned` having
/// some non-singleton edge whose other members are all burned. Pure; the
/// input is not modified.
VertexSet propagate_step(const Hypergraph& h, const VertexSet& burned);

/// Simulate sources u_1..u_k: in round r, propagation from F_{r-1} and the
/// ignition of u_r happen simultaneously. A source that this round's
/// propagation would ignite anyway is legal (redundant); a source already in
/// F_{r-1} makes the schedule non-valid at that round and stops the
/// simulation. Throws on an empty source list or an out-of-range index.
Schedule run_schedule(const Hypergraph& h, const std::vector<int>& sources);

/// True iff run_schedule reports valid-and-complete.
bool is_burning_sequence(const Hypergraph& h, const std::vector<int>& sources);

/// Exact maximum of |F_r| over all valid schedules, by exhaustive search with
/// state deduplication. If the instance can finish before round r the maximum
/// is |V|. Exponential; guarded.
int max_spread(const Hypergraph& h, int rounds, SpreadGuard guard = {});

/// Exact burning number with a witness schedule: iterative deepening on the
/// schedule length, DFS over source choices in ascending order with dominance
/// pruning (a source the current round's propagation already forces is only
/// considered in the final round), memoization of (round, burned-set) states,
/// and per-component relaxation tables for lower bounds and pruning.
/// Witness: the lexicographically smallest optimal source list among
/// schedules with no redundant source before the final round.
BurnResult burning_number_exact(const Hypergraph& h, SolverGuard guard = {});

/// Constructive schedule from a maximum independent set: burn its members in
/// ascending order, skipping any that already caught fire, then one more
/// round if needed. Length at most alpha(H)+1; verdict valid-and-complete.
/// Requires no singleton and no empty edges.
Schedule burn_via_independent_set(const Hypergraph& h);

} // namespace burn
