#include "burn/burning.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "burn/errors.hpp"
#include "burn/independence.hpp"
#include "burn/lazy.hpp"
#include "burn/structure.hpp"

namespace burn {

VertexSet propagate_step(const Hypergraph& h, const VertexSet& burned) {
    if (burned.universe() != h.vertex_count())
        throw std::invalid_argument("burned-set universe mismatch");
    VertexSet out(h.vertex_count());
    for (const VertexSet& em : h.propagation_masks()) {
        VertexSet unburned = em - burned;
        if (unburned.count() == 1) out |= unburned;
    }
    return out;
}

Schedule run_schedule(const Hypergraph& h, const std::vector<int>& sources) {
    const int n = h.vertex_count();
    if (sources.empty()) throw std::invalid_argument("source list must be nonempty");
    for (int u : sources)
        if (u < 0 || u >= n) throw std::invalid_argument("source index out of range");

    Schedule s;
    s.sources = sources;
    VertexSet burned(n);
    std::vector<int> burn_round(n, 0);

    for (int r = 1; r <= int(sources.size()); ++r) {
        int u = sources[r - 1];
        if (burned.test(u)) {
            s.verdict = ScheduleVerdict::NonValid;
            s.invalid_round = r;
            return s;
        }
        VertexSet prop = propagate_step(h, burned);
        for (int v = prop.first(); v >= 0; v = prop.next(v)) burn_round[v] = r;
        burn_round[u] = r;
        burned |= prop;
        burned.set(u);
        s.trace.push_back(FireState{burned, burn_round, r});
    }
    s.verdict = burned.is_full() ? ScheduleVerdict::ValidAndComplete
                                 : ScheduleVerdict::ValidButIncomplete;
    return s;
}

bool is_burning_sequence(const Hypergraph& h, const std::vector<int>& sources) {
    return run_schedule(h, sources).valid_and_complete();
}

// ---------------------------------------------------------------------------
// Solver internals. All masks below are single 64-bit words; the guards keep
// instances far under that width.
// ---------------------------------------------------------------------------

namespace {

uint64_t propagate_u64(const std::vector<uint64_t>& edges, uint64_t burned) {
    uint64_t out = 0;
    for (uint64_t em : edges) {
        uint64_t u = em & ~burned;
        if (std::popcount(u) == 1) out |= u;
    }
    return out;
}

// Components above this order skip the relaxation tables (2^n entries).
constexpr int kTableLimit = 20;

// Per-component relaxations, indexed by the component's local burned mask:
//   min_rounds[m]: rounds to burn the component fully from m when a source is
//                  available every round but optional (a lower bound on the
//                  rounds the real, shared-source game needs);
//   min_seeds[m]:  seeds that must still be placed in the component for its
//                  propagation closure to cover it (a lower bound on the
//                  sources the real game must still spend there).
struct ComponentRelaxation {
    std::vector<int> verts; // global indices, ascending
    int n = 0;
    uint64_t full = 0;
    std::vector<uint64_t> edges; // local unique non-singleton edge masks
    bool has_tables = false;
    std::vector<uint8_t> min_rounds;
    std::vector<uint8_t> min_seeds;
    int effective_edges = 0;
};

ComponentRelaxation build_relaxation(const Hypergraph& h, const VertexSet& part) {
    ComponentRelaxation c;
    c.verts = part.to_vector();
    c.n = int(c.verts.size());
    c.full = (c.n == 64) ? ~uint64_t{0} : (uint64_t{1} << c.n) - 1;

    std::vector<int> local(h.vertex_count(), -1);
    for (int i = 0; i < c.n; ++i) local[c.verts[i]] = i;
    for (const VertexSet& em : h.propagation_masks()) {
        int head = em.first();
        if (local[head] < 0) continue;
        uint64_t m = 0;
        for (int v = head; v >= 0; v = em.next(v)) m |= uint64_t{1} << local[v];
        c.edges.push_back(m);
    }
    c.effective_edges = int(c.edges.size());

    if (c.n > kTableLimit) return c;
    c.has_tables = true;
    const size_t size = size_t{1} << c.n;
    c.min_rounds.assign(size, 0);
    c.min_seeds.assign(size, 0);

    std::vector<std::vector<uint32_t>> bucket(c.n + 1);
    for (uint64_t m = 0; m < size; ++m) bucket[std::popcount(m)].push_back(uint32_t(m));

    for (int pc = c.n - 1; pc >= 0; --pc) {
        for (uint32_t m32 : bucket[pc]) {
            uint64_t m = m32;
            uint64_t base = m | propagate_u64(c.edges, m);
            int best_rounds = INT_MAX;
            if (base != m) best_rounds = c.min_rounds[base];
            for (uint64_t cand = c.full & ~base; cand;) {
                uint64_t bit = cand & -cand;
                cand ^= bit;
                best_rounds = std::min(best_rounds, int(c.min_rounds[base | bit]));
            }
            c.min_rounds[m] = uint8_t(best_rounds + 1);

            if (base != m) {
                c.min_seeds[m] = c.min_seeds[base];
            } else {
                int best_seeds = INT_MAX;
                for (uint64_t cand = c.full & ~m; cand;) {
                    uint64_t bit = cand & -cand;
                    cand ^= bit;
                    best_seeds = std::min(best_seeds, int(c.min_seeds[m | bit]));
                }
                c.min_seeds[m] = uint8_t(best_seeds + 1);
            }
        }
    }
    return c;
}

struct BurnSearch {
    int n = 0;
    uint64_t full = 0;
    std::vector<uint64_t> edges; // unique non-singleton edge masks, global
    std::vector<ComponentRelaxation> comps;

    int k = 0;
    long long nodes = 0;
    std::vector<int> path;
    std::vector<std::unordered_set<uint64_t>> seen;

    uint64_t local_mask(uint64_t burned, const ComponentRelaxation& c) const {
        uint64_t m = 0;
        for (int i = 0; i < c.n; ++i)
            if (burned >> c.verts[i] & 1) m |= uint64_t{1} << i;
        return m;
    }

    bool prune(int r, uint64_t burned) {
        const int remaining = k - r + 1;
        int seeds_needed = 0;
        std::vector<int> untouched;
        for (const auto& c : comps) {
            uint64_t lm = local_mask(burned, c);
            if (lm == c.full) continue;
            if (c.has_tables) {
                if (c.min_rounds[lm] > remaining) return true;
                seeds_needed += c.min_seeds[lm];
                if (lm == 0) untouched.push_back(c.min_rounds[0]);
            } else {
                int unburned = c.n - std::popcount(lm);
                int live = 0;
                for (uint64_t em : c.edges)
                    if (em & ~lm) ++live;
                seeds_needed += std::max(unburned - live, lm == 0 ? 1 : 0);
                if (lm == 0) untouched.push_back(std::max(c.n >= 2 ? 2 : 1, c.n - c.effective_edges));
            }
        }
        if (seeds_needed > remaining) return true;
        std::sort(untouched.rbegin(), untouched.rend());
        for (size_t j = 0; j < untouched.size(); ++j)
            if (untouched[j] + int(j) > remaining) return true;
        return false;
    }

    bool dfs(int r, uint64_t burned) {
        ++nodes;
        if (burned == full) return false; // no fresh source exists
        if (prune(r, burned)) return false;
        if (!seen[r].insert(burned).second) return false;

        uint64_t base = burned | propagate_u64(edges, burned);
        if (r == k) {
            uint64_t need = full & ~base;
            if (need == 0) {
                path[r - 1] = std::countr_zero(full & ~burned);
                return true;
            }
            if (std::popcount(need) == 1) {
                path[r - 1] = std::countr_zero(need);
                return true;
            }
            return false;
        }
        if (base == full) return false; // would finish early, leaving round k sourceless

        // Dominance: sources this round's propagation already ignites are
        // skipped before the final round. Safe: replacing such a source with
        // any other fresh vertex never shrinks the burned set, and repairing
        // later collisions the same way terminates, so some optimal schedule
        // free of early redundant sources always survives.
        for (uint64_t cand = full & ~base; cand;) {
            uint64_t bit = cand & -cand;
            cand ^= bit;
            if (dfs(r + 1, base | bit)) {
                path[r - 1] = std::countr_zero(bit);
                return true;
            }
        }
        return false;
    }
};

} // namespace

BurnResult burning_number_exact(const Hypergraph& h, SolverGuard guard) {
    const int n = h.vertex_count();
    if (n > guard.max_vertices)
        throw GuardExceeded("burning solver guard: " + std::to_string(n) + " vertices exceeds " +
                            std::to_string(guard.max_vertices));
    if (n > 63) throw GuardExceeded("burning solver supports at most 63 vertices");

    BurnSearch s;
    s.n = n;
    s.full = (uint64_t{1} << n) - 1;
    for (const VertexSet& em : h.propagation_masks()) s.edges.push_back(em.to_u64());

    auto parts = component_partition(h);
    bool all_tables = true;
    for (const auto& part : parts) {
        s.comps.push_back(build_relaxation(h, part));
        all_tables = all_tables && s.comps.back().has_tables;
    }

    // Lower bound: lazy number (plus one when the strict inequality applies),
    // vertices minus effective edges, and the staggered component bound.
    int b_lazy;
    if (all_tables) {
        b_lazy = 0;
        for (const auto& c : s.comps) b_lazy += c.min_seeds[0];
    } else {
        b_lazy = lazy_burning_number_exact(h, SolverGuard{n}).value;
    }
    // The strict bound b_lazy < b needs every vertex to be reachable by
    // propagation, i.e. on some non-singleton edge; a vertex incident only to
    // singleton edges can force b = b_lazy even without isolated vertices.
    uint64_t covered = 0;
    for (uint64_t em : s.edges) covered |= em;
    const bool every_vertex_ignitable = covered == s.full;

    int lb = std::max(1, n - effective_edge_count(h));
    lb = std::max(lb, b_lazy + ((every_vertex_ignitable && n >= 2) ? 1 : 0));
    {
        std::vector<int> starts;
        for (const auto& c : s.comps)
            starts.push_back(c.has_tables ? c.min_rounds[0]
                                          : std::max(c.n >= 2 ? 2 : 1, c.n - c.effective_edges));
        std::sort(starts.rbegin(), starts.rend());
        for (size_t j = 0; j < starts.size(); ++j) lb = std::max(lb, starts[j] + int(j));
    }

    int ub = n;
    if (!h.has_empty_edge() && !h.has_singleton_edge())
        ub = std::min(ub, independence_number(h) + 1);

    const int depth_cap = guard.max_depth > 0 ? guard.max_depth : INT_MAX;
    if (lb > depth_cap)
        throw GuardExceeded("burning solver depth guard: need at least " + std::to_string(lb) +
                            " rounds, cap is " + std::to_string(guard.max_depth));

    for (int k = lb; k <= std::min(std::max(ub, lb), depth_cap); ++k) {
        s.k = k;
        s.path.assign(k, -1);
        s.seen.assign(k + 1, {});
        if (s.dfs(1, 0)) {
            BurnResult result;
            result.value = k;
            result.witness = run_schedule(h, s.path);
            result.nodes_explored = s.nodes;
            result.lower_bound = lb;
            result.upper_bound = ub;
            if (!result.witness.valid_and_complete() || result.witness.rounds() != k)
                throw std::logic_error("witness failed re-simulation");
            return result;
        }
    }
    if (depth_cap < std::max(ub, lb))
        throw GuardExceeded("burning solver depth guard: no schedule within " +
                            std::to_string(guard.max_depth) + " rounds");
    throw std::logic_error("burning search exhausted its bounds");
}

int max_spread(const Hypergraph& h, int rounds, SpreadGuard guard) {
    if (rounds < 1) throw std::invalid_argument("round count must be at least 1");
    const int n = h.vertex_count();
    if (n > guard.max_vertices || rounds > guard.max_rounds)
        throw GuardExceeded("spread guard: instance " + std::to_string(n) + " vertices / " +
                            std::to_string(rounds) + " rounds exceeds " +
                            std::to_string(guard.max_vertices) + "/" +
                            std::to_string(guard.max_rounds));
    if (n > 63) throw GuardExceeded("spread search supports at most 63 vertices");

    const uint64_t full = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<uint64_t> edges;
    for (const VertexSet& em : h.propagation_masks()) edges.push_back(em.to_u64());

    int best = 0;
    std::vector<std::unordered_set<uint64_t>> seen(rounds + 1);

    auto rec = [&](auto&& self, int r, uint64_t burned) -> void {
        if (best == n) return;
        if (burned == full) {
            best = n; // finished early; fire persists through round `rounds`
            return;
        }
        if (r > rounds) {
            best = std::max(best, std::popcount(burned));
            return;
        }
        if (!seen[r].insert(burned).second) return;
        uint64_t base = burned | propagate_u64(edges, burned);
        uint64_t cand = full & ~base;
        if (cand == 0) {
            self(self, r + 1, base); // every unburned vertex is forced this round
            return;
        }
        while (cand) {
            uint64_t bit = cand & -cand;
            cand ^= bit;
            self(self, r + 1, base | bit);
        }
    };
    rec(rec, 1, 0);
    return best;
}

Schedule burn_via_independent_set(const Hypergraph& h) {
    if (h.has_empty_edge() || h.has_singleton_edge())
        throw std::invalid_argument("construction requires no singleton or empty edges");

    auto members = max_independent_set(h).to_vector(); // ascending
    const int n = h.vertex_count();
    VertexSet burned(n);
    std::vector<int> sources;
    size_t idx = 0;

    while (int(sources.size()) < n) {
        VertexSet prop = propagate_step(h, burned);
        while (idx < members.size() && burned.test(members[idx])) ++idx;
        int src;
        if (idx < members.size()) {
            src = members[idx++];
        } else {
            VertexSet unburned = h.full_set() - burned;
            if (unburned.empty()) break;
            src = unburned.first(); // redundant closing source
        }
        burned |= prop;
        burned.set(src);
        sources.push_back(src);
        if (burned.is_full()) break;
    }

    Schedule s = run_schedule(h, sources);
    if (!s.valid_and_complete())
        throw std::logic_error("independent-set schedule failed to complete");
    return s;
}

} // namespace burn
