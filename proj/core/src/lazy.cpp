#include "burn/lazy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "burn/errors.hpp"
#include "burn/structure.hpp"

namespace burn {

LazyRun lazy_closure(const Hypergraph& h, const VertexSet& seeds) {
    if (seeds.universe() != h.vertex_count())
        throw std::invalid_argument("seed-set universe mismatch");
    LazyRun run{seeds, seeds, {}};
    while (true) {
        VertexSet wave = propagate_step(h, run.closure);
        if (wave.empty()) break;
        run.closure |= wave;
        run.waves.push_back(std::move(wave));
    }
    return run;
}

bool is_lazy_burning_set(const Hypergraph& h, const VertexSet& seeds) {
    return lazy_closure(h, seeds).closure.is_full();
}

namespace {

uint64_t propagate_u64(const std::vector<uint64_t>& edges, uint64_t burned) {
    uint64_t out = 0;
    for (uint64_t em : edges) {
        uint64_t u = em & ~burned;
        if (std::popcount(u) == 1) out |= u;
    }
    return out;
}

uint64_t closure_u64(const std::vector<uint64_t>& edges, uint64_t burned) {
    while (true) {
        uint64_t wave = propagate_u64(edges, burned);
        if (!wave) return burned;
        burned |= wave;
    }
}

} // namespace

LazyResult lazy_burning_number_exact(const Hypergraph& h, SolverGuard guard) {
    const int n = h.vertex_count();
    if (n > guard.max_vertices)
        throw GuardExceeded("lazy solver guard: " + std::to_string(n) + " vertices exceeds " +
                            std::to_string(guard.max_vertices));
    if (n > 63) throw GuardExceeded("lazy solver supports at most 63 vertices");

    const uint64_t full = (uint64_t{1} << n) - 1;
    std::vector<uint64_t> edges;
    for (const VertexSet& em : h.propagation_masks()) edges.push_back(em.to_u64());

    // Vertices no non-singleton edge can ever ignite; every lazy set has them.
    uint64_t reachable = 0;
    for (uint64_t em : edges) reachable |= em;
    const uint64_t mandatory = full & ~reachable;

    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
        if (!(mandatory >> v & 1)) candidates.push_back(v);

    const int components = int(component_partition(h).size());
    const int lb = std::max({1, n - effective_edge_count(h), components,
                             std::popcount(mandatory)});

    LazyResult result;
    result.lower_bound = lb;
    result.upper_bound = n;

    const int depth_cap = guard.max_depth > 0 ? std::min(guard.max_depth, n) : n;
    if (lb > depth_cap)
        throw GuardExceeded("lazy solver depth guard: need at least " + std::to_string(lb) +
                            " seeds, cap is " + std::to_string(guard.max_depth));

    for (int c = lb; c <= depth_cap; ++c) {
        const int t = c - std::popcount(mandatory);
        if (t < 0 || t > int(candidates.size())) continue;

        std::vector<int> pick(t);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            uint64_t seeds = mandatory;
            for (int i : pick) seeds |= uint64_t{1} << candidates[i];

            bool contains_edge = false;
            for (uint64_t em : edges)
                if ((em & ~seeds) == 0) {
                    contains_edge = true;
                    break;
                }
            if (!contains_edge) {
                ++result.nodes_explored;
                if (closure_u64(edges, seeds) == full) {
                    result.value = c;
                    result.witness = VertexSet::from_u64(n, seeds);
                    return result;
                }
            }

            // next combination in lexicographic order
            int i = t - 1;
            while (i >= 0 && pick[i] == int(candidates.size()) - t + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (depth_cap < n)
        throw GuardExceeded("lazy solver depth guard: no lazy set within " +
                            std::to_string(guard.max_depth) + " seeds");
    throw std::logic_error("lazy search exhausted cardinalities"); // V itself always succeeds
}

VertexSet lazy_set_from_sequence(const Hypergraph& h, const Schedule& schedule) {
    if (!schedule.valid_and_complete())
        throw std::invalid_argument("schedule must be valid-and-complete");
    const int last = schedule.sources.back();
    if (h.degree(last) == 0)
        throw std::invalid_argument("final source is an isolated vertex");

    VertexSet seeds(h.vertex_count());
    for (size_t i = 0; i + 1 < schedule.sources.size(); ++i) seeds.set(schedule.sources[i]);
    if (!is_lazy_burning_set(h, seeds))
        throw std::logic_error("prefix of a complete schedule failed to burn lazily");
    return seeds;
}

} // namespace burn
