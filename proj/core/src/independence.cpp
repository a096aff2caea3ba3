#include "burn/independence.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "burn/errors.hpp"

namespace burn {

namespace {

struct IndepSearch {
    int n;
    std::vector<std::vector<uint64_t>> incident; // per vertex: masks of edges containing it
    uint64_t best_set = 0;
    int best = -1;

    // Decide vertices in ascending order, include-branch first. With the
    // strictly-greater update rule the first set reaching the final size is
    // the lexicographically smallest maximum set.
    void dfs(int v, uint64_t cur, int cnt) {
        if (cnt + (n - v) <= best) return;
        if (v == n) {
            if (cnt > best) {
                best = cnt;
                best_set = cur;
            }
            return;
        }
        uint64_t with = cur | (uint64_t{1} << v);
        bool ok = true;
        for (uint64_t em : incident[v])
            if ((em & ~with) == 0) {
                ok = false;
                break;
            }
        if (ok) dfs(v + 1, with, cnt + 1);
        dfs(v + 1, cur, cnt);
    }
};

} // namespace

VertexSet max_independent_set(const Hypergraph& h) {
    if (h.has_empty_edge())
        throw UndefinedValue("independence undefined: instance has an empty edge");
    const int n = h.vertex_count();
    if (n > 64) throw std::invalid_argument("independence search supports at most 64 vertices");

    IndepSearch s;
    s.n = n;
    s.incident.assign(n, {});
    for (int i = 0; i < h.edge_count(); ++i) {
        if (i > 0 && h.edge(i) == h.edge(i - 1)) continue; // parallel copies are redundant here
        uint64_t em = h.edge_mask(i).to_u64();
        for (int v : h.edge(i)) s.incident[v].push_back(em);
    }
    s.dfs(0, 0, 0);
    return VertexSet::from_u64(n, s.best_set);
}

int independence_number(const Hypergraph& h) {
    return max_independent_set(h).count();
}

} // namespace burn
