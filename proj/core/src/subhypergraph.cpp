#include "burn/subhypergraph.hpp"

#include <stdexcept>

namespace burn {

namespace {

struct Reindex {
    std::vector<int> local;          // old index -> new index (-1 outside W)
    std::vector<std::string> labels; // new index -> label
    int count = 0;

    Reindex(const Hypergraph& h, const VertexSet& w) : local(h.vertex_count(), -1) {
        if (w.universe() != h.vertex_count())
            throw std::invalid_argument("vertex set universe mismatch");
        if (w.empty()) throw std::invalid_argument("vertex subset must be nonempty");
        for (int v = w.first(); v >= 0; v = w.next(v)) {
            local[v] = count++;
            labels.push_back(h.label(v));
        }
    }
};

} // namespace

Hypergraph weak_induced_sub(const Hypergraph& h, const VertexSet& w) {
    Reindex ri(h, w);
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        std::vector<int> cut;
        for (int v : e)
            if (ri.local[v] >= 0) cut.push_back(ri.local[v]);
        if (!cut.empty()) edges.push_back(std::move(cut));
    }
    return Hypergraph(ri.count, std::move(edges), std::move(ri.labels));
}

Hypergraph strong_sub(const Hypergraph& h, const VertexSet& w,
                      const std::vector<int>& edge_indices) {
    Reindex ri(h, w);
    std::vector<std::vector<int>> edges;
    for (int i : edge_indices) {
        if (i < 0 || i >= h.edge_count()) throw std::invalid_argument("edge index out of range");
        if (!h.edge_mask(i).subset_of(w))
            throw std::invalid_argument("selected edge is not contained in the vertex subset");
        std::vector<int> mapped;
        for (int v : h.edge(i)) mapped.push_back(ri.local[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph(ri.count, std::move(edges), std::move(ri.labels));
}

Hypergraph strong_induced_sub(const Hypergraph& h, const VertexSet& w) {
    Reindex ri(h, w);
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (!h.edge_mask(i).subset_of(w)) continue;
        std::vector<int> mapped;
        for (int v : h.edge(i)) mapped.push_back(ri.local[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph(ri.count, std::move(edges), std::move(ri.labels));
}

} // namespace burn
