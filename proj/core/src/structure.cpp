#include "burn/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace burn {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int effective_edge_count(const Hypergraph& h) {
    return int(h.propagation_masks().size());
}

std::vector<VertexSet> component_partition(const Hypergraph& h) {
    const int n = h.vertex_count();
    Dsu dsu(n);
    for (const auto& e : h.edges())
        for (size_t i = 1; i < e.size(); ++i) dsu.unite(e[0], e[i]);

    std::map<int, VertexSet> by_root;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = by_root.try_emplace(dsu.find(v), VertexSet(n));
        it->second.set(v);
    }

    std::vector<VertexSet> out;
    out.reserve(by_root.size());
    for (auto& [root, set] : by_root) out.push_back(std::move(set));
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return out;
}

std::vector<Hypergraph> connected_components(const Hypergraph& h) {
    auto parts = component_partition(h);
    const int n = h.vertex_count();

    std::vector<int> comp_of(n, -1), local(n, -1);
    std::vector<std::vector<int>> verts(parts.size());
    for (size_t c = 0; c < parts.size(); ++c) {
        for (int v = parts[c].first(); v >= 0; v = parts[c].next(v)) {
            comp_of[v] = int(c);
            local[v] = int(verts[c].size());
            verts[c].push_back(v);
        }
    }

    std::vector<std::vector<std::vector<int>>> edges(parts.size());
    for (const auto& e : h.edges()) {
        if (e.empty()) continue; // empty edges belong to no component
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(local[v]);
        edges[comp_of[e[0]]].push_back(std::move(mapped));
    }

    std::vector<Hypergraph> out;
    out.reserve(parts.size());
    for (size_t c = 0; c < parts.size(); ++c) {
        std::vector<std::string> labels;
        labels.reserve(verts[c].size());
        for (int v : verts[c]) labels.push_back(h.label(v));
        out.emplace_back(int(verts[c].size()), std::move(edges[c]), std::move(labels));
    }
    return out;
}

Hypergraph two_section(const Hypergraph& h) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) pairs.insert({e[i], e[j]});

    std::vector<std::vector<int>> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.push_back({a, b});
    return Hypergraph(h.vertex_count(), std::move(edges), h.labels());
}

StructuralProfile structural_profile(const Hypergraph& h) {
    StructuralProfile p{
        .is_simple = true,
        .is_linear = true,
        .uniform_k = std::nullopt,
        .isolated_vertices = VertexSet(h.vertex_count()),
        .effective_edge_count = effective_edge_count(h),
        .component_partition = component_partition(h),
    };

    const auto& edges = h.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].size() <= 1) p.is_simple = false;
        if (i > 0 && edges[i] == edges[i - 1]) p.is_simple = false;
    }

    for (size_t i = 0; i < edges.size() && p.is_linear; ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            VertexSet meet = h.edge_mask(i) & h.edge_mask(j);
            if (meet.count() > 1) {
                p.is_linear = false;
                break;
            }
        }

    if (!edges.empty()) {
        size_t k = edges[0].size();
        bool uniform = std::all_of(edges.begin(), edges.end(),
                                   [&](const auto& e) { return e.size() == k; });
        if (uniform) p.uniform_k = int(k);
    }

    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 0) p.isolated_vertices.set(v);

    return p;
}

} // namespace burn
