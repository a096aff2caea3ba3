#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burn/vertex_set.hpp"

namespace burn {

/// Finite hypergraph on dense vertex indices 0..n-1 with an ordered edge
/// multiset. Edges are sets (no repeated members); duplicate, singleton and
/// empty edges are all representable. Construction normalizes to canonical
/// form: members of each edge sorted ascending, edge list sorted
/// lexicographically (so parallel edges sit adjacent).
///
/// String labels are a presentation-layer bijection; all computations work on
/// indices. Immutable after construction.
class Hypergraph {
public:
    /// `labels` empty means default labels "0".."n-1".
    Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
               std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_.at(i); }
    const VertexSet& edge_mask(int i) const { return edge_masks_.at(i); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    std::optional<int> index_of_label(std::string_view label) const;

    /// Number of edges containing v (all edges, singletons included).
    int degree(int v) const { return degree_.at(v); }

    /// Deduplicated masks of the non-singleton edges; the only edges that can
    /// ever propagate fire. Their count equals the effective edge count.
    const std::vector<VertexSet>& propagation_masks() const { return prop_masks_; }

    bool has_empty_edge() const { return has_empty_edge_; }
    bool has_singleton_edge() const { return has_singleton_edge_; }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet full_set() const { return VertexSet::full(n_); }

    /// Strict field equality (vertex count, canonical edges, labels).
    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

private:
    int n_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::string> labels_;
    std::vector<VertexSet> edge_masks_;
    std::vector<VertexSet> prop_masks_;
    std::vector<int> degree_;
    bool has_empty_edge_ = false;
    bool has_singleton_edge_ = false;
};

} // namespace burn
