#pragma once

// Small named instances used across the suites.

#include "burn/hypergraph.hpp"

namespace fixtures {

/// One 3-edge {x,z,w} plus the isolated vertex y. In index order (x,y,z,w):
/// b_L = b = 3, effective edges 1, alpha = 3, all lower bounds tight at once.
inline burn::Hypergraph single_edge_plus_isolated() {
    return burn::Hypergraph(4, {{0, 2, 3}}, {"x", "y", "z", "w"});
}

/// Tight 3-uniform paths of orders 6 and 5 side by side, labels "1".."11".
/// Component burning numbers 4 and 3; the union burns in 5.
inline burn::Hypergraph two_tight3_paths() {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 2 < 6; ++i) edges.push_back({i, i + 1, i + 2});
    for (int i = 6; i + 2 < 11; ++i) edges.push_back({i, i + 1, i + 2});
    std::vector<std::string> labels;
    for (int v = 1; v <= 11; ++v) labels.push_back(std::to_string(v));
    return burn::Hypergraph(11, std::move(edges), std::move(labels));
}

/// Tight 3-uniform path on 10, one 3-edge, one 2-edge; labels "1".."15".
/// Component burning numbers 5, 3, 2; the union burns in 6, strictly under
/// the sum-minus-k-plus-1 bound of 8.
inline burn::Hypergraph tight3_plus_triple_plus_pair() {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 2 < 10; ++i) edges.push_back({i, i + 1, i + 2});
    edges.push_back({10, 11, 12});
    edges.push_back({13, 14});
    std::vector<std::string> labels;
    for (int v = 1; v <= 15; ++v) labels.push_back(std::to_string(v));
    return burn::Hypergraph(15, std::move(edges), std::move(labels));
}

/// Three overlapping triples on u1..u5 (labels "1".."5"): restricting to
/// {u2..u5} gives a strong part of two triples and a weak part that adds the
/// pair {u2,u5}; both restrictions share b_L = 2 and b = 3.
inline burn::Hypergraph overlapping_triples() {
    std::vector<std::string> labels{"1", "2", "3", "4", "5"};
    return burn::Hypergraph(5, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}}, std::move(labels));
}

/// Two overlapping 3-windows on u1..u4 (the order-4 tight 3-path).
inline burn::Hypergraph two_windows_on_four() {
    return burn::Hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
}

/// Star on u1 with leaves u2..u4 plus one edge over the leaves:
/// b_L = 1, b = 2; the strong part induced by the leaves is a bare 3-edge
/// with b_L = 2, b = 3.
inline burn::Hypergraph star_plus_leaf_edge() {
    return burn::Hypergraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}});
}

/// One long 6-edge chained to a pair and a triple on u6..u8:
/// b_L = 5, b = 6; the strong part on {u6,u7,u8} drops to b_L = 1, b = 2.
/// Canonical edge order: {u1..u6} < {u6,u7} < {u6,u7,u8}.
inline burn::Hypergraph long_edge_chain() {
    return burn::Hypergraph(8, {{0, 1, 2, 3, 4, 5}, {5, 6, 7}, {5, 6}});
}

} // namespace fixtures
