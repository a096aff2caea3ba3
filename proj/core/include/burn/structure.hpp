#pragma once

#include <optional>
#include <vector>

#include "burn/hypergraph.hpp"

namespace burn {

/// Structural facts about a hypergraph, computed in one pass.
struct StructuralProfile {
    bool is_simple;                  // no duplicate edges, no edges of size <= 1
    bool is_linear;                  // any two distinct edges meet in at most one vertex
    std::optional<int> uniform_k;    // edge size when all edges agree (nullopt if edgeless)
    VertexSet isolated_vertices;     // degree-0 vertices
    int effective_edge_count;        // edges that are not empty, singleton or duplicate
    std::vector<VertexSet> component_partition; // ordered by smallest member
};

StructuralProfile structural_profile(const Hypergraph& h);

/// Count of edges that are not empty, singleton, or duplicates of an earlier
/// parallel edge (the first edge of each parallel class in canonical order is
/// the original).
int effective_edge_count(const Hypergraph& h);

/// Vertex partition into connected components, ordered by smallest member.
/// Isolated vertices form their own singleton components.
std::vector<VertexSet> component_partition(const Hypergraph& h);

/// The components as hypergraphs with dense re-indexed vertices (labels
/// preserved). Edges follow the component of their members; empty edges
/// belong to no component and are dropped.
std::vector<Hypergraph> connected_components(const Hypergraph& h);

/// The graph on V(H) joining u,v whenever {u,v} is contained in some edge.
/// Result is 2-uniform and simple; a graph input is a fixed point.
Hypergraph two_section(const Hypergraph& h);

} // namespace burn
