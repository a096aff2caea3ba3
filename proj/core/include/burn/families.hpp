#pragma once

#include <string>
#include <vector>

#include "burn/hypergraph.hpp"

namespace burn {

/// Generators for the witness families. Vertices are labeled "1".."n"
/// throughout; sequences below are 0-based indices into that order.

/// k consecutive vertices per edge, consecutive edges overlapping in k-1:
/// n vertices, max(0, n-k+1) edges. k=2 gives the graph path P_n.
/// (n >= 1 is accepted; n < k yields an edgeless instance, the path on fewer
/// vertices than one window.)
Hypergraph gen_tight_path(int k, int n);

/// m edges of size k, consecutive edges sharing exactly one vertex:
/// n = m(k-1)+1 vertices. Requires k >= 3, m >= 1.
Hypergraph gen_loose_path(int k, int m);

/// gen_loose_path by order; rejects n not congruent to 1 mod k-1.
Hypergraph gen_loose_path_order(int k, int n);

/// Loose path with explicit edge sizes (each >= 2), consecutive edges sharing
/// exactly one vertex. Covers the shapes reachable by trimming degree-one
/// vertices from a uniform loose path without creating singletons.
Hypergraph gen_loose_path_sizes(const std::vector<int>& sizes);

/// n vertices in one edge. Requires n >= 2.
Hypergraph gen_single_edge(int n);

/// Pairwise-disjoint edges of the given sizes (each >= 2), no extra vertices.
Hypergraph gen_disjoint_edges(const std::vector<int>& sizes);

/// Edges {v1,v2,vi} for i = 3..n: a shared pair fanning out to n-2 triples.
/// Requires n >= 3.
Hypergraph gen_star_family(int n);

/// Nested prefix edges {u1,u2}, {u1,u2,u3}, ..., {u1..un}. Requires n >= 3.
Hypergraph gen_nested_family(int n);

/// Triples {u1,u2,ui} for i = 3..n plus the edge {u3..un}. Requires n >= 5.
Hypergraph gen_strwk_family(int n);

/// Closed forms for 3-uniform tight paths: burning number ceil(sqrt(2n-1))
/// and the best possible burned count after r rounds, floor((r^2+1)/2).
/// Exact integer arithmetic throughout.
int tight3_burning_number(int n);
int tight3_max_spread(int r);

/// An optimal burning sequence for gen_tight_path(3, n), 0-based, of length
/// tight3_burning_number(n): seeds are spaced so the propagating fires never
/// overlap; when n is neither twice a square nor has 2n-1 square, the
/// sequence is built on the next such N and the N-n lowest vertices are cut,
/// re-seating the first seed at the new low end.
std::vector<int> tight3_optimal_sequence(int n);

/// Graph paths: burning number ceil(sqrt(n)) and an optimal 0-based sequence
/// for gen_tight_path(2, n), built the same way from the next square.
int path_burning_number(int n);
std::vector<int> path_optimal_sequence(int n);

/// CLI-facing family descriptor.
struct FamilySpec {
    enum class Id {
        TightPath,
        LoosePath,
        SingleEdge,
        DisjointEdges,
        Star,
        Nested,
        Strwk,
        GraphPath,
    };
    Id id{};
    int k = 0;
    int n = 0;
    int m = 0;
    std::vector<int> sizes;
};

/// Maps "tight-path", "loose-path", "single-edge", "disjoint-edges", "star",
/// "nested", "strwk", "graph-path". Throws std::invalid_argument otherwise.
FamilySpec::Id parse_family_id(const std::string& name);

/// Instantiate a family from its parameters; validates per generator.
Hypergraph make_family(const FamilySpec& spec);

} // namespace burn
