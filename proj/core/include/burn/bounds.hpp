#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burn/burning.hpp"
#include "burn/hypergraph.hpp"
#include "burn/lazy.hpp"

namespace burn {

/// One inequality of the chain, with enough numbers to recompute the verdict.
/// Gated inequalities carry applicable=false and the reason instead of a
/// verdict; `tight` means the bound is met with no slack (lhs == rhs for <=,
/// rhs - lhs == 1 for strict <).
struct InequalityVerdict {
    std::string name;
    bool applicable = false;
    std::string gate_reason; // empty when applicable
    long long lhs = 0;
    long long rhs = 0;
    bool strict = false; // the inequality is lhs < rhs rather than lhs <= rhs
    bool holds = false;
    bool tight = false;
};

struct BoundsOptions {
    SolverGuard burn_guard{};
    SolverGuard lazy_guard = lazy_default_guard();
};

/// Every parameter and inequality verdict for one instance:
/// n - E <= b_L <= b <= n always; b_L < b gated on "no isolated vertices and
/// n >= 2"; the alpha bounds gated on "no singleton or empty edges"; the full
/// chain gated on "simple with no isolated vertices".
struct BoundsReport {
    int n = 0;
    int effective_edges = 0;
    std::optional<int> alpha; // absent when an empty edge makes it undefined
    int b_lazy = 0;
    int b = 0;
    bool has_isolated = false;
    bool has_singleton_or_empty = false;
    bool connected = false;
    bool simple = false;
    std::vector<InequalityVerdict> inequalities;
};

BoundsReport bounds_report(const Hypergraph& h, const BoundsOptions& opt = {});

/// Line-oriented key=value rendering; one canonical field order.
std::string bounds_report_text(const BoundsReport& r);
/// The same report as a JSON document (keys sorted; deterministic).
std::string bounds_report_json(const BoundsReport& r);

/// Composition laws on a disconnected instance: lazy additivity is exact;
/// max of the component burning numbers <= b(H) <= their sum, and when no
/// component is an isolated vertex also b(H) <= sum - k + 1.
struct CompositionReport {
    int component_count = 0;
    std::vector<int> component_orders;
    std::vector<int> component_b;
    std::vector<int> component_b_lazy;
    int b = 0;
    int b_lazy = 0;
    bool lazy_additivity_holds = false;
    bool max_lower_bound_holds = false;
    bool sum_upper_bound_holds = false;
    bool minus_k_applicable = false; // no isolated-vertex component
    bool minus_k_upper_bound_holds = false;
    bool minus_k_tight = false;
};

CompositionReport disconnected_composition_check(const Hypergraph& h,
                                                 const BoundsOptions& opt = {});
std::string composition_report_text(const CompositionReport& r);
std::string composition_report_json(const CompositionReport& r);

/// Monotonicity between the strong and weak subhypergraphs induced by W:
/// b(G2) <= b(G1) and b_L(G2) <= b_L(G1); when G2 keeps every edge of H and
/// has no singleton edges, additionally b(G2) <= b(H) and b_L(G2) <= b_L(H).
struct MonotonicityReport {
    int b_h = 0, b_lazy_h = 0;
    int b_strong = 0, b_lazy_strong = 0;
    int b_weak = 0, b_lazy_weak = 0;
    bool weak_le_strong_holds = false;
    bool parent_comparable = false; // |E(G2)| == |E(H)| and G2 singleton-free
    bool weak_le_parent_holds = false;
};

MonotonicityReport subhypergraph_monotonicity_check(const Hypergraph& h, const VertexSet& w,
                                                    const BoundsOptions& opt = {});

/// Diagnostic only: does some size-b_L subset of one optimal burning
/// sequence's source set burn the instance lazily? Reports, never asserts.
struct LazySubsetProbe {
    std::vector<int> sequence; // the optimal schedule examined
    int b_lazy = 0;
    bool found = false;
    VertexSet subset; // a witness subset when found
};

LazySubsetProbe probe_optimal_sequence_lazy_subset(const Hypergraph& h,
                                                   const BoundsOptions& opt = {});

} // namespace burn
