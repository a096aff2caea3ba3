#include "burn/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "burn/errors.hpp"
#include "burn/independence.hpp"
#include "burn/structure.hpp"
#include "burn/subhypergraph.hpp"

namespace burn {

namespace {

InequalityVerdict gated(std::string name, bool strict, std::string reason) {
    InequalityVerdict v;
    v.name = std::move(name);
    v.strict = strict;
    v.applicable = false;
    v.gate_reason = std::move(reason);
    return v;
}

InequalityVerdict judged(std::string name, bool strict, long long lhs, long long rhs) {
    InequalityVerdict v;
    v.name = std::move(name);
    v.strict = strict;
    v.applicable = true;
    v.lhs = lhs;
    v.rhs = rhs;
    v.holds = strict ? lhs < rhs : lhs <= rhs;
    v.tight = strict ? rhs - lhs == 1 : lhs == rhs;
    return v;
}

} // namespace

BoundsReport bounds_report(const Hypergraph& h, const BoundsOptions& opt) {
    BoundsReport r;
    r.n = h.vertex_count();

    auto profile = structural_profile(h);
    r.effective_edges = profile.effective_edge_count;
    r.has_isolated = !profile.isolated_vertices.empty();
    r.has_singleton_or_empty = h.has_singleton_edge() || h.has_empty_edge();
    r.connected = profile.component_partition.size() == 1;
    r.simple = profile.is_simple;

    r.b_lazy = lazy_burning_number_exact(h, opt.lazy_guard).value;
    r.b = burning_number_exact(h, opt.burn_guard).value;
    if (!h.has_empty_edge()) r.alpha = independence_number(h);

    const long long v_minus_e = r.n - r.effective_edges;
    r.inequalities.push_back(judged("VminusE_le_bL", false, v_minus_e, r.b_lazy));
    r.inequalities.push_back(judged("bL_le_b", false, r.b_lazy, r.b));

    // Strictness needs every vertex reachable by propagation: a vertex on no
    // non-singleton edge (isolated or singleton-only) can force b = b_lazy.
    VertexSet ignitable(r.n);
    for (const auto& em : h.propagation_masks()) ignitable |= em;
    if (r.has_isolated)
        r.inequalities.push_back(gated("bL_lt_b", true, "isolated vertex present"));
    else if (!ignitable.is_full())
        r.inequalities.push_back(
            gated("bL_lt_b", true, "vertex incident only to singleton edges"));
    else if (r.n < 2)
        r.inequalities.push_back(gated("bL_lt_b", true, "single-vertex instance"));
    else
        r.inequalities.push_back(judged("bL_lt_b", true, r.b_lazy, r.b));

    if (r.has_singleton_or_empty) {
        r.inequalities.push_back(gated("bL_le_alpha", false, "singleton or empty edge present"));
        r.inequalities.push_back(
            gated("b_le_alpha_plus_1", false, "singleton or empty edge present"));
    } else {
        r.inequalities.push_back(judged("bL_le_alpha", false, r.b_lazy, *r.alpha));
        r.inequalities.push_back(judged("b_le_alpha_plus_1", false, r.b, *r.alpha + 1LL));
    }

    if (!r.simple)
        r.inequalities.push_back(gated("chain_2_14", false, "instance is not simple"));
    else if (r.has_isolated)
        r.inequalities.push_back(gated("chain_2_14", false, "isolated vertex present"));
    else {
        // simple, no isolated vertices: n - |E| <= b_L < b <= alpha + 1
        InequalityVerdict v;
        v.name = "chain_2_14";
        v.applicable = true;
        v.lhs = v_minus_e;
        v.rhs = *r.alpha + 1LL;
        v.holds = v_minus_e <= r.b_lazy && r.b_lazy < r.b && r.b <= *r.alpha + 1;
        v.tight = v.holds && v_minus_e == r.b_lazy && r.b_lazy + 1 == r.b && r.b == *r.alpha + 1;
        r.inequalities.push_back(v);
    }
    return r;
}

std::string bounds_report_text(const BoundsReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << '\n';
    out << "effective_edges=" << r.effective_edges << '\n';
    out << "b_lazy=" << r.b_lazy << '\n';
    out << "b=" << r.b << '\n';
    if (r.alpha)
        out << "alpha=" << *r.alpha << '\n';
    else
        out << "alpha=undefined\n";
    out << "has_isolated=" << (r.has_isolated ? "true" : "false") << '\n';
    out << "has_singleton_or_empty=" << (r.has_singleton_or_empty ? "true" : "false") << '\n';
    out << "connected=" << (r.connected ? "true" : "false") << '\n';
    out << "simple=" << (r.simple ? "true" : "false") << '\n';
    for (const auto& q : r.inequalities) {
        const std::string p = "ineq." + q.name + ".";
        out << p << "applicable=" << (q.applicable ? "true" : "false") << '\n';
        if (!q.applicable) {
            out << p << "reason=" << q.gate_reason << '\n';
            continue;
        }
        out << p << "lhs=" << q.lhs << '\n';
        out << p << "rhs=" << q.rhs << '\n';
        out << p << "holds=" << (q.holds ? "true" : "false") << '\n';
        out << p << "tight=" << (q.tight ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string bounds_report_json(const BoundsReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["effective_edges"] = r.effective_edges;
    j["b_lazy"] = r.b_lazy;
    j["b"] = r.b;
    if (r.alpha)
        j["alpha"] = *r.alpha;
    else
        j["alpha"] = nullptr;
    j["has_isolated"] = r.has_isolated;
    j["has_singleton_or_empty"] = r.has_singleton_or_empty;
    j["connected"] = r.connected;
    j["simple"] = r.simple;
    nlohmann::json ineqs = nlohmann::json::object();
    for (const auto& q : r.inequalities) {
        nlohmann::json e;
        e["applicable"] = q.applicable;
        if (q.applicable) {
            e["lhs"] = q.lhs;
            e["rhs"] = q.rhs;
            e["strict"] = q.strict;
            e["holds"] = q.holds;
            e["tight"] = q.tight;
        } else {
            e["reason"] = q.gate_reason;
        }
        ineqs[q.name] = e;
    }
    j["inequalities"] = ineqs;
    return j.dump(2);
}

CompositionReport disconnected_composition_check(const Hypergraph& h, const BoundsOptions& opt) {
    auto comps = connected_components(h);
    if (comps.size() < 2)
        throw std::invalid_argument("composition check needs a disconnected instance");

    CompositionReport r;
    r.component_count = int(comps.size());
    bool any_isolated_component = false;
    long long sum_b = 0, sum_bl = 0;
    int max_b = 0;
    for (const auto& g : comps) {
        r.component_orders.push_back(g.vertex_count());
        int b = burning_number_exact(g, opt.burn_guard).value;
        int bl = lazy_burning_number_exact(g, opt.lazy_guard).value;
        r.component_b.push_back(b);
        r.component_b_lazy.push_back(bl);
        sum_b += b;
        sum_bl += bl;
        max_b = std::max(max_b, b);
        if (g.vertex_count() == 1 && g.edge_count() == 0) any_isolated_component = true;
    }

    r.b = burning_number_exact(h, opt.burn_guard).value;
    r.b_lazy = lazy_burning_number_exact(h, opt.lazy_guard).value;

    r.lazy_additivity_holds = r.b_lazy == sum_bl;
    r.max_lower_bound_holds = max_b <= r.b;
    r.sum_upper_bound_holds = r.b <= sum_b;
    r.minus_k_applicable = !any_isolated_component;
    if (r.minus_k_applicable) {
        const long long bound = sum_b - r.component_count + 1;
        r.minus_k_upper_bound_holds = r.b <= bound;
        r.minus_k_tight = r.b == bound;
    }
    return r;
}

std::string composition_report_text(const CompositionReport& r) {
    std::ostringstream out;
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    out << "components=" << r.component_count << '\n';
    out << "component_orders=" << join(r.component_orders) << '\n';
    out << "component_b=" << join(r.component_b) << '\n';
    out << "component_b_lazy=" << join(r.component_b_lazy) << '\n';
    out << "b=" << r.b << '\n';
    out << "b_lazy=" << r.b_lazy << '\n';
    out << "lazy_additivity_holds=" << (r.lazy_additivity_holds ? "true" : "false") << '\n';
    out << "max_lower_bound_holds=" << (r.max_lower_bound_holds ? "true" : "false") << '\n';
    out << "sum_upper_bound_holds=" << (r.sum_upper_bound_holds ? "true" : "false") << '\n';
    out << "minus_k_applicable=" << (r.minus_k_applicable ? "true" : "false") << '\n';
    if (r.minus_k_applicable) {
        out << "minus_k_upper_bound_holds=" << (r.minus_k_upper_bound_holds ? "true" : "false")
            << '\n';
        out << "minus_k_tight=" << (r.minus_k_tight ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string composition_report_json(const CompositionReport& r) {
    nlohmann::json j;
    j["components"] = r.component_count;
    j["component_orders"] = r.component_orders;
    j["component_b"] = r.component_b;
    j["component_b_lazy"] = r.component_b_lazy;
    j["b"] = r.b;
    j["b_lazy"] = r.b_lazy;
    j["lazy_additivity_holds"] = r.lazy_additivity_holds;
    j["max_lower_bound_holds"] = r.max_lower_bound_holds;
    j["sum_upper_bound_holds"] = r.sum_upper_bound_holds;
    j["minus_k_applicable"] = r.minus_k_applicable;
    if (r.minus_k_applicable) {
        j["minus_k_upper_bound_holds"] = r.minus_k_upper_bound_holds;
        j["minus_k_tight"] = r.minus_k_tight;
    }
    return j.dump(2);
}

MonotonicityReport subhypergraph_monotonicity_check(const Hypergraph& h, const VertexSet& w,
                                                    const BoundsOptions& opt) {
    Hypergraph strong = strong_induced_sub(h, w);
    Hypergraph weak = weak_induced_sub(h, w);

    MonotonicityReport r;
    r.b_h = burning_number_exact(h, opt.burn_guard).value;
    r.b_lazy_h = lazy_burning_number_exact(h, opt.lazy_guard).value;
    r.b_strong = burning_number_exact(strong, opt.burn_guard).value;
    r.b_lazy_strong = lazy_burning_number_exact(strong, opt.lazy_guard).value;
    r.b_weak = burning_number_exact(weak, opt.burn_guard).value;
    r.b_lazy_weak = lazy_burning_number_exact(weak, opt.lazy_guard).value;

    r.weak_le_strong_holds = r.b_weak <= r.b_strong && r.b_lazy_weak <= r.b_lazy_strong;
    r.parent_comparable = weak.edge_count() == h.edge_count() && !weak.has_singleton_edge();
    if (r.parent_comparable)
        r.weak_le_parent_holds = r.b_weak <= r.b_h && r.b_lazy_weak <= r.b_lazy_h;
    return r;
}

LazySubsetProbe probe_optimal_sequence_lazy_subset(const Hypergraph& h,
                                                   const BoundsOptions& opt) {
    LazySubsetProbe probe;
    BurnResult burn = burning_number_exact(h, opt.burn_guard);
    probe.sequence = burn.witness.sources;
    probe.b_lazy = lazy_burning_number_exact(h, opt.lazy_guard).value;
    probe.subset = VertexSet(h.vertex_count());

    const int b = burn.value;
    const int t = probe.b_lazy;
    if (t > b) return probe; // cannot happen; keep the probe total

    std::vector<int> pick(t);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        VertexSet seeds(h.vertex_count());
        for (int i : pick) seeds.set(probe.sequence[i]);
        if (is_lazy_burning_set(h, seeds)) {
            probe.found = true;
            probe.subset = seeds;
            return probe;
        }
        int i = t - 1;
        while (i >= 0 && pick[i] == b - t + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
    return probe;
}

} // namespace burn
