#include "burn/families.hpp"

#include <numeric>
#include <stdexcept>

#include "burn/intmath.hpp"

namespace burn {

namespace {

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return labels;
}

std::vector<int> window(int start, int size) {
    std::vector<int> e(size);
    std::iota(e.begin(), e.end(), start);
    return e;
}

} // namespace

Hypergraph gen_tight_path(int k, int n) {
    if (k < 2) throw std::invalid_argument("tight path needs uniformity k >= 2");
    if (n < 1) throw std::invalid_argument("tight path needs order n >= 1");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + k <= n; ++i) edges.push_back(window(i, k));
    return Hypergraph(n, std::move(edges), numeric_labels(n));
}

Hypergraph gen_loose_path(int k, int m) {
    if (k < 3) throw std::invalid_argument("loose path needs uniformity k >= 3");
    if (m < 1) throw std::invalid_argument("loose path needs at least one edge");
    const int n = m * (k - 1) + 1;
    std::vector<std::vector<int>> edges;
    for (int j = 0; j < m; ++j) edges.push_back(window(j * (k - 1), k));
    return Hypergraph(n, std::move(edges), numeric_labels(n));
}

Hypergraph gen_loose_path_order(int k, int n) {
    if (k < 3) throw std::invalid_argument("loose path needs uniformity k >= 3");
    if (n < k || (n - 1) % (k - 1) != 0)
        throw std::invalid_argument("loose path order must satisfy n = m(k-1)+1");
    return gen_loose_path(k, (n - 1) / (k - 1));
}

Hypergraph gen_loose_path_sizes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("loose path needs at least one edge");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("loose path edges may not shrink below size 2");
    std::vector<std::vector<int>> edges;
    int offset = 0;
    for (int s : sizes) {
        edges.push_back(window(offset, s));
        offset += s - 1;
    }
    return Hypergraph(offset + 1, std::move(edges), numeric_labels(offset + 1));
}

Hypergraph gen_single_edge(int n) {
    if (n < 2) throw std::invalid_argument("single-edge family needs n >= 2");
    return Hypergraph(n, {window(0, n)}, numeric_labels(n));
}

Hypergraph gen_disjoint_edges(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("need at least one edge size");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("disjoint edges must have size >= 2");
    std::vector<std::vector<int>> edges;
    int offset = 0;
    for (int s : sizes) {
        edges.push_back(window(offset, s));
        offset += s;
    }
    return Hypergraph(offset, std::move(edges), numeric_labels(offset));
}

Hypergraph gen_star_family(int n) {
    if (n < 3) throw std::invalid_argument("star family needs n >= 3");
    std::vector<std::vector<int>> edges;
    for (int i = 2; i < n; ++i) edges.push_back({0, 1, i});
    return Hypergraph(n, std::move(edges), numeric_labels(n));
}

Hypergraph gen_nested_family(int n) {
    if (n < 3) throw std::invalid_argument("nested family needs n >= 3");
    std::vector<std::vector<int>> edges;
    for (int top = 2; top <= n; ++top) edges.push_back(window(0, top));
    return Hypergraph(n, std::move(edges), numeric_labels(n));
}

Hypergraph gen_strwk_family(int n) {
    if (n < 5) throw std::invalid_argument("family needs n >= 5");
    std::vector<std::vector<int>> edges;
    for (int i = 2; i < n; ++i) edges.push_back({0, 1, i});
    edges.push_back(window(2, n - 2));
    return Hypergraph(n, std::move(edges), numeric_labels(n));
}

int tight3_burning_number(int n) {
    if (n < 3) throw std::invalid_argument("tight 3-uniform path needs n >= 3");
    return int(ceil_sqrt_u64(2 * uint64_t(n) - 1));
}

int tight3_max_spread(int r) {
    if (r < 1) throw std::invalid_argument("round index must be >= 1");
    return int((uint64_t(r) * r + 1) / 2);
}

namespace {

bool tight3_perfect(int n) {
    // n twice a square, or 2n-1 a square
    uint64_t half = uint64_t(n) / 2;
    if (n % 2 == 0 && isqrt_u64(half) * isqrt_u64(half) == half) return true;
    uint64_t odd = 2 * uint64_t(n) - 1;
    return isqrt_u64(odd) * isqrt_u64(odd) == odd;
}

// Perfectly spaced seeds on the order-N instance, 1-based positions:
// the s-th seed is (b, a) with a = k-2s+2 + 2(s-1)(k-s+1) and b = a-1.
std::vector<long long> tight3_perfect_sequence(int N) {
    const long long k = tight3_burning_number(N);
    std::vector<long long> pos(k, 0);
    for (long long s = 1; 2 * s - 1 <= k; ++s) {
        long long a = k - 2 * s + 2 + 2 * (s - 1) * (k - s + 1);
        pos[2 * s - 2] = a;
        if (2 * s <= k) pos[2 * s - 1] = a - 1;
    }
    return pos;
}

} // namespace

std::vector<int> tight3_optimal_sequence(int n) {
    if (n < 3) throw std::invalid_argument("tight 3-uniform path needs n >= 3");
    int N = n;
    while (!tight3_perfect(N)) ++N;

    std::vector<long long> pos = tight3_perfect_sequence(N);
    const long long cut = N - n;
    if (cut > 0) {
        // Only the first seed can fall below the cut; re-seat it just above.
        if (pos[0] <= cut || pos[1] <= cut) {
            pos[0] = cut + 2;
            pos[1] = cut + 1;
        }
        for (size_t i = 0; i < pos.size(); ++i) {
            if (pos[i] <= cut) throw std::logic_error("source lost to truncation");
            pos[i] -= cut;
        }
    }
    std::vector<int> out;
    out.reserve(pos.size());
    for (long long p : pos) out.push_back(int(p - 1)); // to 0-based vertex indices
    return out;
}

int path_burning_number(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    return int(ceil_sqrt_u64(uint64_t(n)));
}

std::vector<int> path_optimal_sequence(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    const long long k = path_burning_number(n);
    const long long N = k * k;

    // On the square-order path, x_{k-i} = u_{N - i^2 - i}.
    std::vector<long long> pos(k, 0);
    for (long long i = 0; i < k; ++i) pos[k - 1 - i] = N - i * i - i;

    const long long cut = N - n;
    if (cut > 0) {
        if (pos[0] <= cut) pos[0] = cut + 1; // first source re-seats at the new low end
        for (size_t i = 0; i < pos.size(); ++i) {
            if (pos[i] <= cut) throw std::logic_error("source lost to truncation");
            pos[i] -= cut;
        }
    }
    std::vector<int> out;
    out.reserve(pos.size());
    for (long long p : pos) out.push_back(int(p - 1));
    return out;
}

FamilySpec::Id parse_family_id(const std::string& name) {
    if (name == "tight-path") return FamilySpec::Id::TightPath;
    if (name == "loose-path") return FamilySpec::Id::LoosePath;
    if (name == "single-edge") return FamilySpec::Id::SingleEdge;
    if (name == "disjoint-edges") return FamilySpec::Id::DisjointEdges;
    if (name == "star") return FamilySpec::Id::Star;
    if (name == "nested") return FamilySpec::Id::Nested;
    if (name == "strwk") return FamilySpec::Id::Strwk;
    if (name == "graph-path") return FamilySpec::Id::GraphPath;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Hypergraph make_family(const FamilySpec& spec) {
    using Id = FamilySpec::Id;
    switch (spec.id) {
        case Id::TightPath: return gen_tight_path(spec.k, spec.n);
        case Id::LoosePath:
            if (!spec.sizes.empty()) return gen_loose_path_sizes(spec.sizes);
            if (spec.m > 0) return gen_loose_path(spec.k, spec.m);
            return gen_loose_path_order(spec.k, spec.n);
        case Id::SingleEdge: return gen_single_edge(spec.n);
        case Id::DisjointEdges: return gen_disjoint_edges(spec.sizes);
        case Id::Star: return gen_star_family(spec.n);
        case Id::Nested: return gen_nested_family(spec.n);
        case Id::Strwk: return gen_strwk_family(spec.n);
        case Id::GraphPath: return gen_tight_path(2, spec.n);
    }
    throw std::invalid_argument("unknown family id");
}

} // namespace burn
