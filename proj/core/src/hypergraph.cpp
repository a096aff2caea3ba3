#include "burn/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace burn {

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

} // namespace

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
                       std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ <= 0) throw std::invalid_argument("hypergraph needs at least one vertex");

    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    }
    if (int(labels_.size()) != n_) throw std::invalid_argument("label count mismatch");

    std::set<std::string> seen;
    for (const auto& lab : labels_) {
        if (!valid_label(lab)) throw std::invalid_argument("invalid label: '" + lab + "'");
        if (!seen.insert(lab).second) throw std::invalid_argument("duplicate label: '" + lab + "'");
    }

    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_) throw std::invalid_argument("edge member out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("repeated vertex within an edge");
        }
    }
    std::sort(edges_.begin(), edges_.end());

    edge_masks_.reserve(edges_.size());
    degree_.assign(n_, 0);
    for (const auto& e : edges_) {
        VertexSet m(n_);
        for (int v : e) {
            m.set(v);
            ++degree_[v];
        }
        edge_masks_.push_back(std::move(m));
        if (e.empty()) has_empty_edge_ = true;
        if (e.size() == 1) has_singleton_edge_ = true;
    }

    // Unique non-singleton edges; duplicates are adjacent after the sort.
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].size() < 2) continue;
        if (i > 0 && edges_[i] == edges_[i - 1]) continue;
        prop_masks_.push_back(edge_masks_[i]);
    }
}

std::optional<int> Hypergraph::index_of_label(std::string_view label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

} // namespace burn
