#include "burn/format.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "burn/errors.hpp"

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

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> edges;

    auto intern = [&](const std::string& lab) {
        auto it = index.find(lab);
        if (it != index.end()) return it->second;
        int id = int(labels.size());
        labels.push_back(lab);
        index.emplace(lab, id);
        return id;
    };

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0][0] == '#') continue;

        if (toks[0] == "v") {
            if (toks.size() != 2)
                throw ParseError(lineno, "'v' takes exactly one label");
            if (!valid_label(toks[1]))
                throw ParseError(lineno, "invalid label '" + toks[1] + "'");
            if (index.count(toks[1]))
                throw ParseError(lineno, "duplicate vertex declaration '" + toks[1] + "'");
            intern(toks[1]);
        } else if (toks[0] == "e") {
            std::set<std::string> in_edge;
            std::vector<int> edge;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (!valid_label(toks[i]))
                    throw ParseError(lineno, "invalid label '" + toks[i] + "'");
                if (!in_edge.insert(toks[i]).second)
                    throw ParseError(lineno, "repeated label '" + toks[i] + "' within an edge");
                edge.push_back(intern(toks[i]));
            }
            edges.push_back(std::move(edge));
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }

    if (labels.empty()) throw ParseError("instance declares no vertices");
    const int n = int(labels.size());
    return Hypergraph(n, std::move(edges), std::move(labels));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    const int n = h.vertex_count();

    // Relabel to label-rank indices so the output does not depend on the
    // incoming index assignment.
    std::vector<int> by_label(n);
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return h.label(a) < h.label(b); });
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[by_label[r]] = r;

    std::vector<std::vector<int>> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::vector<int> m;
        m.reserve(e.size());
        for (int v : e) m.push_back(rank[v]);
        std::sort(m.begin(), m.end());
        edges.push_back(std::move(m));
    }
    std::sort(edges.begin(), edges.end());

    std::string out;
    for (int r = 0; r < n; ++r) {
        out += "v ";
        out += h.label(by_label[r]);
        out += '\n';
    }
    for (const auto& e : edges) {
        out += 'e';
        for (int r : e) {
            out += ' ';
            out += h.label(by_label[r]);
        }
        out += '\n';
    }
    return out;
}

bool structurally_equal(const Hypergraph& a, const Hypergraph& b) {
    return serialize_hypergraph(a) == serialize_hypergraph(b);
}

} // namespace burn
