#include "vcover/gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcover {

std::string layered_label(const std::string& base, int layer) {
    if (base.find('@') != std::string::npos)
        throw std::invalid_argument("layered_label: base '" + base + "' already layered");
    if (layer < 1) throw std::invalid_argument("layered_label: layer must be positive");
    return base + "@" + std::to_string(layer);
}

std::pair<std::string, int> parse_layered(const std::string& label) {
    auto at = label.rfind('@');
    if (at == std::string::npos || at == 0 || at + 1 == label.size())
        throw std::invalid_argument("parse_layered: '" + label + "' is not base@layer");
    int layer = 0;
    for (size_t i = at + 1; i < label.size(); ++i) {
        char c = label[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_layered: '" + label + "' is not base@layer");
        layer = layer * 10 + (c - '0');
    }
    if (layer < 1) throw std::invalid_argument("parse_layered: layer must be positive");
    return {label.substr(0, at), layer};
}

std::vector<std::string> polarization_naming(const std::string& base, int m) {
    if (m < 0) throw std::invalid_argument("polarization_naming: negative exponent");
    std::vector<std::string> out;
    out.reserve(m);
    for (int a = 1; a <= m; ++a) out.push_back(layered_label(base, a));
    return out;
}

Graph edge_power(const std::string& xi, const std::string& xj, int p) {
    if (p < 0) throw std::invalid_argument("edge_power: negative strength");
    if (xi == xj) throw std::invalid_argument("edge_power: endpoints must differ");
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    int layers = std::max(1, p);
    for (int a = 1; a <= layers; ++a) verts.push_back(layered_label(xi, a));
    for (int a = 1; a <= layers; ++a) verts.push_back(layered_label(xj, a));
    for (int l = 1; l <= p; ++l)
        for (int m = 1; l + m <= p + 1; ++m)
            edges.emplace_back(layered_label(xi, l), layered_label(xj, m));
    return Graph(std::move(verts), edges);
}

LayeredGraph::LayeredGraph(Graph base, std::vector<int> ktuple)
    : base_(std::move(base)), k_(std::move(ktuple)) {
    if (static_cast<int>(k_.size()) != base_.edge_count())
        throw std::invalid_argument("build_gkt: tuple length must match edge count");
    for (int v : k_)
        if (v < 0) throw std::invalid_argument("build_gkt: negative entry");

    int n = base_.vertex_count();
    layers_.assign(n, 0);
    for (int e = 0; e < base_.edge_count(); ++e) {
        auto [u, v] = base_.edges()[e];
        int need = std::max(1, k_[e]);
        layers_[u] = std::max(layers_[u], need);
        layers_[v] = std::max(layers_[v], need);
    }

    std::vector<std::string> verts;
    for (int v = 0; v < n; ++v)
        for (int a = 1; a <= layers_[v]; ++a) verts.push_back(layered_label(base_.label(v), a));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < base_.edge_count(); ++e) {
        auto [u, v] = base_.edges()[e];
        for (int l = 1; l <= k_[e]; ++l)
            for (int m = 1; l + m <= k_[e] + 1; ++m)
                edges.emplace_back(layered_label(base_.label(u), l),
                                   layered_label(base_.label(v), m));
    }
    graph_ = Graph(std::move(verts), edges);
}

int LayeredGraph::layer_count(int base_vertex) const {
    if (base_vertex < 0 || base_vertex >= base_.vertex_count())
        throw std::out_of_range("layer_count: no such vertex");
    return layers_[base_vertex];
}

LayeredGraph build_gkt(const Graph& base, const std::vector<int>& ktuple) {
    return LayeredGraph(base, ktuple);
}

namespace {

void require_forest(const Graph& g, const char* who) {
    GraphClass c = classify(g);
    if (c.kind != GraphClass::Kind::Tree && c.kind != GraphClass::Kind::Forest)
        throw std::invalid_argument(std::string(who) + ": base graph must be a forest");
}

}  // namespace

LeafCollapse leaf_collapse(const Graph& forest, const std::vector<int>& ktuple,
                           const std::string& leaf) {
    require_forest(forest, "leaf_collapse");
    if (static_cast<int>(ktuple.size()) != forest.edge_count())
        throw std::invalid_argument("leaf_collapse: tuple length must match edge count");
    int a = forest.index_of(leaf);
    if (forest.degree(a) != 1)
        throw std::invalid_argument("leaf_collapse: '" + leaf + "' is not a leaf");
    int b = forest.neighbors(a)[0];

    LeafCollapse out;
    out.base = forest;
    out.ktuple = ktuple;
    out.symmetric_pair = (forest.degree(b) == 1);
    for (int e = 0; e < forest.edge_count(); ++e) {
        auto [u, v] = forest.edges()[e];
        if (u == b || v == b) out.ktuple[e] = std::max(0, ktuple[e] - 1);
    }
    return out;
}

LinkDecomposition link_decomposition(const Graph& forest, const std::vector<int>& ktuple,
                                     const std::string& support) {
    require_forest(forest, "link_decomposition");
    if (static_cast<int>(ktuple.size()) != forest.edge_count())
        throw std::invalid_argument("link_decomposition: tuple length must match edge count");
    int b = forest.index_of(support);
    bool has_leaf = false;
    for (int w : forest.neighbors(b)) has_leaf = has_leaf || forest.degree(w) == 1;
    if (!has_leaf)
        throw std::invalid_argument("link_decomposition: '" + support + "' has no leaf neighbor");

    // Entry of the support edge at each neighbor, for the residual shift.
    std::vector<int> support_entry(forest.vertex_count(), -1);
    for (int e = 0; e < forest.edge_count(); ++e) {
        auto [u, v] = forest.edges()[e];
        if (u == b) support_entry[v] = ktuple[e];
        if (v == b) support_entry[u] = ktuple[e];
    }

    std::vector<char> deleted(forest.vertex_count(), 0);
    deleted[b] = 1;
    for (int w : forest.neighbors(b)) deleted[w] = 1;

    // Surviving edges keep their entries; residual edges at a non-leaf
    // neighbor x_u carry the positive part of (entry - support entry at x_u).
    std::vector<std::pair<int, int>> rhs_edges;  // (base edge index, entry)
    for (int e = 0; e < forest.edge_count(); ++e) {
        auto [u, v] = forest.edges()[e];
        if (!deleted[u] && !deleted[v]) rhs_edges.emplace_back(e, ktuple[e]);
    }
    for (int u : forest.neighbors(b)) {
        if (forest.degree(u) == 1) continue;
        for (int e = 0; e < forest.edge_count(); ++e) {
            auto [p, q] = forest.edges()[e];
            if (p != u && q != u) continue;
            if (p == b || q == b) continue;
            int d = ktuple[e] - support_entry[u];
            if (d > 0) rhs_edges.emplace_back(e, d);
        }
    }

    // Base for the decomposition: survivors of the closed-neighborhood
    // deletion that keep an edge, plus endpoints revived by residual edges.
    std::vector<char> keep(forest.vertex_count(), 0);
    for (auto [e, entry] : rhs_edges) {
        (void)entry;
        keep[forest.edges()[e].first] = 1;
        keep[forest.edges()[e].second] = 1;
    }
    std::vector<std::string> verts;
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (keep[v]) verts.push_back(forest.label(v));
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<int> entries;
    for (auto [e, entry] : rhs_edges) {
        edges.push_back(forest.edge_labels(e));
        entries.push_back(entry);
    }

    LinkDecomposition out;
    out.base = Graph(std::move(verts), edges);
    out.ktuple = std::move(entries);
    out.rhs = build_gkt(out.base, out.ktuple).graph().strip_isolated();
    for (const std::string& lv : out.rhs.vertex_labels()) {
        auto [base_label, layer] = parse_layered(lv);
        int u = forest.index_of(base_label);
        // Only non-leaf neighbors of the support can be deleted yet revived
        // (through residual edges); their layers shift past the deleted ones.
        if (deleted[u]) {
            out.f.emplace_back(lv, layered_label(base_label, support_entry[u] + layer));
        } else {
            out.f.emplace_back(lv, lv);
        }
    }
    return out;
}

}  // namespace vcover
