#include "vcover/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace vcover {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (labels_[i].empty())
            throw std::invalid_argument("graph: empty vertex label");
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("graph: duplicate vertex label '" + labels_[i] + "'");
    }
    adj_.resize(labels_.size());
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index_.find(a);
        auto ib = index_.find(b);
        if (ia == index_.end())
            throw std::invalid_argument("graph: edge endpoint '" + a + "' is not a vertex");
        if (ib == index_.end())
            throw std::invalid_argument("graph: edge endpoint '" + b + "' is not a vertex");
        int u = ia->second, v = ib->second;
        if (u == v)
            throw std::invalid_argument("graph: self-loop at '" + a + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("graph: duplicate edge {" + a + "," + b + "}");
        edges_.emplace_back(key.first, key.second);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (labels_.size() <= 32) {
        masks_.assign(labels_.size(), 0u);
        for (auto [u, v] : edges_) {
            masks_[u] |= (1u << v);
            masks_[v] |= (1u << u);
        }
    }
}

std::pair<std::string, std::string> Graph::edge_labels(int e) const {
    const auto& [u, v] = edges_.at(e);
    return {labels_[u], labels_[v]};
}

bool Graph::has_vertex(const std::string& label) const {
    return index_.find(label) != index_.end();
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("graph: unknown vertex '" + label + "'");
    return it->second;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::string> Graph::neighborhood(const std::string& x, bool closed) const {
    int v = index_of(x);
    std::vector<int> ids = adj_[v];
    if (closed) {
        ids.push_back(v);
        std::sort(ids.begin(), ids.end());
    }
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(labels_[id]);
    return out;
}

Graph Graph::delete_vertices(const std::vector<std::string>& drop) const {
    std::vector<char> gone(labels_.size(), 0);
    for (const auto& x : drop) gone[index_of(x)] = 1;
    std::vector<std::string> keep;
    keep.reserve(labels_.size());
    for (int v = 0; v < vertex_count(); ++v)
        if (!gone[v]) keep.push_back(labels_[v]);
    std::vector<std::pair<std::string, std::string>> kept_edges;
    for (auto [u, v] : edges_)
        if (!gone[u] && !gone[v]) kept_edges.emplace_back(labels_[u], labels_[v]);
    return Graph(std::move(keep), kept_edges);
}

Graph Graph::strip_isolated() const {
    std::vector<std::string> drop;
    for (int v = 0; v < vertex_count(); ++v)
        if (adj_[v].empty()) drop.push_back(labels_[v]);
    return delete_vertices(drop);
}

Graph Graph::add_whisker(const std::string& x) const {
    index_of(x);  // validate
    std::string fresh;
    for (int t = 1;; ++t) {
        fresh = "w" + std::to_string(t);
        if (!has_vertex(fresh)) break;
    }
    std::vector<std::string> verts = labels_;
    verts.push_back(fresh);
    std::vector<std::pair<std::string, std::string>> es;
    es.reserve(edges_.size() + 1);
    for (auto [u, v] : edges_) es.emplace_back(labels_[u], labels_[v]);
    es.emplace_back(x, fresh);
    return Graph(std::move(verts), es);
}

const std::vector<uint32_t>& Graph::adjacency_masks() const {
    if (vertex_count() > 32)
        throw std::length_error("graph: adjacency masks need at most 32 vertices");
    return masks_;
}

GraphClass classify(const Graph& g) {
    GraphClass c;
    int n = g.vertex_count();
    int m = g.edge_count();

    // BFS: component count and 2-coloring in one sweep.
    std::vector<int> color(n, -1);
    int components = 0;
    bool bipartite = true;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        ++components;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                }
            }
        }
    }
    c.connected = (components <= 1);
    c.bipartite = bipartite;

    int cycle_rank = m - n + components;  // dimension of the cycle space
    if (cycle_rank == 0) {
        c.kind = c.connected ? GraphClass::Kind::Tree : GraphClass::Kind::Forest;
    } else if (cycle_rank == 1 && c.connected) {
        c.kind = GraphClass::Kind::Unicyclic;
        // Peel leaves until only the cycle remains.
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
        std::queue<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.push(v);
        int removed = 0;
        while (!leaves.empty()) {
            int v = leaves.front();
            leaves.pop();
            deg[v] = 0;
            ++removed;
            for (int w : g.neighbors(v))
                if (deg[w] > 0 && --deg[w] == 1) leaves.push(w);
        }
        c.cycle_length = n - removed;
    } else {
        c.kind = GraphClass::Kind::Other;
    }
    return c;
}

static std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: need at least one vertex");
    std::vector<std::pair<std::string, std::string>> es;
    auto verts = numbered_labels(n);
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(verts[i], verts[i + 1]);
    return Graph(std::move(verts), es);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need at least three vertices");
    std::vector<std::pair<std::string, std::string>> es;
    auto verts = numbered_labels(n);
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(verts[i], verts[i + 1]);
    es.emplace_back(verts[n - 1], verts[0]);
    return Graph(std::move(verts), es);
}

Graph make_star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("make_star: negative leaf count");
    std::vector<std::string> verts{"c"};
    auto tips = numbered_labels(leaves);
    verts.insert(verts.end(), tips.begin(), tips.end());
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& t : tips) es.emplace_back("c", t);
    return Graph(std::move(verts), es);
}

}  // namespace vcover
