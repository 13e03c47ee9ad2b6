#include "vcover/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vcover {

namespace {

// Canonical labeling by iterated color refinement with individualization.
// Cells are split deterministically from structure alone, so the resulting
// order (and hence the minimal adjacency signature over all branches) is
// invariant under relabeling.
struct CanonSearch {
    int n = 0;
    std::vector<uint32_t> adj;  // local adjacency over 0..n-1
    std::string best_sig;
    std::vector<int> best_order;
    bool have_best = false;
    long nodes = 0;
    static constexpr long kNodeBudget = 400000;

    // Stable refinement: repeatedly replace each color by the rank of
    // (color, sorted neighbor colors) until the partition stops changing.
    void refine(std::vector<int>& colors) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sigs(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> s;
                s.push_back(colors[v]);
                uint32_t m = adj[v];
                while (m) {
                    int w = __builtin_ctz(m);
                    m &= m - 1;
                    s.push_back(colors[w]);
                }
                std::sort(s.begin() + 1, s.end());
                sigs[v] = {std::move(s), v};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int c = -1;
            for (int i = 0; i < n; ++i) {
                if (i == 0 || sorted[i].first != sorted[i - 1].first) ++c;
                next[sorted[i].second] = c;
            }
            if (next == colors) return;
            colors = std::move(next);
        }
    }

    std::vector<std::vector<int>> cells(const std::vector<int>& colors) const {
        int maxc = 0;
        for (int v = 0; v < n; ++v) maxc = std::max(maxc, colors[v]);
        std::vector<std::vector<int>> out(maxc + 1);
        for (int v = 0; v < n; ++v) out[colors[v]].push_back(v);
        return out;
    }

    // A cell whose members are pairwise interchangeable by an automorphism:
    // mutually independent or a clique, with identical neighborhoods outside
    // the cell. Such a cell can be ordered arbitrarily without branching.
    bool interchangeable(const std::vector<int>& cell) const {
        uint32_t cm = 0;
        for (int v : cell) cm |= (1u << v);
        uint32_t inner0 = adj[cell[0]] & cm;
        bool indep = true, clique = true;
        for (int v : cell) {
            uint32_t in = adj[v] & cm;
            if (in != 0) indep = false;
            if (in != (cm & ~(1u << v))) clique = false;
        }
        (void)inner0;
        if (!indep && !clique) return false;
        uint32_t out0 = adj[cell[0]] & ~cm;
        for (int v : cell)
            if ((adj[v] & ~cm) != out0) return false;
        return true;
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[colors[v]] = v;
        // Bit-packed upper-triangle adjacency under this order.
        std::string sig((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
        size_t bit = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q, ++bit)
                if (adj[order[p]] >> order[q] & 1u) sig[bit / 8] |= char(1 << (bit % 8));
        if (!have_best || sig < best_sig) {
            best_sig = std::move(sig);
            best_order = std::move(order);
            have_best = true;
        }
    }

    void search(std::vector<int> colors) {
        if (++nodes > kNodeBudget)
            throw std::runtime_error("canonical labeling: search budget exceeded");
        refine(colors);
        while (true) {
            auto cs = cells(colors);
            const std::vector<int>* target = nullptr;
            for (const auto& c : cs)
                if (c.size() > 1) {
                    target = &c;
                    break;
                }
            if (!target) {
                leaf(colors);
                return;
            }
            if (interchangeable(*target)) {
                // Split in local index order; all orders give the same leaf.
                int mark = -static_cast<int>(target->size());
                for (int v : *target) colors[v] = mark++;
                refine(colors);
                continue;
            }
            for (int v : *target) {
                std::vector<int> branch = colors;
                branch[v] = -1;  // individualize: sorts before every other color
                search(std::move(branch));
            }
            return;
        }
    }
};

std::pair<std::vector<int>, std::string> canon_impl(const std::vector<uint32_t>& adj,
                                                    uint32_t alive) {
    std::vector<int> verts;
    for (int v = 0; v < 32; ++v)
        if (alive >> v & 1u) verts.push_back(v);
    int n = static_cast<int>(verts.size());
    if (n > kIsoVertexLimit)
        throw std::length_error("canonical labeling: more than 24 vertices");
    if (n == 0) return {{}, "0;"};
    std::vector<int> local(32, -1);
    for (int i = 0; i < n; ++i) local[verts[i]] = i;
    CanonSearch cs;
    cs.n = n;
    cs.adj.assign(n, 0u);
    for (int i = 0; i < n; ++i) {
        uint32_t m = adj[verts[i]] & alive;
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            cs.adj[i] |= (1u << local[w]);
        }
    }
    cs.search(std::vector<int>(n, 0));
    std::vector<int> order(n);
    for (int p = 0; p < n; ++p) order[p] = verts[cs.best_order[p]];
    return {order, std::to_string(n) + ";" + cs.best_sig};
}

}  // namespace

std::vector<int> canonical_order_masked(const std::vector<uint32_t>& adj, uint32_t alive) {
    return canon_impl(adj, alive).first;
}

std::string canonical_form_masked(const std::vector<uint32_t>& adj, uint32_t alive) {
    return canon_impl(adj, alive).second;
}

std::pair<std::vector<int>, std::string> canonical_pair_masked(const std::vector<uint32_t>& adj,
                                                               uint32_t alive) {
    return canon_impl(adj, alive);
}

std::vector<int> canonical_order(const Graph& g) {
    if (g.vertex_count() > kIsoVertexLimit)
        throw std::length_error("canonical labeling: more than 24 vertices");
    uint32_t alive = (g.vertex_count() == 32) ? ~0u : ((1u << g.vertex_count()) - 1);
    return canonical_order_masked(g.adjacency_masks(), alive);
}

std::string canonical_form(const Graph& g) {
    if (g.vertex_count() > kIsoVertexLimit)
        throw std::length_error("canonical labeling: more than 24 vertices");
    uint32_t alive = (g.vertex_count() == 32) ? ~0u : ((1u << g.vertex_count()) - 1);
    return canonical_form_masked(g.adjacency_masks(), alive);
}

std::optional<std::vector<std::pair<std::string, std::string>>> are_isomorphic(const Graph& g,
                                                                               const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    if (g.vertex_count() > kIsoVertexLimit)
        throw std::length_error("isomorphism: more than 24 vertices");
    std::vector<int> dg, dh;
    for (int v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;

    uint32_t ag = (g.vertex_count() == 32) ? ~0u : ((1u << g.vertex_count()) - 1);
    uint32_t ah = (h.vertex_count() == 32) ? ~0u : ((1u << h.vertex_count()) - 1);
    auto [og, sg] = canon_impl(g.adjacency_masks(), ag);
    auto [oh, sh] = canon_impl(h.adjacency_masks(), ah);
    if (sg != sh) return std::nullopt;

    std::vector<std::pair<std::string, std::string>> map;
    map.reserve(og.size());
    std::vector<int> to_h(og.size());
    for (size_t p = 0; p < og.size(); ++p) {
        to_h[og[p]] = oh[p];
        map.emplace_back(g.label(og[p]), h.label(oh[p]));
    }
    // Equal canonical forms already imply isomorphism; re-check the witness
    // edge by edge as a guard against labeling bugs.
    for (const auto& [u, v] : g.edges())
        if (!h.adjacent(to_h[u], to_h[v]))
            throw std::logic_error("isomorphism: witness failed verification");
    return map;
}

namespace {

// Center-rooted shape interning: equal keys <=> isomorphic trees.
struct TreeShapeKey {
    std::map<std::vector<int>, int> intern;

    int code(const Graph& t, int root, int parent) {
        std::vector<int> child_codes;
        for (int w : t.neighbors(root))
            if (w != parent) child_codes.push_back(code(t, w, root));
        std::sort(child_codes.begin(), child_codes.end());
        auto [it, inserted] = intern.emplace(child_codes, static_cast<int>(intern.size()));
        (void)inserted;
        return it->second;
    }

    std::pair<int, int> key(const Graph& t) {
        int n = t.vertex_count();
        if (n == 1) return {1, -1};
        // Peel leaf layers in rounds; the last one or two survivors are the
        // centers.
        std::vector<int> deg(n);
        std::vector<char> removed(n, 0);
        std::vector<int> frontier, next;
        for (int v = 0; v < n; ++v) {
            deg[v] = t.degree(v);
            if (deg[v] <= 1) frontier.push_back(v);
        }
        int remaining = n;
        while (remaining > 2) {
            for (int v : frontier) {
                removed[v] = 1;
                --remaining;
            }
            for (int v : frontier)
                for (int w : t.neighbors(v))
                    if (!removed[w] && --deg[w] == 1) next.push_back(w);
            frontier = std::move(next);
            next.clear();
        }
        int c1 = -1, c2 = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v]) (c1 < 0 ? c1 : c2) = v;
        int k1 = code(t, c1, -1);
        int k2 = (c2 >= 0) ? code(t, c2, -1) : k1;
        return {(c2 >= 0) ? 2 : 1, std::min(k1, k2)};
    }
};

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumerate_trees: n must be between 1 and 10");
    // Every tree on k vertices is a tree on k-1 vertices with one leaf
    // attached, so growing representatives level by level is exhaustive.
    std::vector<Graph> reps = {Graph({"x1"}, {})};
    TreeShapeKey shapes;
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::map<std::pair<int, int>, char> seen;
        std::string fresh = "x" + std::to_string(k);
        for (const Graph& t : reps) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                std::vector<std::string> verts = t.vertex_labels();
                verts.push_back(fresh);
                std::vector<std::pair<std::string, std::string>> es;
                for (int e = 0; e < t.edge_count(); ++e) es.push_back(t.edge_labels(e));
                es.emplace_back(t.label(v), fresh);
                Graph grown(std::move(verts), es);
                if (seen.emplace(shapes.key(grown), 1).second) next.push_back(std::move(grown));
            }
        }
        reps = std::move(next);
    }
    return reps;
}

}  // namespace vcover
