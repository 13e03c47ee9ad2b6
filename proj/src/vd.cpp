#include "vcover/vd.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "vcover/complex.hpp"
#include "vcover/gadget.hpp"
#include "vcover/graph_iso.hpp"

namespace vcover {

namespace {

bool edgeless_mask(const std::vector<uint32_t>& adj, uint32_t alive) {
    for (uint32_t m = alive; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (adj[v] & alive) return false;
    }
    return true;
}

struct MaskShed {
    bool shedding;
    uint32_t witness;
};

// Shedding test on the induced subgraph `alive`. A violation on any
// independent set of G - N[x] grows to one on a maximal set, so only maximal
// sets are tested; the first violating one (ascending mask order) is the
// witness.
MaskShed shedding_mask(const std::vector<uint32_t>& adj, uint32_t alive, int x) {
    uint32_t nx = adj[x] & alive;
    uint32_t rest = alive & ~(nx | (1u << x));
    for (uint32_t c : maximal_independent_sets(adj, rest)) {
        bool extends = false;
        for (uint32_t m = nx; m && !extends; m &= m - 1)
            extends = (adj[std::countr_zero(m)] & c) == 0;
        if (!extends) return {false, c};
    }
    return {true, 0u};
}

// Smallest y != x with N[y] contained in N[x] on the induced subgraph; -1 if
// no such vertex exists.
int dominating_witness(const std::vector<uint32_t>& adj, uint32_t alive, int x) {
    uint32_t cnx = (adj[x] & alive) | (1u << x);
    for (uint32_t m = alive & ~(1u << x); m;) {
        int y = std::countr_zero(m);
        m &= m - 1;
        uint32_t cny = (adj[y] & alive) | (1u << y);
        if ((cny & ~cnx) == 0) return y;
    }
    return -1;
}

enum Failure { kNotShedding = 0, kDelBranch = 1, kLinkBranch = 2 };

const char* failure_name(int f) {
    switch (f) {
        case kNotShedding: return "not-shedding";
        case kDelBranch: return "del-branch";
        default: return "link-branch";
    }
}

// Certificate node over integer vertex ids. The same shape serves two
// coordinate systems: graph indices during the search, canonical positions
// inside the memo table.
struct Node {
    bool edgeless = true;
    int v = -1;
    std::shared_ptr<const Node> del;
    std::shared_ptr<const Node> link;
};
using NodePtr = std::shared_ptr<const Node>;

struct RefEntry {
    int v = -1;
    int failure = kNotShedding;
    uint32_t witness = 0;
};

struct Outcome {
    bool vd = false;
    NodePtr cert;
    std::vector<RefEntry> ref;
};

NodePtr map_node(const NodePtr& c, const std::vector<int>& vmap) {
    if (!c || c->edgeless) return c;
    auto out = std::make_shared<Node>();
    out->edgeless = false;
    out->v = vmap.at(c->v);
    out->del = map_node(c->del, vmap);
    out->link = map_node(c->link, vmap);
    return out;
}

uint32_t map_mask(uint32_t m, const std::vector<int>& vmap) {
    uint32_t out = 0;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out |= 1u << vmap.at(v);
    }
    return out;
}

Outcome map_outcome(const Outcome& o, const std::vector<int>& vmap) {
    Outcome out;
    out.vd = o.vd;
    out.cert = map_node(o.cert, vmap);
    out.ref.reserve(o.ref.size());
    for (const RefEntry& e : o.ref)
        out.ref.push_back({vmap.at(e.v), e.failure, map_mask(e.witness, vmap)});
    return out;
}

// Exhaustive decision procedure on induced subgraphs of one fixed graph,
// memoized by canonical form. Entries are stored in canonical-position
// coordinates so isomorphic subgraphs share them; the canonical order
// translates back to graph indices on each hit.
struct VDSearch {
    std::vector<uint32_t> adj;
    std::unordered_map<std::string, Outcome> memo;

    explicit VDSearch(const Graph& g) : adj(g.adjacency_masks()) {}

    Outcome solve(uint32_t alive) {
        if (edgeless_mask(adj, alive)) {
            Outcome o;
            o.vd = true;
            o.cert = std::make_shared<Node>();
            return o;
        }
        auto [order, form] = canonical_pair_masked(adj, alive);
        if (auto it = memo.find(form); it != memo.end()) return map_outcome(it->second, order);

        // Candidates: dominated vertices first, then decreasing degree.
        std::vector<int> cand;
        for (uint32_t m = alive; m;) {
            cand.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        auto rank = [&](int v) {
            return std::make_tuple(dominating_witness(adj, alive, v) < 0,
                                   -std::popcount(adj[v] & alive), v);
        };
        std::sort(cand.begin(), cand.end(), [&](int a, int b) { return rank(a) < rank(b); });

        Outcome result;
        std::vector<RefEntry> refs;
        for (int x : cand) {
            MaskShed s = shedding_mask(adj, alive, x);
            if (!s.shedding) {
                refs.push_back({x, kNotShedding, s.witness});
                continue;
            }
            Outcome del = solve(alive & ~(1u << x));
            if (!del.vd) {
                refs.push_back({x, kDelBranch, 0u});
                continue;
            }
            Outcome link = solve(alive & ~(adj[x] | (1u << x)));
            if (!link.vd) {
                refs.push_back({x, kLinkBranch, 0u});
                continue;
            }
            auto node = std::make_shared<Node>();
            node->edgeless = false;
            node->v = x;
            node->del = del.cert;
            node->link = link.cert;
            result.vd = true;
            result.cert = node;
            break;
        }
        if (!result.vd) {
            std::sort(refs.begin(), refs.end(),
                      [](const RefEntry& a, const RefEntry& b) { return a.v < b.v; });
            result.ref = std::move(refs);
        }

        std::vector<int> to_pos(adj.size(), -1);
        for (size_t p = 0; p < order.size(); ++p) to_pos[order[p]] = static_cast<int>(p);
        memo.emplace(std::move(form), map_outcome(result, to_pos));
        return result;
    }
};

uint32_t full_mask(const Graph& g) {
    int n = g.vertex_count();
    return n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1);
}

std::vector<std::string> labels_of_mask(const Graph& g, uint32_t m) {
    std::vector<std::string> out;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out.push_back(g.label(v));
    }
    return out;
}

using CertPtr = std::shared_ptr<const VDCertificate>;

CertPtr edgeless_cert() { return std::make_shared<VDCertificate>(); }

CertPtr shed_node(std::string v, CertPtr del, CertPtr link) {
    auto n = std::make_shared<VDCertificate>();
    n->edgeless = false;
    n->vertex = std::move(v);
    n->del = std::move(del);
    n->link = std::move(link);
    return n;
}

CertPtr to_labels(const NodePtr& c, const Graph& g) {
    if (c->edgeless) return edgeless_cert();
    return shed_node(g.label(c->v), to_labels(c->del, g), to_labels(c->link, g));
}

template <typename F>
CertPtr rename_cert(const CertPtr& c, F&& f) {
    if (c->edgeless) return c;
    return shed_node(f(c->vertex), rename_cert(c->del, f), rename_cert(c->link, f));
}

bool replay_mask(const Graph& g, const std::vector<uint32_t>& adj, uint32_t alive,
                 const VDCertificate& c) {
    if (c.edgeless) return edgeless_mask(adj, alive);
    if (!c.del || !c.link) return false;
    if (!g.has_vertex(c.vertex)) return false;
    int x = g.index_of(c.vertex);
    if (!(alive >> x & 1u)) return false;
    if (dominating_witness(adj, alive, x) < 0 && !shedding_mask(adj, alive, x).shedding)
        return false;
    return replay_mask(g, adj, alive & ~(1u << x), *c.del) &&
           replay_mask(g, adj, alive & ~(adj[x] | (1u << x)), *c.link);
}

}  // namespace

SheddingCheck is_shedding_vertex(const Graph& g, const std::string& x) {
    int v = g.index_of(x);
    MaskShed s = shedding_mask(g.adjacency_masks(), full_mask(g), v);
    SheddingCheck out;
    out.shedding = s.shedding;
    if (!s.shedding) out.witness = labels_of_mask(g, s.witness);
    return out;
}

bool dominated_shedding(const Graph& g, const std::string& x) {
    return dominating_witness(g.adjacency_masks(), full_mask(g), g.index_of(x)) >= 0;
}

VDResult is_vertex_decomposable(const Graph& g) {
    if (g.vertex_count() > kIsoVertexLimit)
        throw std::length_error("is_vertex_decomposable: more than " +
                                std::to_string(kIsoVertexLimit) + " vertices");
    VDSearch search(g);
    Outcome o = search.solve(full_mask(g));
    VDResult r;
    r.decomposable = o.vd;
    if (o.vd) {
        r.certificate = to_labels(o.cert, g);
    } else {
        r.refutation.reserve(o.ref.size());
        for (const RefEntry& e : o.ref)
            r.refutation.push_back(
                {g.label(e.v), failure_name(e.failure), labels_of_mask(g, e.witness)});
    }
    return r;
}

bool replay_certificate(const Graph& g, const VDCertificate& cert) {
    return replay_mask(g, g.adjacency_masks(), full_mask(g), cert);
}

bool validate_refutation(const Graph& g, const std::vector<VDRefutationEntry>& refutation) {
    if (g.vertex_count() > kIsoVertexLimit)
        throw std::length_error("validate_refutation: more than " +
                                std::to_string(kIsoVertexLimit) + " vertices");
    const auto& adj = g.adjacency_masks();
    uint32_t alive = full_mask(g);
    // An edgeless graph is decomposable outright, so no refutation stands.
    if (edgeless_mask(adj, alive)) return false;
    if (static_cast<int>(refutation.size()) != g.vertex_count()) return false;

    VDSearch search(g);
    std::vector<bool> seen(g.vertex_count(), false);
    for (const VDRefutationEntry& e : refutation) {
        if (!g.has_vertex(e.vertex)) return false;
        int x = g.index_of(e.vertex);
        if (seen[x]) return false;
        seen[x] = true;
        if (e.failure == "not-shedding") {
            uint32_t c = 0;
            for (const std::string& lbl : e.witness) {
                if (!g.has_vertex(lbl)) return false;
                c |= 1u << g.index_of(lbl);
            }
            uint32_t nx = adj[x] & alive;
            if (c & (nx | (1u << x))) return false;  // must avoid N[x]
            for (uint32_t m = c; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (adj[v] & c) return false;  // must be independent
            }
            for (uint32_t m = nx; m;) {
                int y = std::countr_zero(m);
                m &= m - 1;
                if ((adj[y] & c) == 0) return false;  // y would extend it
            }
        } else if (e.failure == "del-branch") {
            if (!shedding_mask(adj, alive, x).shedding) return false;
            if (search.solve(alive & ~(1u << x)).vd) return false;
        } else if (e.failure == "link-branch") {
            if (!shedding_mask(adj, alive, x).shedding) return false;
            if (search.solve(alive & ~(adj[x] | (1u << x))).vd) return false;
        } else {
            return false;
        }
    }
    return true;
}

namespace {

// Recursive certificate construction for a forest gadget. Zero-strength
// edges contribute no layered edges, so the recursion works on the subforest
// spanned by positive entries; the produced certificate never names the
// leftover isolated vertices, and replay tolerates them.
CertPtr guided_tree_impl(const Graph& forest, const std::vector<int>& ktuple) {
    std::vector<int> live_edges;
    for (int e = 0; e < forest.edge_count(); ++e)
        if (ktuple[e] > 0) live_edges.push_back(e);
    if (live_edges.empty()) return edgeless_cert();

    // Subforest on the positive edges, original vertex and edge order.
    std::vector<bool> covered(forest.vertex_count(), false);
    for (int e : live_edges) {
        covered[forest.edges()[e].first] = true;
        covered[forest.edges()[e].second] = true;
    }
    std::vector<std::string> vlabels;
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (covered[v]) vlabels.push_back(forest.label(v));
    std::vector<std::pair<std::string, std::string>> elabels;
    std::vector<int> pk;
    for (int e : live_edges) {
        elabels.push_back(forest.edge_labels(e));
        pk.push_back(ktuple[e]);
    }
    Graph pruned(vlabels, elabels);

    // Lowest-index leaf and its support.
    int xa = -1;
    for (int v = 0; v < pruned.vertex_count() && xa < 0; ++v)
        if (pruned.degree(v) == 1) xa = v;
    const std::string a = pruned.label(xa);
    const std::string b = pruned.label(pruned.neighbors(xa)[0]);

    // Deletion branch: same forest, every entry at the support decremented,
    // surviving support layers shifted down by one.
    LeafCollapse lc = leaf_collapse(pruned, pk, a);
    CertPtr del = rename_cert(guided_tree_impl(lc.base, lc.ktuple), [&b](const std::string& v) {
        auto [base, layer] = parse_layered(v);
        return base == b ? layered_label(base, layer + 1) : v;
    });

    // Link branch: certificate for the decomposition gadget, carried over by
    // its vertex map f.
    LinkDecomposition ld = link_decomposition(pruned, pk, b);
    std::map<std::string, std::string> fmap(ld.f.begin(), ld.f.end());
    CertPtr link = rename_cert(guided_tree_impl(ld.base, ld.ktuple),
                               [&fmap](const std::string& v) { return fmap.at(v); });

    return shed_node(layered_label(b, 1), std::move(del), std::move(link));
}

}  // namespace

std::shared_ptr<const VDCertificate> guided_vd_tree_gadget(const Graph& base,
                                                           const std::vector<int>& ktuple) {
    GraphClass c = classify(base);
    if (c.kind != GraphClass::Kind::Tree && c.kind != GraphClass::Kind::Forest)
        throw std::invalid_argument("guided_vd_tree_gadget: base graph must be a forest");
    if (static_cast<int>(ktuple.size()) != base.edge_count())
        throw std::invalid_argument("guided_vd_tree_gadget: tuple length must match edge count");
    for (int k : ktuple)
        if (k < 0) throw std::invalid_argument("guided_vd_tree_gadget: negative entry");
    return guided_tree_impl(base, ktuple);
}

std::shared_ptr<const VDCertificate> guided_vd_unicyclic(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("guided_vd_unicyclic: negative strength");
    GraphClass c = classify(g);
    if (c.kind != GraphClass::Kind::Unicyclic)
        throw std::invalid_argument("guided_vd_unicyclic: graph must be connected unicyclic");
    if (c.cycle_length == 3 || c.cycle_length == 5)
        throw std::invalid_argument("guided_vd_unicyclic: cycle length 3 or 5 unsupported");

    // The cycle is what survives peeling degree-1 vertices.
    int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        deg[v] = 0;
        for (int w : g.neighbors(v))
            if (deg[w] > 0 && --deg[w] == 1) q.push(w);
    }

    // Lowest-index pendant vertex whose support sits on the cycle.
    int xa = -1, xb = -1;
    for (int v = 0; v < n && xa < 0; ++v)
        if (g.degree(v) == 1 && deg[g.neighbors(v)[0]] > 0) {
            xa = v;
            xb = g.neighbors(v)[0];
        }
    if (xa < 0) throw std::invalid_argument("guided_vd_unicyclic: no whisker on the cycle");
    const std::string b = g.label(xb);

    if (k == 0) return edgeless_cert();

    // Shedding x_b layer by layer leaves the forest on G - {x_b}; each link
    // along the way is a reweighted forest gadget on the same base, with the
    // support's neighbors' layers shifted to the surviving range.
    Graph h1 = g.delete_vertices({b});
    Graph h2 = g.delete_vertices(g.neighborhood(b, /*closed=*/true));
    std::set<std::string> nb;
    for (int u : g.neighbors(xb)) nb.insert(g.label(u));
    std::vector<bool> h1_meets_nb(h1.edge_count(), false);
    for (int e = 0; e < h1.edge_count(); ++e) {
        auto [u, v] = h1.edge_labels(e);
        h1_meets_nb[e] = nb.count(u) > 0 || nb.count(v) > 0;
    }

    CertPtr cert = guided_vd_tree_gadget(h1, std::vector<int>(h1.edge_count(), k));
    for (int i = k; i >= 1; --i) {
        CertPtr phi;
        if (i == 1) {
            phi = guided_vd_tree_gadget(h2, std::vector<int>(h2.edge_count(), k));
        } else {
            std::vector<int> mi(h1.edge_count(), k);
            for (int e = 0; e < h1.edge_count(); ++e)
                if (h1_meets_nb[e]) mi[e] = i - 1;
            int shift = k + 1 - i;
            phi = rename_cert(guided_vd_tree_gadget(h1, mi), [&](const std::string& v) {
                auto [base, layer] = parse_layered(v);
                return nb.count(base) > 0 ? layered_label(base, layer + shift) : v;
            });
        }
        cert = shed_node(layered_label(b, i), std::move(cert), std::move(phi));
    }
    return cert;
}

}  // namespace vcover
