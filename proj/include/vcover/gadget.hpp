#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vcover/graph.hpp"

namespace vcover {

// Layered vertex naming: "<base>@<layer>", layers starting at 1. This is the
// single naming authority shared by the layered-graph construction and by
// ideal polarization, so cover ideals of layered graphs and polarized powers
// compare as plain generator sets.
std::string layered_label(const std::string& base, int layer);
std::pair<std::string, int> parse_layered(const std::string& label);

// Layer names 1..m of a base variable; m = 0 gives the empty list.
std::vector<std::string> polarization_naming(const std::string& base, int m);

// Block graph of a single edge {xi,xj} at strength p: vertices xi@1..xi@p,
// xj@1..xj@p and edges {xi@l, xj@m} for l+m <= p+1, so p(p+1)/2 edges.
// p = 0 is the edgeless block on the two layer-1 vertices.
Graph edge_power(const std::string& xi, const std::string& xj, int p);

// Union of one block per base edge, sharing layered vertices. Base vertices
// with no incident edge contribute nothing; a vertex incident only to
// strength-0 edges still contributes its layer-1 vertex.
class LayeredGraph {
  public:
    LayeredGraph(Graph base, std::vector<int> ktuple);

    const Graph& base() const { return base_; }
    const std::vector<int>& ktuple() const { return k_; }
    const Graph& graph() const { return graph_; }

    // Number of layers of a base vertex: max(1, max incident entry), or 0 if
    // the base vertex is isolated in the base graph.
    int layer_count(int base_vertex) const;

  private:
    Graph base_;
    std::vector<int> k_;
    std::vector<int> layers_;
    Graph graph_;
};

LayeredGraph build_gkt(const Graph& base, const std::vector<int>& ktuple);

// Effect of deleting the layer-1 vertex of a leaf's support from the layered
// graph: the same base forest with every entry at the support decremented
// (floored at 0). Contract, checked by tests:
//   (build_gkt(G,k).graph() minus {x_b@1}) stripped of isolated vertices
//   is isomorphic to build_gkt(G,collapse.ktuple).graph() stripped likewise.
struct LeafCollapse {
    Graph base;
    std::vector<int> ktuple;
    // True when the leaf's support itself has degree 1 (a two-vertex
    // component), where the leaf/support roles are symmetric.
    bool symmetric_pair = false;
};
LeafCollapse leaf_collapse(const Graph& forest, const std::vector<int>& ktuple,
                           const std::string& leaf);

// Decomposition of the layered graph minus the closed neighborhood of the
// support's layer-1 vertex. `rhs` is the materialized layered graph of
// `base`/`ktuple` (surviving edges first in original order, then residual
// edges at the support's non-leaf neighbors), stripped of isolated vertices.
// `f` maps each rhs vertex to a vertex of build_gkt(forest,k).graph():
// identity except at a non-leaf neighbor x_u of the support, where layer t
// maps to layer t + (entry of the support edge at x_u). Contract, checked by
// tests: f is an edge-preserving bijection onto the stripped remainder.
struct LinkDecomposition {
    Graph base;
    std::vector<int> ktuple;
    Graph rhs;
    std::vector<std::pair<std::string, std::string>> f;
};
LinkDecomposition link_decomposition(const Graph& forest, const std::vector<int>& ktuple,
                                     const std::string& support);

}  // namespace vcover
