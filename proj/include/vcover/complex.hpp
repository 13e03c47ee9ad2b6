#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcover/graph.hpp"

namespace vcover {

// All maximal independent sets of the induced subgraph on `alive`, as bit
// masks in increasing numeric order. The graph on zero vertices yields the
// single (empty) set.
std::vector<uint32_t> maximal_independent_sets(const std::vector<uint32_t>& adj, uint32_t alive);

// Simplicial complex represented by its facets over an ordered vertex list.
// Construction normalizes: non-maximal faces are pruned, and vertices lying
// in no facet are dropped from the vertex list, so every listed vertex is a
// face. The empty complex {∅} has one empty facet; a void complex (no faces
// at all) has none.
class SimplicialComplex {
  public:
    SimplicialComplex() : facets_{0u} {}
    SimplicialComplex(std::vector<std::string> vertices, std::vector<uint32_t> facet_masks);
    SimplicialComplex(std::vector<std::string> vertices,
                      const std::vector<std::vector<std::string>>& facets);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertex_labels() const { return vertices_; }
    const std::vector<uint32_t>& facet_masks() const { return facets_; }
    std::vector<std::vector<std::string>> facets() const;

    // Dimension of the complex: -1 for {∅}; throws for a void complex.
    int dimension() const;

    bool is_face(uint32_t mask) const;
    bool is_face(const std::vector<std::string>& face) const;

    uint32_t mask_of(const std::vector<std::string>& face) const;
    std::vector<std::string> labels_of(uint32_t mask) const;

    // Subcomplex of faces contained in the given vertex set.
    SimplicialComplex restrict_to(const std::vector<std::string>& sigma) const;

    bool operator==(const SimplicialComplex& o) const {
        return vertices_ == o.vertices_ && facets_ == o.facets_;
    }

  private:
    std::vector<std::string> vertices_;
    std::vector<uint32_t> facets_;
};

// Independence complex: facets are the maximal independent sets.
SimplicialComplex independence_complex(const Graph& g);

// Faces disjoint from the given vertex set.
SimplicialComplex deletion(const SimplicialComplex& d, const std::vector<std::string>& set);

// Faces H with H ∪ F a face and H ∩ F empty; F must be a face.
SimplicialComplex link(const SimplicialComplex& d, const std::vector<std::string>& face);

}  // namespace vcover
