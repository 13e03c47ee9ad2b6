#include "vcover/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace vcover {

namespace {

void bron_kerbosch(const std::vector<uint32_t>& comp, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (uint32_t m = px; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int gain = std::popcount(p & comp[v]);
        if (gain > best) {
            best = gain;
            pivot = v;
        }
    }
    for (uint32_t m = p & ~comp[pivot]; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint32_t bit = 1u << v;
        bron_kerbosch(comp, r | bit, p & comp[v], x & comp[v], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<uint32_t> maximal_independent_sets(const std::vector<uint32_t>& adj, uint32_t alive) {
    // Maximal independent sets are the maximal cliques of the complement.
    std::vector<uint32_t> comp(adj.size(), 0u);
    for (size_t v = 0; v < adj.size(); ++v)
        if (alive >> v & 1u) comp[v] = alive & ~(adj[v] | (1u << v));
    std::vector<uint32_t> out;
    bron_kerbosch(comp, 0u, alive, 0u, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Deduplicate, drop faces strictly contained in others, sort ascending.
std::vector<uint32_t> maximalize(std::vector<uint32_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<uint32_t> out;
    for (size_t i = 0; i < masks.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < masks.size() && !covered; ++j)
            covered = i != j && (masks[i] & ~masks[j]) == 0;
        if (!covered) out.push_back(masks[i]);
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<uint32_t> facet_masks)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() > 32)
        throw std::length_error("simplicial complex: more than 32 vertices");
    {
        auto sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("simplicial complex: duplicate vertex");
    }
    uint32_t full = vertices_.empty() ? 0u
                                      : (vertices_.size() == 32 ? ~0u
                                                                : (1u << vertices_.size()) - 1);
    for (uint32_t f : facet_masks)
        if (f & ~full) throw std::invalid_argument("simplicial complex: facet out of range");
    facets_ = maximalize(std::move(facet_masks));

    // Drop vertices covered by no facet, so every listed vertex is a face.
    uint32_t used = 0;
    for (uint32_t f : facets_) used |= f;
    if (used != full) {
        std::vector<std::string> kept;
        std::vector<int> newpos(vertices_.size(), -1);
        for (size_t v = 0; v < vertices_.size(); ++v)
            if (used >> v & 1u) {
                newpos[v] = static_cast<int>(kept.size());
                kept.push_back(vertices_[v]);
            }
        for (uint32_t& f : facets_) {
            uint32_t nf = 0;
            for (uint32_t m = f; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                nf |= 1u << newpos[v];
            }
            f = nf;
        }
        vertices_ = std::move(kept);
        std::sort(facets_.begin(), facets_.end());
    }
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     const std::vector<std::vector<std::string>>& facets)
    : SimplicialComplex(vertices, [&] {
          std::vector<uint32_t> masks;
          masks.reserve(facets.size());
          for (const auto& f : facets) {
              uint32_t m = 0;
              for (const auto& lbl : f) {
                  auto it = std::find(vertices.begin(), vertices.end(), lbl);
                  if (it == vertices.end())
                      throw std::invalid_argument("simplicial complex: unknown vertex '" + lbl +
                                                  "'");
                  m |= 1u << (it - vertices.begin());
              }
              masks.push_back(m);
          }
          return masks;
      }()) {}

std::vector<std::vector<std::string>> SimplicialComplex::facets() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (uint32_t f : facets_) out.push_back(labels_of(f));
    return out;
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) throw std::invalid_argument("dimension: void complex");
    int d = -1;
    for (uint32_t f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_face(uint32_t mask) const {
    for (uint32_t f : facets_)
        if ((mask & ~f) == 0) return true;
    return false;
}

bool SimplicialComplex::is_face(const std::vector<std::string>& face) const {
    return is_face(mask_of(face));
}

uint32_t SimplicialComplex::mask_of(const std::vector<std::string>& face) const {
    uint32_t m = 0;
    for (const auto& lbl : face) {
        auto it = std::find(vertices_.begin(), vertices_.end(), lbl);
        if (it == vertices_.end())
            throw std::invalid_argument("simplicial complex: unknown vertex '" + lbl + "'");
        m |= 1u << (it - vertices_.begin());
    }
    return m;
}

std::vector<std::string> SimplicialComplex::labels_of(uint32_t mask) const {
    std::vector<std::string> out;
    for (uint32_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out.push_back(vertices_.at(v));
    }
    return out;
}

SimplicialComplex SimplicialComplex::restrict_to(const std::vector<std::string>& sigma) const {
    uint32_t s = mask_of(sigma);
    std::vector<uint32_t> restricted;
    restricted.reserve(facets_.size());
    for (uint32_t f : facets_) restricted.push_back(f & s);
    return SimplicialComplex(vertices_, std::move(restricted));
}

SimplicialComplex independence_complex(const Graph& g) {
    uint32_t alive = g.vertex_count() == 32 ? ~0u
                     : g.vertex_count() == 0 ? 0u
                                             : (1u << g.vertex_count()) - 1;
    return SimplicialComplex(g.vertex_labels(), maximal_independent_sets(g.adjacency_masks(), alive));
}

SimplicialComplex deletion(const SimplicialComplex& d, const std::vector<std::string>& set) {
    uint32_t s = d.mask_of(set);
    std::vector<uint32_t> out;
    for (uint32_t f : d.facet_masks()) out.push_back(f & ~s);
    return SimplicialComplex(d.vertex_labels(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& d, const std::vector<std::string>& face) {
    uint32_t fm = d.mask_of(face);
    if (!d.is_face(fm)) throw std::invalid_argument("link: not a face");
    std::vector<uint32_t> out;
    for (uint32_t f : d.facet_masks())
        if ((fm & ~f) == 0) out.push_back(f & ~fm);
    return SimplicialComplex(d.vertex_labels(), std::move(out));
}

}  // namespace vcover
