#ifndef VCOVER_GRAPH_ISO_HPP
#define VCOVER_GRAPH_ISO_HPP

/**
 * Graph isomorphism at desk scale: canonical labelings by color refinement
 * with individualization, witness-producing isomorphism tests, and
 * enumeration of trees up to isomorphism.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcover/graph.hpp"

namespace vcover {

/// Hard ceiling for the canonical-labeling search.
inline constexpr int kIsoVertexLimit = 24;

/**
 * Canonical labeling of the subgraph induced on the set bits of `alive`.
 *
 * `adj[v]` is the neighborhood mask of vertex v. Returns the vertices of
 * `alive` in canonical order: result[p] = vertex placed at position p. Two
 * induced subgraphs get the same canonical edge set exactly when they are
 * isomorphic.
 */
std::vector<int> canonical_order_masked(const std::vector<uint32_t>& adj, uint32_t alive);

/// Canonical order for a whole graph (at most kIsoVertexLimit vertices).
std::vector<int> canonical_order(const Graph& g);

/// Canonical form string; equal strings <=> isomorphic graphs.
std::string canonical_form(const Graph& g);

/// Canonical form of the subgraph induced on `alive`.
std::string canonical_form_masked(const std::vector<uint32_t>& adj, uint32_t alive);

/// Canonical order and form from a single search.
std::pair<std::vector<int>, std::string> canonical_pair_masked(const std::vector<uint32_t>& adj,
                                                               uint32_t alive);

/**
 * Isomorphism test with witness: returns a label bijection g -> h when the
 * graphs are isomorphic, std::nullopt otherwise.
 */
std::optional<std::vector<std::pair<std::string, std::string>>> are_isomorphic(const Graph& g,
                                                                               const Graph& h);

/// Every tree on n vertices, one representative per isomorphism class,
/// labeled x1..xn. Grown by attaching a leaf to each smaller representative
/// in every position, deduplicated by rooted shape keys. Requires
/// 1 <= n <= 10.
std::vector<Graph> enumerate_trees(int n);

}  // namespace vcover

#endif
